#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "profsmooth/series.hpp"

namespace profsmooth {

/// Window reach of the moving median; the window holds 2*ell+1 samples.
struct MedianParams {
    std::size_t ell;
};

/// Flags outlier positions of a series; same length as the series.
using OutlierMask = std::vector<bool>;

/// Middle order statistic of an odd-sized set of values. The result is
/// always a member of the input. Even cardinality is rejected
/// (std::invalid_argument).
double median_of(std::span<const double> window);

/// Moving median with window 2*ell+1. Output covers the interior positions
/// only (length N - 2*ell, offset advanced by ell, like the centered moving
/// mean). Throws std::invalid_argument when the window exceeds the series.
Series moving_median(const Series& y, MedianParams p);

/// Smallest odd window 2*ell+1 such that every contiguous window of that
/// size contains at most ell flagged positions. A moving median with that
/// glide length is guaranteed to suppress every flagged value. Returns 1
/// for an all-false mask. Throws std::invalid_argument if no window up to
/// the full series length satisfies the rule (outliers too dense) or if the
/// mask is empty.
std::size_t minimal_glide_length(const OutlierMask& mask);

} // namespace profsmooth
