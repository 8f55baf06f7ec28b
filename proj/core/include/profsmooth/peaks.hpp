#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "profsmooth/series.hpp"

namespace profsmooth {

/// Result of cutting near-zero runs off the ends of a scan.
struct TrimResult {
    /// Empty when the whole series was at or below the threshold.
    std::optional<Series> trimmed;
    std::size_t prefix_len = 0;
    std::size_t suffix_len = 0;

    bool everything_trimmed() const noexcept { return !trimmed.has_value(); }
};

/// Removes the maximal leading and trailing runs with |y_i| <= epsilon.
/// Sub-threshold values strictly inside the data are kept. prefix_len +
/// trimmed size + suffix_len always equals the input length; when everything
/// is trimmed the whole length is accounted to the prefix.
TrimResult trim_zero_runs(const Series& y, double epsilon);

/// Local maxima of a series. A peak is a maximal run of equal values that
/// is strictly greater than both neighbouring values; a plateau counts once
/// and is anchored at its first sample. Runs touching either end of the
/// series never count.
struct PeakReport {
    std::size_t count = 0;
    /// 1-based positions in the original indexing of the analysed series.
    std::vector<std::size_t> peak_indices;
    /// Run length per peak, parallel to peak_indices.
    std::vector<std::size_t> plateau_lengths;
};

/// Counts peaks. With min_prominence > 0 a peak is kept only if it exceeds,
/// by at least that amount, the higher of the two valley minima separating
/// it from the adjacent peak candidates (or the series ends). Series
/// shorter than 3 samples have no peaks.
PeakReport count_peaks(const Series& y, double min_prominence = 0.0);

enum class Side { Coarse, Fine, Unknown };

const char* to_string(Side side) noexcept;

struct SideDecision {
    Side verdict = Side::Unknown;
    int measured_count = 0;
    int expected_coarse = 0;
    int expected_fine = 0;
    int tolerance = 0;
};

/// Decides which washer side was scanned by comparing the measured peak
/// count against the expected coarse and fine tooth counts. The tolerance
/// bands must be disjoint: 2*tolerance < |expected_coarse - expected_fine|
/// (std::invalid_argument otherwise). Counts outside both bands give
/// Side::Unknown.
SideDecision decide_side(const PeakReport& report, int expected_coarse,
                         int expected_fine, int tolerance);

} // namespace profsmooth
