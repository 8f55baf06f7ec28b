#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace profsmooth {

/// A finite, non-empty sequence of measurement values over implicitly
/// equidistant support points.
///
/// Window-based operators drop samples at the ends of the data. `offset()`
/// records how many original samples were dropped in front, so that values
/// of a shortened series can still be reported against the indexing of the
/// series as it was read in. `original_index(i)` follows the 1-based
/// convention used in the emitted files.
class Series {
public:
    /// Throws std::invalid_argument if `values` is empty or contains a
    /// non-finite element.
    explicit Series(std::vector<double> values, std::size_t offset = 0);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::span<const double> span() const noexcept { return values_; }

    std::size_t offset() const noexcept { return offset_; }

    /// 1-based index of local position `i` in the original series.
    std::size_t original_index(std::size_t i) const noexcept { return offset_ + i + 1; }

    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    double front() const noexcept { return values_.front(); }
    double back() const noexcept { return values_.back(); }

private:
    std::vector<double> values_;
    std::size_t offset_;
};

/// Reads the series back to front: output[j] = y[N+1-j] in 1-based terms.
/// Alignment metadata does not survive reversal; the result has offset 0.
Series reverse(const Series& y);

} // namespace profsmooth
