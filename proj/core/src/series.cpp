#include "profsmooth/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace profsmooth {

Series::Series(std::vector<double> values, std::size_t offset)
    : values_(std::move(values)), offset_(offset) {
    if (values_.empty()) {
        throw std::invalid_argument("series must contain at least one value");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("series values must be finite");
        }
    }
}

Series reverse(const Series& y) {
    std::vector<double> out(y.values().rbegin(), y.values().rend());
    return Series(std::move(out));
}

} // namespace profsmooth
