#include "profsmooth/smoothing.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace profsmooth {

namespace {

void require_window(std::size_t window, std::size_t n) {
    if (window > n) {
        throw std::invalid_argument("window of " + std::to_string(window) +
                                    " samples exceeds series length " +
                                    std::to_string(n));
    }
}

} // namespace

MaParams::MaParams(std::size_t n_, std::size_t ell_) : n(n_), ell(ell_) {
    if (ell > n) {
        throw std::invalid_argument("moving-mean weight ell must not exceed n");
    }
}

Alpha::Alpha(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw std::invalid_argument("alpha must lie in [0, 1]");
    }
}

Alpha Alpha::from_glide_length(double glide) {
    if (!(glide >= 1.0)) {
        throw std::invalid_argument("glide length must be >= 1");
    }
    return Alpha(1.0 / glide);
}

double Alpha::glide_length() const {
    if (value_ == 0.0) {
        throw std::domain_error("glide length is undefined for alpha = 0");
    }
    return 1.0 / value_;
}

Series ma_general(const Series& y, const MaParams& p) {
    const auto& v = y.values();
    const std::size_t n = v.size();
    require_window(p.n + 1, n);

    const double inv = 1.0 / static_cast<double>(p.n + 1);
    std::vector<double> out;
    out.reserve(n - p.n);
    for (std::size_t j = 0; j + p.n < n; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k <= p.n; ++k) {
            acc += v[j + k];
        }
        out.push_back(acc * inv);
    }
    return Series(std::move(out), y.offset() + p.ell);
}

Series ma_centered(const Series& y, std::size_t ell) {
    const auto& v = y.values();
    const std::size_t n = v.size();
    require_window(2 * ell + 1, n);

    const double inv = 1.0 / static_cast<double>(2 * ell + 1);
    std::vector<double> out;
    out.reserve(n - 2 * ell);
    // Mirror-paired accumulation keeps palindromic inputs palindromic
    // bit-exactly (addition within a pair commutes).
    for (std::size_t c = ell; c + ell < n; ++c) {
        double acc = v[c];
        for (std::size_t k = 1; k <= ell; ++k) {
            acc += v[c - k] + v[c + k];
        }
        out.push_back(acc * inv);
    }
    return Series(std::move(out), y.offset() + ell);
}

Series ma_centered_recursive(const Series& y, std::size_t ell) {
    const auto& v = y.values();
    const std::size_t n = v.size();
    const std::size_t window = 2 * ell + 1;
    require_window(window, n);

    const double inv = 1.0 / static_cast<double>(window);
    std::vector<double> out;
    out.reserve(n - 2 * ell);

    double acc = 0.0;
    for (std::size_t k = 0; k < window; ++k) {
        acc += v[k];
    }
    out.push_back(acc * inv);
    for (std::size_t j = 1; j + 2 * ell < n; ++j) {
        out.push_back(out[j - 1] + (v[j + 2 * ell] - v[j - 1]) * inv);
    }
    return Series(std::move(out), y.offset() + ell);
}

Series ea(const Series& y, Alpha a) {
    const auto& v = y.values();
    const double alpha = a.value();
    const double keep = 1.0 - alpha;

    std::vector<double> out(v.size());
    out[0] = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) {
        out[i] = keep * out[i - 1] + alpha * v[i];
    }
    return Series(std::move(out), y.offset());
}

Series ea_closed_form(const Series& y, Alpha a) {
    const auto& v = y.values();
    const std::size_t n = v.size();
    const double alpha = a.value();
    const double keep = 1.0 - alpha;

    std::vector<double> pow_keep(n);
    pow_keep[0] = 1.0;
    for (std::size_t k = 1; k < n; ++k) {
        pow_keep[k] = pow_keep[k - 1] * keep;
    }

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Terms in ascending weight: the start value carries the smallest
        // factor, the current sample the largest.
        double acc = pow_keep[i] * v[0];
        for (std::size_t r = 1; r <= i; ++r) {
            acc += alpha * pow_keep[i - r] * v[r];
        }
        out[i] = acc;
    }
    return Series(std::move(out), y.offset());
}

Series rea(const Series& y, Alpha a) {
    const auto& v = y.values();
    const double alpha = a.value();
    const double keep = 1.0 - alpha;

    std::vector<double> out(v.size());
    out[v.size() - 1] = v[v.size() - 1];
    for (std::size_t i = v.size() - 1; i-- > 0;) {
        out[i] = keep * out[i + 1] + alpha * v[i];
    }
    return Series(std::move(out), y.offset());
}

Series sea(const Series& y, Alpha a) {
    const Series forward = ea(y, a);
    const Series backward = rea(y, a);

    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = 0.5 * (forward[i] + backward[i]);
    }
    return Series(std::move(out), y.offset());
}

} // namespace profsmooth
