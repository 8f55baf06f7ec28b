#pragma once

#include <cstddef>

#include "profsmooth/series.hpp"

namespace profsmooth {

/// Window parameters of the general moving mean. The window holds n+1
/// samples, `ell` of which lie before the anchor index (0 <= ell <= n).
/// ell = 0 is the right-sided, ell = n the left-sided variant; even n with
/// ell = n/2 is the centered one.
struct MaParams {
    std::size_t n;
    std::size_t ell;

    /// Throws std::invalid_argument unless ell <= n.
    MaParams(std::size_t n, std::size_t ell);

    static MaParams centered(std::size_t ell) { return MaParams(2 * ell, ell); }

    std::size_t window() const noexcept { return n + 1; }
};

/// Smoothing factor of the exponential family, in [0, 1]. Its inverse is
/// the glide length, the window-equivalent "memory": sea with glide L
/// smooths about as strongly as a moving mean over L samples, without
/// shortening the data.
class Alpha {
public:
    /// Throws std::invalid_argument outside [0, 1].
    explicit Alpha(double value);

    /// alpha = 1/glide for glide >= 1.
    static Alpha from_glide_length(double glide);

    double value() const noexcept { return value_; }

    /// Defined for value() > 0 only; throws std::domain_error at 0.
    double glide_length() const;

private:
    double value_;
};

// All operators below are pure and safe to call concurrently on distinct
// series. Every output value is a convex combination of input values.

/// Moving arithmetic mean over windows of n+1 samples. Output has length
/// N - n with `ell` samples dropped in front and n - ell at the back; the
/// values themselves do not depend on ell, only their alignment does.
/// Throws std::invalid_argument when n + 1 > N.
Series ma_general(const Series& y, const MaParams& p);

/// Centered moving mean over 2*ell+1 samples (ma_general with n = 2*ell).
/// Window sums are accumulated in mirror pairs so a palindromic input maps
/// to a palindromic output bit-exactly.
Series ma_centered(const Series& y, std::size_t ell);

/// Same result as ma_centered, computed incrementally: the first window is
/// averaged directly, every further value is updated from its predecessor by
/// one add, one subtract and one divide. Agrees with ma_centered to within
/// accumulated rounding (~1e-9 relative at N = 750).
Series ma_centered_recursive(const Series& y, std::size_t ell);

/// Exponential average, left to right:
///   out[1] = y[1],  out[i] = (1-alpha)*out[i-1] + alpha*y[i].
/// Length-preserving. alpha = 1 is the identity, alpha = 0 freezes y[1].
Series ea(const Series& y, Alpha a);

/// Direct evaluation of the exponential average as an explicit geometric
/// weighting of the history,
///   out[i] = (1-alpha)^(i-1)*y[1] + alpha * sum_{r=2..i} (1-alpha)^(i-r)*y[r],
/// summed smallest weights first. Quadratic cost; kept as the independent
/// reference for `ea`, not meant for production-sized call sites.
Series ea_closed_form(const Series& y, Alpha a);

/// Exponential average from the right: the same recursion run back to
/// front, out[N] = y[N], out[i] = (1-alpha)*out[i+1] + alpha*y[i].
/// Identical, bit for bit, to reverse(ea(reverse(y), a)).
Series rea(const Series& y, Alpha a);

/// Symmetrized exponential average: the elementwise mean of ea and rea.
/// Keeps the full length, weights y[i] strongest like the one-sided
/// variants, and cancels their opposite phase displacements, so mirror
/// symmetry of the input is preserved. This is the recommended smoother.
Series sea(const Series& y, Alpha a);

} // namespace profsmooth
