#pragma once

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "profsmooth/median.hpp"
#include "profsmooth/series.hpp"

namespace profsmooth {

// Synthetic signal families used as the test corpus: a low-frequency base
// tone with a small high-frequency disturbance, a truncated Fourier square
// wave (ringing at the jumps), and an idealized tooth profile with optional
// injected defects. All generators are deterministic functions of their
// parameters.

/// y_i = amp1*sin(2*pi*i/period1) + amp2*sin(2*pi*i/period2), i = 1..n.
/// period1 is the base tone and must be the longer one.
struct SinusoidPair {
    double amp1;
    double period1; // samples per cycle of the base tone
    double amp2;
    double period2;
    std::size_t n_samples;
};

/// Partial sum of the square-wave Fourier series with `order` odd
/// harmonics, sampled over `periods` full periods:
///   f(x) = (4/pi) * sum_{k=1..order} sin((2k-1)x) / (2k-1).
/// The underlying square wave alternates between -1 and +1 (jump height 2).
struct FourierSquare {
    std::size_t order;
    std::size_t n_samples; // total, spread over all periods
    std::size_t periods;
};

/// Sawtooth-like profile: `teeth` repetitions of a linear rise over
/// rise_fraction of the pitch followed by a linear fall back to the base.
struct ToothProfile {
    std::size_t teeth;
    std::size_t samples_per_tooth;
    double rise_fraction; // in (0,1)
    double base_height;
    double tooth_height;
};

using GeneratorSpec = std::variant<SinusoidPair, FourierSquare, ToothProfile>;

/// Additive spikes: `magnitude` is added at each 0-based position.
struct Outliers {
    std::vector<std::size_t> positions;
    double magnitude;
};

/// Notches carved into the falling flanks of the given teeth (0-based).
/// Each notch rebounds back to the flank and thereby adds exactly one
/// spurious local maximum.
struct FlankArtifacts {
    std::vector<std::size_t> tooth_indices;
    double depth;
    std::size_t width; // samples; must fit on the falling flank
};

Series gen_sinusoid_pair(const SinusoidPair& s);
Series gen_fourier_square(const FourierSquare& s);
Series gen_tooth_profile(const ToothProfile& s);
Series generate(const GeneratorSpec& spec);

/// Returns the disturbed series together with the ground-truth mask of the
/// injected positions.
std::pair<Series, OutlierMask> inject_outliers(const Series& y, const Outliers& spec);

/// `profile` must be the spec the series was generated from; it locates the
/// falling flanks.
Series inject_flank_artifacts(const Series& y, const ToothProfile& profile,
                              const FlankArtifacts& spec);

/// Surrounds a signal with exact zero runs, emulating the idle stretches a
/// line scanner records before and after the part.
Series pad_zero_runs(const Series& y, std::size_t lead, std::size_t trail);

} // namespace profsmooth
