#pragma once

#include <cstddef>
#include <optional>

#include "profsmooth/median.hpp"
#include "profsmooth/peaks.hpp"
#include "profsmooth/series.hpp"
#include "profsmooth/smoothing.hpp"

namespace profsmooth {

/// How to cut the zero runs at the ends of a scan.
struct TrimPolicy {
    enum class Mode { Off, Auto, Absolute, Explicit };

    Mode mode = Mode::Auto;
    double relative = 0.01; // Auto: threshold as a fraction of (max - min)
    double epsilon = 0.0;   // Absolute
    std::size_t prefix = 0; // Explicit
    std::size_t suffix = 0;

    static TrimPolicy off() { return {Mode::Off, 0.0, 0.0, 0, 0}; }
    static TrimPolicy auto_relative(double fraction = 0.01) {
        return {Mode::Auto, fraction, 0.0, 0, 0};
    }
    static TrimPolicy absolute(double epsilon) {
        return {Mode::Absolute, 0.0, epsilon, 0, 0};
    }
    static TrimPolicy explicit_cut(std::size_t prefix, std::size_t suffix) {
        return {Mode::Explicit, 0.0, 0.0, prefix, suffix};
    }
};

/// Which smoothing operator the pipeline applies, with its parameter.
struct SmootherSpec {
    enum class Method { MaGeneral, MaCentered, Ea, Rea, Sea, Median };

    Method method = Method::Sea;
    double alpha = 0.1;   // exponential family (default glide 10)
    std::size_t ell = 0;  // centered window reach (MaCentered, Median)
    std::size_t n = 0;    // MaGeneral: window size minus one

    static SmootherSpec sea_glide(double glide);
    static SmootherSpec ea_glide(double glide);
    static SmootherSpec rea_glide(double glide);
    static SmootherSpec ma_centered_reach(std::size_t ell);
    static SmootherSpec median_reach(std::size_t ell);
};

/// Applies the selected operator. Data-dependent failures (window longer
/// than the series) surface as std::invalid_argument from the operators.
Series apply_smoother(const Series& y, const SmootherSpec& spec);

struct SideExpectation {
    int coarse;
    int fine;
    int tolerance;
};

/// Full processing chain in fixed order: trim, median pre-filter, smoother,
/// peak count (and, if expectations are given, the side decision).
struct PipelineConfig {
    TrimPolicy trim = TrimPolicy::auto_relative();
    std::optional<std::size_t> median_glide;              // odd window, or off
    std::optional<SmootherSpec> smoother = SmootherSpec{}; // default sea, glide 10
    double prominence = 0.0;
    std::optional<SideExpectation> expectation;

    /// Throws ConfigError for statically invalid settings (even median
    /// window, overlapping decision bands, alpha outside [0,1], ...).
    void validate() const;
};

/// Every intermediate stage is retained so it can be emitted or inspected.
/// Peak indices in `report` refer to the indexing of the original input
/// (offsets composed across trimming and window shortening).
struct PipelineResult {
    Series input;
    std::size_t trim_prefix = 0;
    std::size_t trim_suffix = 0;
    std::optional<Series> trimmed;
    std::optional<Series> median_filtered;
    std::optional<Series> smoothed;
    PeakReport report;
    std::optional<SideDecision> decision;

    /// Output of the last enabled stage (the input itself if none ran).
    const Series& final_series() const noexcept;
};

/// Runs the chain. Throws ConfigError (invalid configuration) or
/// PipelineError carrying the name of the failing stage.
PipelineResult run_pipeline(const Series& y, const PipelineConfig& cfg);

/// Threshold outlier detector: flags samples whose residual against a short
/// moving median (reach `ell`, shrunk symmetrically at the edges) exceeds
/// `k` times the median absolute residual. A pragmatic stand-in — the
/// glide-length rule itself assumes outlier positions are known; pair this
/// with minimal_glide_length() to pick a median window.
OutlierMask detect_outliers(const Series& y, std::size_t ell = 2, double k = 8.0);

} // namespace profsmooth
