#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurstlab/detail/math.hpp"
#include "hurstlab/error.hpp"

namespace hurstlab {

enum class Method {
    rs_single,     ///< closed-form solve of (R/S) = (tau/2)^H on the whole window
    rs_multiscale, ///< log-log regression of block-averaged R/S over a scale set
    dfa,           ///< detrended fluctuation analysis
};

/// Wire name used in CLI flags and emitted records.
inline std::string_view method_name(Method m) {
    switch (m) {
        case Method::rs_single: return "rs-single";
        case Method::rs_multiscale: return "rs";
        case Method::dfa: return "dfa";
    }
    return "?";
}

inline std::optional<Method> parse_method(std::string_view name) {
    if (name == "rs-single") return Method::rs_single;
    if (name == "rs") return Method::rs_multiscale;
    if (name == "dfa") return Method::dfa;
    return std::nullopt;
}

/// Block sizes for multi-scale estimation. Strictly increasing, each >= 4.
/// Whether the largest block fits a given window (max <= window/2) is
/// checked where the set meets the window.
class ScaleSet {
public:
    explicit ScaleSet(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
        if (blocks_.empty()) throw ScaleError("scale set is empty");
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            if (blocks_[i] < 4)
                throw ScaleError("block size " + std::to_string(blocks_[i]) + " below minimum 4");
            if (i > 0 && blocks_[i] <= blocks_[i - 1])
                throw ScaleError("block sizes not strictly increasing");
        }
    }

    /// {4, 8, 16, 32, 64, 128}: six dyadic points, sized for 500-point windows.
    static ScaleSet dyadic_default() { return ScaleSet({4, 8, 16, 32, 64, 128}); }

    const std::vector<std::size_t>& blocks() const { return blocks_; }
    std::size_t max_block() const { return blocks_.back(); }
    std::size_t count() const { return blocks_.size(); }

    void check_window(std::size_t window_length) const {
        if (window_length < 2 * max_block())
            throw ScaleError("window of length " + std::to_string(window_length) +
                             " too short for max block size " + std::to_string(max_block()) +
                             " (need >= 2x)");
    }

private:
    std::vector<std::size_t> blocks_;
};

struct FitPoint {
    double log_scale = 0.0;
    double log_fluctuation = 0.0;
};

/// One Hurst exponent with its fit diagnostics and the scales that produced it.
struct HurstEstimate {
    double h = 0.0;
    Method method = Method::dfa;
    std::vector<std::size_t> scales;
    std::vector<FitPoint> fit_points;
    double r_squared = 0.0;
    double std_err = 0.0;
    int poly_order = 0;                 ///< detrending order; meaningful for DFA only
    std::size_t degenerate_blocks = 0;  ///< constant blocks skipped (multiscale R/S)
};

struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double std_err = 0.0;
};

namespace detail {

/// R/S ratio of a window assumed finite; nullopt when the window is constant.
/// The extrema over partial sums include the empty prefix 0, so the range
/// can never be negative.
inline std::optional<double> rs_ratio(std::span<const double> window) {
    const std::size_t n = window.size();
    const double mu = mean(window);

    double run = 0.0, comp = 0.0;  // compensated running partial sum
    double hi = 0.0, lo = 0.0;     // extrema seeded with the empty prefix
    double sq = 0.0, sq_comp = 0.0;
    for (double v : window) {
        const double dev = v - mu;
        double t = run + dev;
        if (std::abs(run) >= std::abs(dev))
            comp += (run - t) + dev;
        else
            comp += (dev - t) + run;
        run = t;
        const double partial = run + comp;
        hi = std::max(hi, partial);
        lo = std::min(lo, partial);

        const double d2 = dev * dev;
        double t2 = sq + d2;
        sq_comp += (sq - t2) + d2;
        sq = t2;
    }
    const double variance = (sq + sq_comp) / static_cast<double>(n);
    if (!(variance > 0.0)) return std::nullopt;
    const double range = hi - lo;
    if (!(range > 0.0)) return std::nullopt;
    return range / std::sqrt(variance);
}

}  // namespace detail

/// Rescaled range of a window: range of partial sums of mean deviations
/// divided by the population standard deviation. Dimensionless, >= 0, and
/// invariant under affine maps of the input.
inline double rs_statistic(std::span<const double> window) {
    if (window.size() < 2) throw InsufficientDataError("rs_statistic: need at least 2 values");
    detail::require_finite(window, "rs_statistic");
    const auto rs = detail::rs_ratio(window);
    if (!rs) throw DegenerateSeriesError("rs_statistic: window has zero variance");
    return *rs;
}

/// Single-scale closed-form solve: h = ln(R/S) / ln(tau/2) over the whole
/// window. r_squared is 1 by convention for the one-point solve.
inline HurstEstimate rs_hurst_single(std::span<const double> window) {
    const double rs = rs_statistic(window);
    const std::size_t tau = window.size();
    if (tau <= 2)
        throw ScaleError("rs_hurst_single: window length must exceed 2 (ln(tau/2) <= 0)");
    const double log_scale = std::log(static_cast<double>(tau) / 2.0);
    HurstEstimate est;
    est.h = std::log(rs) / log_scale;
    est.method = Method::rs_single;
    est.scales = {tau};
    est.fit_points = {{log_scale, std::log(rs)}};
    est.r_squared = 1.0;
    est.std_err = 0.0;
    return est;
}

/// Ordinary least squares of ln(fluctuation) on ln(scale). The slope is the
/// Hurst exponent when fed (block size, fluctuation) pairs.
inline LogLogFit loglog_fit(std::span<const std::pair<double, double>> points) {
    const std::size_t n = points.size();
    if (n < 2) throw InsufficientDataError("loglog_fit: need at least 2 points");

    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(points[i].first > 0.0) || !(points[i].second > 0.0))
            throw DomainError("loglog_fit: scales and fluctuations must be positive");
        x[i] = std::log(points[i].first);
        y[i] = std::log(points[i].second);
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (x[i] == x[j]) throw DomainError("loglog_fit: duplicate scale");

    const double xbar = detail::mean(x);
    const double ybar = detail::mean(y);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - xbar) * (x[i] - xbar);
        sxy += (x[i] - xbar) * (y[i] - ybar);
    }
    if (!(sxx > 0.0)) throw DomainError("loglog_fit: degenerate abscissae");

    LogLogFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ybar - fit.slope * xbar;
    double ssr = 0.0, sst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double res = y[i] - (fit.intercept + fit.slope * x[i]);
        ssr += res * res;
        sst += (y[i] - ybar) * (y[i] - ybar);
    }
    fit.r_squared = sst > 0.0 ? std::clamp(1.0 - ssr / sst, 0.0, 1.0) : 1.0;
    fit.std_err = n > 2 ? std::sqrt((ssr / static_cast<double>(n - 2)) / sxx) : 0.0;
    return fit;
}

/// Multi-scale R/S estimate: for each block size, average the R/S statistic
/// over non-overlapping blocks, then regress ln(mean R/S) on ln(block size).
/// Constant blocks are skipped and counted; a scale where every block is
/// constant is an error.
inline HurstEstimate rs_hurst(std::span<const double> window, const ScaleSet& scales) {
    detail::require_finite(window, "rs_hurst");
    scales.check_window(window.size());

    HurstEstimate est;
    est.method = Method::rs_multiscale;
    std::vector<std::pair<double, double>> points;
    points.reserve(scales.count());
    for (std::size_t block : scales.blocks()) {
        const std::size_t nblocks = window.size() / block;
        double acc = 0.0;
        std::size_t used = 0;
        for (std::size_t b = 0; b < nblocks; ++b) {
            const auto rs = detail::rs_ratio(window.subspan(b * block, block));
            if (!rs) {
                ++est.degenerate_blocks;
                continue;
            }
            acc += *rs;
            ++used;
        }
        if (used == 0)
            throw DegenerateSeriesError("rs_hurst: all blocks constant at scale " +
                                        std::to_string(block));
        points.emplace_back(static_cast<double>(block), acc / static_cast<double>(used));
    }

    const auto fit = loglog_fit(points);
    est.h = fit.slope;
    est.r_squared = fit.r_squared;
    est.std_err = fit.std_err;
    est.scales = scales.blocks();
    est.fit_points.reserve(points.size());
    for (const auto& [s, f] : points) est.fit_points.push_back({std::log(s), std::log(f)});
    return est;
}

/// Integrated series: cumulative sum of mean deviations. Ends at zero up to
/// rounding by construction.
inline std::vector<double> dfa_profile(std::span<const double> series) {
    if (series.empty()) throw InsufficientDataError("dfa_profile: empty input");
    detail::require_finite(series, "dfa_profile");
    const double mu = detail::mean(series);
    std::vector<double> profile(series.size());
    double run = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double dev = series[i] - mu;
        double t = run + dev;
        if (std::abs(run) >= std::abs(dev))
            comp += (run - t) + dev;
        else
            comp += (dev - t) + run;
        run = t;
        profile[i] = run + comp;
    }
    return profile;
}

/// Root-mean-square residual of per-block polynomial detrending of the
/// profile at one block size. Blocks are taken from the front; a trailing
/// remainder shorter than the block is discarded, and the normalization uses
/// the covered length so partial coverage does not dilute the average.
inline double dfa_fluctuation(std::span<const double> profile, std::size_t block_size,
                              int poly_order = 1) {
    if (poly_order < 1 || poly_order > 3)
        throw DomainError("dfa_fluctuation: poly_order must be in [1, 3]");
    const std::size_t m = block_size;
    if (m < static_cast<std::size_t>(poly_order) + 2)
        throw ScaleError("dfa_fluctuation: block size " + std::to_string(m) +
                         " too small for poly order " + std::to_string(poly_order));
    if (m > profile.size())
        throw ScaleError("dfa_fluctuation: block size " + std::to_string(m) +
                         " exceeds profile length " + std::to_string(profile.size()));

    const std::size_t nblocks = profile.size() / m;
    const std::size_t covered = nblocks * m;
    double ssr = 0.0;
    for (std::size_t b = 0; b < nblocks; ++b) {
        try {
            ssr += detail::poly_detrend_ssr(profile.subspan(b * m, m), poly_order);
        } catch (const NumericalError&) {
            throw NumericalError("dfa_fluctuation: singular detrending fit in block " +
                                 std::to_string(b) + " at scale " + std::to_string(m));
        }
    }
    return std::sqrt(ssr / static_cast<double>(covered));
}

/// DFA estimate: slope of ln F(m) on ln m over the scale set, after
/// integrating the window and detrending each block with a polynomial of
/// the given order (1 = linear detrending, the default).
inline HurstEstimate dfa_hurst(std::span<const double> window, const ScaleSet& scales,
                               int poly_order = 1) {
    detail::require_finite(window, "dfa_hurst");
    scales.check_window(window.size());

    const auto profile = dfa_profile(window);
    std::vector<std::pair<double, double>> points;
    points.reserve(scales.count());
    for (std::size_t block : scales.blocks()) {
        const double f = dfa_fluctuation(profile, block, poly_order);
        if (!(f > 0.0))
            throw DegenerateSeriesError("dfa_hurst: zero fluctuation at scale " +
                                        std::to_string(block));
        points.emplace_back(static_cast<double>(block), f);
    }

    const auto fit = loglog_fit(points);
    HurstEstimate est;
    est.h = fit.slope;
    est.method = Method::dfa;
    est.scales = scales.blocks();
    est.fit_points.reserve(points.size());
    for (const auto& [s, f] : points) est.fit_points.push_back({std::log(s), std::log(f)});
    est.r_squared = fit.r_squared;
    est.std_err = fit.std_err;
    est.poly_order = poly_order;
    return est;
}

inline HurstEstimate dfa_hurst(std::span<const double> window) {
    return dfa_hurst(window, ScaleSet::dyadic_default(), 1);
}

/// Estimator selection bundled for the rolling engine and the CLI.
struct EstimatorConfig {
    Method method = Method::dfa;
    ScaleSet scales = ScaleSet::dyadic_default();
    int poly_order = 1;
};

inline HurstEstimate estimate_hurst(std::span<const double> window,
                                    const EstimatorConfig& config) {
    switch (config.method) {
        case Method::rs_single: return rs_hurst_single(window);
        case Method::rs_multiscale: return rs_hurst(window, config.scales);
        case Method::dfa: return dfa_hurst(window, config.scales, config.poly_order);
    }
    throw Error("estimate_hurst: unknown method");
}

}  // namespace hurstlab
