#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurstlab/date.hpp"
#include "hurstlab/error.hpp"
#include "hurstlab/estimators.hpp"
#include "hurstlab/series.hpp"
#include "hurstlab/stats.hpp"

namespace hurstlab {

/// Sliding-window protocol. Each window's estimate is anchored to the date
/// of the window's first observation.
struct WindowSpec {
    std::size_t length = 500;
    std::size_t step = 1;
};

/// One window's outcome. A window whose estimator fails is kept as an
/// explicit gap carrying the error text, never silently skipped.
struct WindowOutcome {
    Date anchor;
    std::optional<HurstEstimate> estimate;
    std::string error;

    bool ok() const { return estimate.has_value(); }
};

struct RollingResult {
    std::vector<WindowOutcome> windows;
    Method method = Method::dfa;
    WindowSpec spec;

    std::size_t window_count() const { return windows.size(); }

    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& w : windows)
            if (!w.ok()) ++n;
        return n;
    }

    /// Hurst exponents of the successful windows, in anchor order.
    std::vector<double> hurst_values() const {
        std::vector<double> out;
        out.reserve(windows.size());
        for (const auto& w : windows)
            if (w.ok()) out.push_back(w.estimate->h);
        return out;
    }
};

/// Number of windows of `length` advancing by `step` over n observations.
inline std::size_t window_count(std::size_t n, const WindowSpec& spec) {
    if (spec.step < 1) throw DomainError("window step must be >= 1");
    if (spec.length < 1) throw DomainError("window length must be >= 1");
    if (n < spec.length)
        throw InsufficientDataError("series of length " + std::to_string(n) +
                                    " shorter than window " + std::to_string(spec.length));
    return (n - spec.length) / spec.step + 1;
}

/// Runs the estimator over every sliding window. Windows are independent and
/// evaluated in anchor order; identical input and spec give a bit-identical
/// result.
inline RollingResult roll(std::span<const double> values, std::span<const Date> dates,
                          const WindowSpec& spec, const EstimatorConfig& config) {
    if (dates.size() != values.size())
        throw DomainError("roll: dates/values length mismatch");
    const std::size_t count = window_count(values.size(), spec);

    RollingResult result;
    result.method = config.method;
    result.spec = spec;
    result.windows.reserve(count);
    for (std::size_t w = 0; w < count; ++w) {
        const std::size_t start = w * spec.step;
        WindowOutcome outcome;
        outcome.anchor = dates[start];
        try {
            outcome.estimate = estimate_hurst(values.subspan(start, spec.length), config);
        } catch (const Error& e) {
            outcome.error = e.what();
        }
        result.windows.push_back(std::move(outcome));
    }
    return result;
}

inline RollingResult roll(const ReturnSeries& series, const WindowSpec& spec,
                          const EstimatorConfig& config) {
    return roll(series.values, series.dates, spec, config);
}

inline RollingResult roll(const VolatilitySeries& series, const WindowSpec& spec,
                          const EstimatorConfig& config) {
    return roll(series.values, series.dates, spec, config);
}

/// Descriptive statistics of the successful windows' Hurst exponents.
inline DescriptiveStats summarize(const RollingResult& result) {
    const auto values = result.hurst_values();
    if (values.size() < 4)
        throw InsufficientDataError("summarize: need at least 4 successful estimates, have " +
                                    std::to_string(values.size()));
    return describe(values);
}

}  // namespace hurstlab
