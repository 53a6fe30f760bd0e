#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "hurstlab/detail/math.hpp"
#include "hurstlab/error.hpp"

namespace hurstlab {

/// Chi-squared(2) critical value at the 1% level, the only level reported.
inline constexpr double kJarqueBeraCritical1pct = 9.2103;

struct JarqueBeraResult {
    double statistic = 0.0;
    bool significant_1pct = false;
};

/// JB = (n/6) * (S^2 + (K-3)^2/4) with K the non-excess kurtosis.
/// The raw statistic is always exposed; the flag applies the fixed 1% cut.
inline JarqueBeraResult jarque_bera(double skewness, double kurtosis, std::size_t n) {
    if (n < 4) throw InsufficientDataError("jarque_bera: need n >= 4");
    const double excess = kurtosis - 3.0;
    const double jb =
        static_cast<double>(n) / 6.0 * (skewness * skewness + excess * excess / 4.0);
    return {jb, jb > kJarqueBeraCritical1pct};
}

/// Eight-statistic series summary.
///
/// Conventions: std_dev is sample-normalized (1/(n-1)); skewness and kurtosis
/// use population moments (1/n); kurtosis is non-excess (normal = 3); median
/// uses the midpoint rule for even n.
struct DescriptiveStats {
    std::size_t n = 0;
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double std_dev = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0;
    double jarque_bera = 0.0;
    bool jb_significant_1pct = false;
};

inline DescriptiveStats describe(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 4) throw InsufficientDataError("describe: need n >= 4");
    detail::require_finite(values, "describe");

    DescriptiveStats out;
    out.n = n;
    out.mean = detail::mean(values);

    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i) centered[i] = values[i] - out.mean;

    std::vector<double> pow2(n), pow3(n), pow4(n);
    for (std::size_t i = 0; i < n; ++i) {
        pow2[i] = centered[i] * centered[i];
        pow3[i] = pow2[i] * centered[i];
        pow4[i] = pow2[i] * pow2[i];
    }
    const double nd = static_cast<double>(n);
    const double m2 = detail::sum(pow2) / nd;
    const double m3 = detail::sum(pow3) / nd;
    const double m4 = detail::sum(pow4) / nd;
    if (m2 <= 0.0) throw DegenerateSeriesError("describe: zero variance");

    out.std_dev = std::sqrt(detail::sum(pow2) / (nd - 1.0));
    out.skewness = m3 / std::pow(m2, 1.5);
    out.kurtosis = m4 / (m2 * m2);

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    out.min = sorted.front();
    out.max = sorted.back();
    out.median = (n % 2 == 1) ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);

    const auto jb = jarque_bera(out.skewness, out.kurtosis, n);
    out.jarque_bera = jb.statistic;
    out.jb_significant_1pct = jb.significant_1pct;
    return out;
}

}  // namespace hurstlab
