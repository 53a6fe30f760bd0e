#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hurstlab/date.hpp"
#include "hurstlab/error.hpp"
#include "hurstlab/series.hpp"

namespace hurstlab {

namespace detail {

/// In-place radix-2 forward DFT, X_k = sum_j x_j e^{-2*pi*i*j*k/N}.
/// N must be a power of two.
inline void fft_pow2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wstep(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto u = a[i + j];
                const auto v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wstep;
            }
        }
    }
}

/// Standard normal draws via Box-Muller over explicitly constructed
/// 53-bit uniforms, so a seed produces the same stream on every platform.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace detail

/// Target autocovariance of fractional Gaussian noise:
/// gamma(k) = (sigma^2/2) * ((k+1)^{2H} - 2 k^{2H} + (k-1)^{2H}).
inline double fgn_autocovariance(double h, double sigma, std::size_t lag) {
    const double k = static_cast<double>(lag);
    const double two_h = 2.0 * h;
    const double prev = lag == 0 ? 1.0 : std::pow(k - 1.0, two_h);
    return 0.5 * sigma * sigma *
           (std::pow(k + 1.0, two_h) - 2.0 * std::pow(k, two_h) + prev);
}

struct FgnSpec {
    std::size_t n = 0;
    double h = 0.5;
    double sigma = 1.0;
    std::uint64_t seed = 0;
};

/// Exact stationary fractional Gaussian noise by circulant embedding
/// (Davies-Harte). The covariance circulant is diagonalized with an FFT and
/// complex normal coefficients are drawn with the matching spectral weights,
/// so the sample has the exact target autocovariance at every lag.
/// Deterministic given the seed.
inline std::vector<double> gen_fgn(const FgnSpec& spec) {
    if (spec.n < 2) throw InsufficientDataError("gen_fgn: need n >= 2");
    if (!(spec.h > 0.0) || !(spec.h < 1.0))
        throw DomainError("gen_fgn: h must lie in (0, 1)");
    if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma))
        throw DomainError("gen_fgn: sigma must be positive");

    // Smallest power-of-two circle holding lags 0..n-1 on each half.
    std::size_t g = 2;
    while (g < 2 * (spec.n - 1)) g <<= 1;
    const std::size_t half = g / 2;

    std::vector<std::complex<double>> eig(g);
    for (std::size_t j = 0; j <= half; ++j)
        eig[j] = fgn_autocovariance(spec.h, spec.sigma, j);
    for (std::size_t j = half + 1; j < g; ++j) eig[j] = eig[g - j];
    detail::fft_pow2(eig);

    double lambda_max = 0.0;
    for (const auto& l : eig) lambda_max = std::max(lambda_max, l.real());
    const double tolerance = 1e-8 * lambda_max;
    std::vector<double> lambda(g);
    for (std::size_t j = 0; j < g; ++j) {
        const double l = eig[j].real();
        if (l < -tolerance)
            throw NumericalError("gen_fgn: circulant embedding not non-negative definite "
                                 "(eigenvalue " + std::to_string(l) + ")");
        lambda[j] = std::max(l, 0.0);
    }

    // Hermitian spectral coefficients; fixed draw order for determinism.
    detail::GaussianSource rng(spec.seed);
    std::vector<std::complex<double>> coeff(g);
    coeff[0] = std::sqrt(lambda[0]) * rng.next();
    for (std::size_t j = 1; j < half; ++j) {
        const double scale = std::sqrt(0.5 * lambda[j]);
        const double u = rng.next();
        const double v = rng.next();
        coeff[j] = {scale * u, scale * v};
        coeff[g - j] = std::conj(coeff[j]);
    }
    coeff[half] = std::sqrt(lambda[half]) * rng.next();

    detail::fft_pow2(coeff);
    const double norm = 1.0 / std::sqrt(static_cast<double>(g));
    std::vector<double> out(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) out[i] = coeff[i].real() * norm;
    return out;
}

/// Exponentiated Gaussian random walk with synthetic intraday ranges:
/// close_t = close_{t-1} * exp(drift + vol * z_t), high = close * e^{|u|},
/// low = close * e^{-|v|} with u, v ~ N(0, (vol/2)^2). Log returns of the
/// output are i.i.d. Gaussian. Deterministic given the seed.
inline PriceSeries gen_random_walk_prices(std::size_t n, double drift, double vol,
                                          std::uint64_t seed, Date start = {2020, 1, 1}) {
    if (n < 2) throw InsufficientDataError("gen_random_walk_prices: need n >= 2");
    if (!(vol > 0.0) || !std::isfinite(vol) || !std::isfinite(drift))
        throw DomainError("gen_random_walk_prices: vol must be positive and finite");

    detail::GaussianSource rng(seed);
    const double range_sigma = 0.5 * vol;

    std::vector<Date> dates(n);
    std::vector<double> close(n), high(n), low(n);
    double log_close = std::log(100.0);
    Date date = start;
    for (std::size_t t = 0; t < n; ++t) {
        if (t > 0) log_close += drift + vol * rng.next();
        const double u = std::abs(rng.next()) * range_sigma;
        const double v = std::abs(rng.next()) * range_sigma;
        dates[t] = date;
        close[t] = std::exp(log_close);
        high[t] = close[t] * std::exp(u);
        low[t] = close[t] * std::exp(-v);
        date = date.next();
    }
    return PriceSeries(std::move(dates), std::move(close), std::move(high), std::move(low));
}

}  // namespace hurstlab
