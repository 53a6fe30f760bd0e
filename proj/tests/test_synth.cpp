#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <hurstlab/estimators.hpp>
#include <hurstlab/series.hpp>
#include <hurstlab/synth.hpp>

#include "oracles.hpp"

using namespace hurstlab;
using Catch::Matchers::WithinAbs;

namespace {

double empirical_autocovariance(const std::vector<double>& x, std::size_t lag) {
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < x.size(); ++i)
        acc += (x[i] - mean) * (x[i + lag] - mean);
    return acc / static_cast<double>(x.size());
}

// No mean subtraction: centering on each short path's sample mean biases
// autocovariances of persistent series downward; the process mean is 0.
double raw_autocovariance(const std::vector<double>& x, std::size_t lag) {
    double acc = 0.0;
    for (std::size_t i = 0; i + lag < x.size(); ++i) acc += x[i] * x[i + lag];
    return acc / static_cast<double>(x.size() - lag);
}

}  // namespace

TEST_CASE("radix-2 FFT agrees with a direct DFT") {
    detail::GaussianSource rng(8);
    std::vector<std::complex<double>> x(16);
    for (auto& v : x) v = {rng.next(), rng.next()};

    std::vector<std::complex<double>> direct(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double ang =
                -2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(x.size());
            acc += x[j] * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        direct[k] = acc;
    }

    auto fast = x;
    detail::fft_pow2(fast);
    for (std::size_t k = 0; k < x.size(); ++k) {
        CHECK_THAT(fast[k].real(), WithinAbs(direct[k].real(), 1e-12));
        CHECK_THAT(fast[k].imag(), WithinAbs(direct[k].imag(), 1e-12));
    }
}

TEST_CASE("fgn_autocovariance closed form") {
    CHECK_THAT(fgn_autocovariance(0.7, 1.0, 0), WithinAbs(1.0, 1e-15));
    CHECK_THAT(fgn_autocovariance(0.7, 1.0, 1),
               WithinAbs(0.5 * (std::pow(2.0, 1.4) - 2.0), 1e-15));
    CHECK_THAT(fgn_autocovariance(0.5, 1.0, 1), WithinAbs(0.0, 1e-15));
    CHECK_THAT(fgn_autocovariance(0.5, 2.0, 0), WithinAbs(4.0, 1e-15));
}

TEST_CASE("gen_fgn is deterministic in the seed") {
    const FgnSpec spec{1000, 0.7, 1.0, 42};
    const auto a = gen_fgn(spec);
    const auto b = gen_fgn(spec);
    CHECK(a == b);
    const auto c = gen_fgn({1000, 0.7, 1.0, 43});
    CHECK(a != c);
}

TEST_CASE("gen_fgn validates its spec") {
    CHECK_THROWS_AS(gen_fgn({1, 0.5, 1.0, 0}), InsufficientDataError);
    CHECK_THROWS_AS(gen_fgn({100, 0.0, 1.0, 0}), DomainError);
    CHECK_THROWS_AS(gen_fgn({100, 1.0, 1.0, 0}), DomainError);
    CHECK_THROWS_AS(gen_fgn({100, 0.5, 0.0, 0}), DomainError);
}

TEST_CASE("white-noise fGn has no lag-1 correlation") {
    const auto x = gen_fgn({100000, 0.5, 1.0, 78});
    const double rho1 = empirical_autocovariance(x, 1) / empirical_autocovariance(x, 0);
    CHECK_THAT(rho1, WithinAbs(0.0, 0.01));
}

TEST_CASE("persistent fGn matches its closed-form autocovariance") {
    const auto x = gen_fgn({100000, 0.7, 1.0, 77});
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    CHECK_THAT(mean, WithinAbs(0.0, 0.1));  // long memory widens the SE of the mean
    CHECK_THAT(empirical_autocovariance(x, 0), WithinAbs(1.0, 0.05));
    CHECK_THAT(empirical_autocovariance(x, 1),
               WithinAbs(fgn_autocovariance(0.7, 1.0, 1), 0.02));
}

TEST_CASE("circulant-embedding and Cholesky generators agree with the target law") {
    // Both constructions must reproduce gamma(k); averaging empirical
    // autocovariances over many short paths keeps the Monte Carlo bands tight.
    const std::size_t n = 256;
    const int paths = 300;
    for (double h : {0.3, 0.7}) {
        for (std::size_t lag : {std::size_t{0}, std::size_t{1}, std::size_t{4}}) {
            double dh_acc = 0.0, chol_acc = 0.0;
            for (int p = 0; p < paths; ++p) {
                dh_acc += raw_autocovariance(
                    gen_fgn({n, h, 1.0, 9000 + static_cast<unsigned>(p)}), lag);
                chol_acc += raw_autocovariance(
                    oracles::cholesky_fgn(n, h, 1.0, 19000 + static_cast<unsigned>(p)), lag);
            }
            const double target = fgn_autocovariance(h, 1.0, lag);
            CHECK_THAT(dh_acc / paths, WithinAbs(target, 0.03));
            CHECK_THAT(chol_acc / paths, WithinAbs(target, 0.03));
        }
    }
}

TEST_CASE("integrating fGn shifts the DFA exponent by one") {
    double direct = 0.0, integrated = 0.0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) {
        const auto x = gen_fgn({2000, 0.3, 1.0, 400 + static_cast<unsigned>(s)});
        std::vector<double> cum(x.size());
        double run = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            run += x[i];
            cum[i] = run;
        }
        direct += dfa_hurst(x).h;
        integrated += dfa_hurst(cum).h;
    }
    CHECK_THAT(integrated / seeds - direct / seeds, WithinAbs(1.0, 0.15));
}

TEST_CASE("variance converges to sigma squared") {
    for (double sigma : {1.0, 2.5}) {
        const auto x = gen_fgn({50000, 0.6, sigma, 55});
        CHECK_THAT(empirical_autocovariance(x, 0), WithinAbs(sigma * sigma, 0.1 * sigma * sigma));
    }
}

TEST_CASE("gen_random_walk_prices") {
    SECTION("construction guarantees hold on every row") {
        const auto p = gen_random_walk_prices(2000, 0.0002, 0.02, 5);
        REQUIRE(p.size() == 2000);
        CHECK(p.anomaly_count() == 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(p.high()[i] >= p.close()[i]);
            CHECK(p.close()[i] >= p.low()[i]);
            CHECK(p.low()[i] > 0.0);
        }
    }
    SECTION("log returns are memoryless") {
        double acc = 0.0;
        const int seeds = 50;
        for (int s = 0; s < seeds; ++s) {
            const auto prices = gen_random_walk_prices(2000, 0.0, 0.02, 40 + static_cast<unsigned>(s));
            acc += dfa_hurst(log_returns(prices).values).h;
        }
        CHECK_THAT(acc / seeds, WithinAbs(0.5, 0.05));
    }
    SECTION("vanishing volatility freezes the walk") {
        const auto prices = gen_random_walk_prices(100, 0.0, 1e-12, 9);
        const auto r = log_returns(prices);
        for (double v : r.values) CHECK(std::abs(v) < 1e-8);
    }
    SECTION("deterministic in the seed") {
        const auto a = gen_random_walk_prices(50, 0.0, 0.02, 123);
        const auto b = gen_random_walk_prices(50, 0.0, 0.02, 123);
        CHECK(a.close() == b.close());
        CHECK(a.high() == b.high());
    }
    SECTION("parameter validation") {
        CHECK_THROWS_AS(gen_random_walk_prices(1, 0.0, 0.02, 0), InsufficientDataError);
        CHECK_THROWS_AS(gen_random_walk_prices(10, 0.0, 0.0, 0), DomainError);
    }
}
