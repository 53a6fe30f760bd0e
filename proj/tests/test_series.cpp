#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include <hurstlab/series.hpp>
#include <hurstlab/synth.hpp>

#include "oracles.hpp"

using namespace hurstlab;
using Catch::Matchers::WithinAbs;

namespace {

PriceSeries flat_prices(std::size_t n, double level = 100.0) {
    auto dates = oracles::make_dates(n);
    std::vector<double> p(n, level);
    return PriceSeries(dates, p, p, p);
}

}  // namespace

TEST_CASE("log_returns on a constant price series is zero") {
    const auto r = log_returns(flat_prices(3));
    REQUIRE(r.size() == 2);
    CHECK(r.values[0] == 0.0);
    CHECK(r.values[1] == 0.0);
}

TEST_CASE("log_returns hand value: 100 -> 110") {
    auto dates = oracles::make_dates(2);
    PriceSeries p(dates, {100.0, 110.0}, {100.0, 110.0}, {100.0, 110.0});
    const auto r = log_returns(p);
    REQUIRE(r.size() == 1);
    CHECK_THAT(r.values[0], WithinAbs(100.0 * std::log(1.1), 1e-10));
    CHECK(r.dates[0] == dates[1]);
}

TEST_CASE("derived series are one shorter than the prices") {
    const auto prices = gen_random_walk_prices(1435, 0.0, 0.02, 11);
    CHECK(log_returns(prices).size() == 1434);
    CHECK(hl_volatility(prices).size() == 1434);

    for (std::size_t n : {2u, 7u, 100u}) {
        const auto p = gen_random_walk_prices(n, 0.0, 0.01, n);
        CHECK(log_returns(p).size() == n - 1);
    }
}

TEST_CASE("log_returns is invariant under positive price scaling") {
    const auto prices = gen_random_walk_prices(200, 0.0005, 0.03, 3);
    const auto base = log_returns(prices);
    for (double c : {0.01, 7.0, 1234.5}) {
        std::vector<double> close(prices.close()), high(prices.high()), low(prices.low());
        for (auto& v : close) v *= c;
        for (auto& v : high) v *= c;
        for (auto& v : low) v *= c;
        const auto scaled = log_returns(PriceSeries(prices.dates(), close, high, low));
        for (std::size_t i = 0; i < base.size(); ++i)
            CHECK_THAT(scaled.values[i], WithinAbs(base.values[i], 1e-11));
    }
}

TEST_CASE("hl_volatility values and alignment") {
    auto dates = oracles::make_dates(3);
    PriceSeries p(dates, {100.0, 105.0, 104.0}, {100.0, 110.0, 104.0},
                  {100.0, 100.0, 104.0});
    const auto v = hl_volatility(p);
    REQUIRE(v.size() == 2);
    CHECK_THAT(v.values[0], WithinAbs(100.0 * std::log(1.1), 1e-10));  // day 1: 110/100
    CHECK_THAT(v.values[1], WithinAbs(0.0, 1e-12));                    // day 2: high == low
    CHECK(v.dates[0] == dates[1]);
}

TEST_CASE("hl_volatility is non-negative on rows with high >= low") {
    const auto prices = gen_random_walk_prices(500, 0.0, 0.02, 17);
    const auto v = hl_volatility(prices);
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(v.anomaly[i] == 0);
        CHECK(v.values[i] >= 0.0);
    }
}

TEST_CASE("high < low rows are flagged and their volatility stays negative") {
    auto dates = oracles::make_dates(3);
    PriceSeries p(dates, {100.0, 100.0, 100.0}, {101.0, 90.0, 101.0},
                  {99.0, 100.0, 99.0});
    CHECK(p.anomaly_count() == 1);
    CHECK(p.anomaly_flags()[1] == 1);

    const auto v = hl_volatility(p);
    CHECK(v.anomaly[0] == 1);
    CHECK(v.values[0] < 0.0);
    const auto q = p.quality();
    CHECK(q.rows == 3);
    CHECK(q.anomalies == 1);
}

TEST_CASE("price series rejects bad input") {
    auto dates = oracles::make_dates(2);
    SECTION("non-positive price names the offending date") {
        CHECK_THROWS_MATCHES(
            PriceSeries(dates, {100.0, -1.0}, {100.0, 1.0}, {100.0, 1.0}), DomainError,
            Catch::Matchers::MessageMatches(
                Catch::Matchers::ContainsSubstring(dates[1].to_string())));
    }
    SECTION("out-of-order dates name both dates") {
        CHECK_THROWS_MATCHES(
            PriceSeries({dates[1], dates[0]}, {1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}), CsvError,
            Catch::Matchers::MessageMatches(
                Catch::Matchers::ContainsSubstring(dates[0].to_string()) &&
                Catch::Matchers::ContainsSubstring(dates[1].to_string())));
    }
    SECTION("column length mismatch") {
        CHECK_THROWS_AS(PriceSeries(dates, {1.0}, {1.0, 1.0}, {1.0, 1.0}), DomainError);
    }
    SECTION("too short for transforms") {
        const auto p = flat_prices(1);
        CHECK_THROWS_AS(log_returns(p), InsufficientDataError);
        CHECK_THROWS_AS(hl_volatility(p), InsufficientDataError);
    }
}

TEST_CASE("slice_window") {
    const auto prices = gen_random_walk_prices(1435, 0.0, 0.02, 29);
    const auto r = log_returns(prices);
    REQUIRE(r.size() == 1434);

    SECTION("identity slice reproduces the series") {
        const auto w = slice_window(r, 0, r.size());
        REQUIRE(w.values.size() == r.size());
        CHECK(w.anchor == r.dates[0]);
        for (std::size_t i = 0; i < r.size(); ++i) CHECK(w.values[i] == r.values[i]);
    }
    SECTION("first and last 500-point windows") {
        const auto first = slice_window(r, 0, 500);
        CHECK(first.values.size() == 500);
        CHECK(first.anchor == r.dates[0]);
        CHECK(first.values[499] == r.values[499]);

        const auto last = slice_window(r, 934, 500);  // window 935 of 935
        CHECK(last.anchor == r.dates[934]);
        CHECK(last.values[499] == r.values[1433]);
        CHECK_THROWS_AS(slice_window(r, 935, 500), BoundsError);
    }
    SECTION("bounds errors") {
        CHECK_THROWS_AS(slice_window(r, 0, 1435), BoundsError);
        CHECK_THROWS_AS(slice_window(r, 1434, 1), BoundsError);
        CHECK_THROWS_AS(slice_window(r, 10, 0), BoundsError);
    }
    SECTION("works on volatility series too") {
        const auto v = hl_volatility(prices);
        const auto w = slice_window(v, 7, 100);
        CHECK(w.anchor == v.dates[7]);
        CHECK(w.values[0] == v.values[7]);
    }
}

TEST_CASE("return series rejects non-finite values") {
    auto dates = oracles::make_dates(2);
    CHECK_THROWS_AS(ReturnSeries(dates, {1.0, std::nan("")}), DomainError);
}
