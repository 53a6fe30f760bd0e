#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hurstlab/date.hpp"
#include "hurstlab/detail/math.hpp"
#include "hurstlab/error.hpp"

namespace hurstlab {

/// Row counts and anomaly summary of a loaded price history.
struct DataQuality {
    std::size_t rows = 0;
    std::size_t anomalies = 0;  ///< rows where high < low
    Date first_date;
    Date last_date;
};

/// Dated daily OHLC-style observations (close, intraday high, intraday low).
///
/// Invariants enforced at construction: equal column lengths, strictly
/// increasing dates, strictly positive prices. Rows with high < low are kept
/// and flagged as anomalies instead of being dropped, so downstream results
/// stay reconcilable with the raw file. Immutable after construction.
class PriceSeries {
public:
    PriceSeries(std::vector<Date> dates, std::vector<double> close, std::vector<double> high,
                std::vector<double> low)
        : dates_(std::move(dates)),
          close_(std::move(close)),
          high_(std::move(high)),
          low_(std::move(low)) {
        const std::size_t n = dates_.size();
        if (close_.size() != n || high_.size() != n || low_.size() != n)
            throw DomainError("price series columns have unequal lengths");
        anomaly_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (!(close_[i] > 0.0) || !(high_[i] > 0.0) || !(low_[i] > 0.0) ||
                !std::isfinite(close_[i]) || !std::isfinite(high_[i]) || !std::isfinite(low_[i]))
                throw DomainError("non-positive or non-finite price on " +
                                  dates_[i].to_string());
            if (i > 0 && !(dates_[i - 1] < dates_[i]))
                throw CsvError("dates not strictly increasing: " + dates_[i - 1].to_string() +
                               " then " + dates_[i].to_string());
            if (high_[i] < low_[i]) anomaly_[i] = 1;
        }
    }

    std::size_t size() const { return dates_.size(); }
    bool empty() const { return dates_.empty(); }

    const std::vector<Date>& dates() const { return dates_; }
    const std::vector<double>& close() const { return close_; }
    const std::vector<double>& high() const { return high_; }
    const std::vector<double>& low() const { return low_; }

    /// 1 for rows where high < low. Such rows are reported, never hidden.
    const std::vector<std::uint8_t>& anomaly_flags() const { return anomaly_; }

    std::size_t anomaly_count() const {
        std::size_t n = 0;
        for (auto f : anomaly_) n += f;
        return n;
    }

    DataQuality quality() const {
        DataQuality q;
        q.rows = size();
        q.anomalies = anomaly_count();
        if (!empty()) {
            q.first_date = dates_.front();
            q.last_date = dates_.back();
        }
        return q;
    }

private:
    std::vector<Date> dates_;
    std::vector<double> close_;
    std::vector<double> high_;
    std::vector<double> low_;
    std::vector<std::uint8_t> anomaly_;
};

/// Daily log returns scaled by 100, dated by the later observation of each
/// pair. One element shorter than the prices it came from.
struct ReturnSeries {
    std::vector<Date> dates;
    std::vector<double> values;

    ReturnSeries(std::vector<Date> d, std::vector<double> v)
        : dates(std::move(d)), values(std::move(v)) {
        if (dates.size() != values.size())
            throw DomainError("return series: dates/values length mismatch");
        detail::require_finite(values, "return series");
    }

    std::size_t size() const { return values.size(); }
};

/// Daily log high/low range scaled by 100, aligned with the return series
/// (first price row dropped). Values on anomaly-flagged rows may be negative
/// and are carried through untouched.
struct VolatilitySeries {
    std::vector<Date> dates;
    std::vector<double> values;
    std::vector<std::uint8_t> anomaly;

    VolatilitySeries(std::vector<Date> d, std::vector<double> v, std::vector<std::uint8_t> a)
        : dates(std::move(d)), values(std::move(v)), anomaly(std::move(a)) {
        if (dates.size() != values.size() || anomaly.size() != values.size())
            throw DomainError("volatility series: column length mismatch");
        detail::require_finite(values, "volatility series");
    }

    std::size_t size() const { return values.size(); }
};

/// r[i] = 100 * (ln close[i+1] - ln close[i]), dated by observation i+1.
inline ReturnSeries log_returns(const PriceSeries& prices) {
    const std::size_t n = prices.size();
    if (n < 2) throw InsufficientDataError("log_returns: need at least 2 observations");
    std::vector<Date> dates(prices.dates().begin() + 1, prices.dates().end());
    std::vector<double> values(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        values[i] = 100.0 * (std::log(prices.close()[i + 1]) - std::log(prices.close()[i]));
    return ReturnSeries(std::move(dates), std::move(values));
}

/// v[i] = 100 * (ln high[i+1] - ln low[i+1]). The first price row is dropped
/// so returns and volatility share dates and length.
inline VolatilitySeries hl_volatility(const PriceSeries& prices) {
    const std::size_t n = prices.size();
    if (n < 2) throw InsufficientDataError("hl_volatility: need at least 2 observations");
    std::vector<Date> dates(prices.dates().begin() + 1, prices.dates().end());
    std::vector<double> values(n - 1);
    std::vector<std::uint8_t> anomaly(prices.anomaly_flags().begin() + 1,
                                      prices.anomaly_flags().end());
    for (std::size_t i = 0; i + 1 < n; ++i)
        values[i] = 100.0 * (std::log(prices.high()[i + 1]) - std::log(prices.low()[i + 1]));
    return VolatilitySeries(std::move(dates), std::move(values), std::move(anomaly));
}

/// Contiguous sub-series view anchored at the date of its first observation.
struct WindowView {
    std::span<const double> values;
    Date anchor;
};

namespace detail {
inline void check_slice(std::size_t n, std::size_t start, std::size_t length) {
    if (length < 1) throw BoundsError("slice_window: length must be >= 1");
    if (start > n || length > n - start)
        throw BoundsError("slice_window: [" + std::to_string(start) + ", " +
                          std::to_string(start + length) + ") exceeds series of length " +
                          std::to_string(n));
}
}  // namespace detail

inline WindowView slice_window(const ReturnSeries& series, std::size_t start,
                               std::size_t length) {
    detail::check_slice(series.size(), start, length);
    return {std::span<const double>(series.values).subspan(start, length), series.dates[start]};
}

inline WindowView slice_window(const VolatilitySeries& series, std::size_t start,
                               std::size_t length) {
    detail::check_slice(series.size(), start, length);
    return {std::span<const double>(series.values).subspan(start, length), series.dates[start]};
}

}  // namespace hurstlab
