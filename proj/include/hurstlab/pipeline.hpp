#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hurstlab/csv.hpp"
#include "hurstlab/error.hpp"
#include "hurstlab/estimators.hpp"
#include "hurstlab/report.hpp"
#include "hurstlab/rolling.hpp"
#include "hurstlab/series.hpp"
#include "hurstlab/stats.hpp"

namespace hurstlab {

enum class SeriesKind { returns, volatility };

inline std::string_view series_kind_name(SeriesKind k) {
    return k == SeriesKind::returns ? "returns" : "volatility";
}

inline std::optional<SeriesKind> parse_series_kind(std::string_view name) {
    if (name == "returns") return SeriesKind::returns;
    if (name == "volatility") return SeriesKind::volatility;
    return std::nullopt;
}

enum class OutputFormat { csv, json };

inline std::string_view format_name(OutputFormat f) {
    return f == OutputFormat::csv ? "csv" : "json";
}

inline std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    return std::nullopt;
}

/// Full pipeline configuration. The defaults run the reference protocol:
/// DFA on returns over 500-point windows advanced one point at a time, with
/// scales {4, 8, 16, 32, 64, 128} and linear detrending.
struct RunConfig {
    std::filesystem::path input;
    SeriesKind series = SeriesKind::returns;
    EstimatorConfig estimator;
    WindowSpec window;
    OutputFormat format = OutputFormat::csv;
    CsvSchema schema;
};

/// Everything one pipeline run produces: input quality, distribution of the
/// analyzed series, the rolling estimates, and the distribution of those
/// estimates.
struct PipelineReport {
    DataQuality quality;
    DescriptiveStats series_stats;
    RollingResult rolling;
    std::vector<HurstRecord> records;
    DescriptiveStats hurst_stats;
};

/// Loads the input, derives the chosen series, rolls the estimator, and
/// summarizes. Throws on any failure so callers emit either a complete
/// report or nothing.
inline PipelineReport run_pipeline(const RunConfig& config) {
    const PriceSeries prices = load_csv(config.input, config.schema);

    PipelineReport report;
    report.quality = prices.quality();
    if (config.series == SeriesKind::returns) {
        const ReturnSeries series = log_returns(prices);
        report.series_stats = describe(series.values);
        report.rolling = roll(series, config.window, config.estimator);
    } else {
        const VolatilitySeries series = hl_volatility(prices);
        report.series_stats = describe(series.values);
        report.rolling = roll(series, config.window, config.estimator);
    }
    report.records = records_from(report.rolling);
    report.hurst_stats = summarize(report.rolling);
    return report;
}

inline nlohmann::json config_to_json(const RunConfig& config) {
    return {{"input", config.input.string()},
            {"series", std::string(series_kind_name(config.series))},
            {"method", std::string(method_name(config.estimator.method))},
            {"window", config.window.length},
            {"step", config.window.step},
            {"scales", config.estimator.scales.blocks()},
            {"poly_order", config.estimator.poly_order},
            {"format", std::string(format_name(config.format))}};
}

/// CSV form: just the record rows; summaries travel on stderr in the CLI.
inline std::string render_report_csv(const PipelineReport& report) {
    return records_to_csv(report.records);
}

/// JSON form: one object, "meta" (config echo, data quality, summaries,
/// per-window warnings) plus the "records" array.
inline std::string render_report_json(const RunConfig& config, const PipelineReport& report) {
    nlohmann::json warnings = nlohmann::json::array();
    for (const auto& w : report.rolling.windows)
        if (!w.ok()) warnings.push_back({{"anchor_date", w.anchor.to_string()},
                                         {"error", w.error}});
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) records.push_back(record_to_json(r));

    const nlohmann::json doc = {
        {"meta",
         {{"config", config_to_json(config)},
          {"data_quality", quality_to_json(report.quality)},
          {"series_stats", stats_to_json(report.series_stats)},
          {"hurst_stats", stats_to_json(report.hurst_stats)},
          {"warnings", warnings}}},
        {"records", records}};
    return doc.dump(2) + "\n";
}

}  // namespace hurstlab
