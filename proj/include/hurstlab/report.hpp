#pragma once

#include <cstdio>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hurstlab/csv.hpp"
#include "hurstlab/date.hpp"
#include "hurstlab/error.hpp"
#include "hurstlab/estimators.hpp"
#include "hurstlab/rolling.hpp"
#include "hurstlab/series.hpp"
#include "hurstlab/stats.hpp"

namespace hurstlab {

/// Plot-ready row of a rolling run: one estimate anchored to the first
/// observation of its window.
struct HurstRecord {
    Date anchor;
    double h = 0.0;
    double r_squared = 0.0;
    Method method = Method::dfa;

    friend bool operator==(const HurstRecord&, const HurstRecord&) = default;
};

/// Emitted numbers carry 6 significant digits.
inline std::string fmt_g6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

/// Successful windows of a rolling result as emit-ready records. Failed
/// windows are not records; they stay visible as warnings.
inline std::vector<HurstRecord> records_from(const RollingResult& rolling) {
    std::vector<HurstRecord> out;
    out.reserve(rolling.windows.size());
    for (const auto& w : rolling.windows)
        if (w.ok())
            out.push_back({w.anchor, w.estimate->h, w.estimate->r_squared, w.estimate->method});
    return out;
}

inline constexpr std::string_view kRecordsCsvHeader = "anchor_date,h,r_squared,method";

inline std::string records_to_csv(std::span<const HurstRecord> records) {
    std::string out{kRecordsCsvHeader};
    out += '\n';
    for (const auto& r : records) {
        out += r.anchor.to_string();
        out += ',';
        out += fmt_g6(r.h);
        out += ',';
        out += fmt_g6(r.r_squared);
        out += ',';
        out += method_name(r.method);
        out += '\n';
    }
    return out;
}

/// Reads back what records_to_csv wrote; parse(emit(r)) then emit is
/// byte-stable.
inline std::vector<HurstRecord> records_from_csv(std::string_view text) {
    std::vector<HurstRecord> out;
    std::size_t cursor = 0;
    std::size_t line_no = 0;
    std::string_view line;
    auto next_line = [&]() {
        if (cursor >= text.size()) return false;
        const std::size_t pos = text.find('\n', cursor);
        line = pos == std::string_view::npos ? text.substr(cursor)
                                             : text.substr(cursor, pos - cursor);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        cursor = pos == std::string_view::npos ? text.size() : pos + 1;
        ++line_no;
        return true;
    };
    if (!next_line() || line != kRecordsCsvHeader)
        throw CsvError("records CSV: missing or unexpected header");
    while (next_line()) {
        if (line.empty()) continue;
        const auto fields = detail::split_fields(line, ',');
        if (fields.size() != 4)
            throw CsvError("records CSV line " + std::to_string(line_no) +
                           ": expected 4 fields");
        HurstRecord r;
        try {
            r.anchor = Date::parse(fields[0]);
        } catch (const DomainError& e) {
            throw CsvError("records CSV line " + std::to_string(line_no) + ": " + e.what());
        }
        r.h = detail::parse_cell(fields[1], line_no, "h");
        r.r_squared = detail::parse_cell(fields[2], line_no, "r_squared");
        const auto method = parse_method(fields[3]);
        if (!method)
            throw CsvError("records CSV line " + std::to_string(line_no) +
                           ": unknown method '" + std::string(fields[3]) + "'");
        r.method = *method;
        out.push_back(r);
    }
    return out;
}

/// Summary statistics as (name, value) rows, CSV form.
inline std::string stats_to_csv(const DescriptiveStats& s) {
    std::string out = "statistic,value\n";
    out += "n," + std::to_string(s.n) + '\n';
    out += "min," + fmt_g6(s.min) + '\n';
    out += "max," + fmt_g6(s.max) + '\n';
    out += "mean," + fmt_g6(s.mean) + '\n';
    out += "median," + fmt_g6(s.median) + '\n';
    out += "std_dev," + fmt_g6(s.std_dev) + '\n';
    out += "skewness," + fmt_g6(s.skewness) + '\n';
    out += "kurtosis," + fmt_g6(s.kurtosis) + '\n';
    out += "jarque_bera," + fmt_g6(s.jarque_bera) + '\n';
    out += std::string("jb_significant_1pct,") + (s.jb_significant_1pct ? "true" : "false") +
           '\n';
    return out;
}

inline nlohmann::json stats_to_json(const DescriptiveStats& s) {
    return {{"n", s.n},
            {"min", s.min},
            {"max", s.max},
            {"mean", s.mean},
            {"median", s.median},
            {"std_dev", s.std_dev},
            {"skewness", s.skewness},
            {"kurtosis", s.kurtosis},
            {"jarque_bera", s.jarque_bera},
            {"jb_significant_1pct", s.jb_significant_1pct}};
}

inline nlohmann::json quality_to_json(const DataQuality& q) {
    return {{"rows", q.rows},
            {"anomalies", q.anomalies},
            {"first_date", q.first_date.to_string()},
            {"last_date", q.last_date.to_string()}};
}

inline nlohmann::json record_to_json(const HurstRecord& r) {
    return {{"anchor_date", r.anchor.to_string()},
            {"h", r.h},
            {"r_squared", r.r_squared},
            {"method", std::string(method_name(r.method))}};
}

}  // namespace hurstlab
