#pragma once

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hurstlab/error.hpp"
#include "hurstlab/series.hpp"

namespace hurstlab {

/// Column names and delimiter of an OHLC input file. Header row required,
/// dates strictly ISO-8601 (yyyy-mm-dd). Extra columns are ignored; quoted
/// fields are not supported.
struct CsvSchema {
    std::string date_column = "date";
    std::string close_column = "close";
    std::string high_column = "high";
    std::string low_column = "low";
    char delimiter = ',';
};

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line, char delim) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        std::string_view field = pos == std::string_view::npos
                                     ? line.substr(start)
                                     : line.substr(start, pos - start);
        while (!field.empty() && (field.front() == ' ' || field.front() == '\t'))
            field.remove_prefix(1);
        while (!field.empty() && (field.back() == ' ' || field.back() == '\t' ||
                                  field.back() == '\r'))
            field.remove_suffix(1);
        out.push_back(field);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline double parse_cell(std::string_view cell, std::size_t line_no, std::string_view column) {
    double value = 0.0;
    const auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || p != cell.data() + cell.size())
        throw CsvError("line " + std::to_string(line_no) + ": cannot parse " +
                       std::string(column) + " value '" + std::string(cell) + "'");
    return value;
}

}  // namespace detail

/// Parses OHLC rows from CSV text. Rows with high < low are loaded and
/// flagged, not dropped; every parse failure names its line.
inline PriceSeries parse_prices_csv(std::string_view text, const CsvSchema& schema = {}) {
    // Strip a UTF-8 BOM if present.
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

    std::size_t line_no = 0;
    std::size_t cursor = 0;
    auto next_line = [&](std::string_view& line) {
        if (cursor >= text.size()) return false;
        const std::size_t pos = text.find('\n', cursor);
        line = pos == std::string_view::npos ? text.substr(cursor)
                                             : text.substr(cursor, pos - cursor);
        cursor = pos == std::string_view::npos ? text.size() : pos + 1;
        ++line_no;
        return true;
    };

    std::string_view header;
    if (!next_line(header)) throw InsufficientDataError("CSV input is empty");
    const auto columns = detail::split_fields(header, schema.delimiter);
    auto find_column = [&](const std::string& name) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw CsvError("missing column '" + name + "' in CSV header");
    };
    const std::size_t date_idx = find_column(schema.date_column);
    const std::size_t close_idx = find_column(schema.close_column);
    const std::size_t high_idx = find_column(schema.high_column);
    const std::size_t low_idx = find_column(schema.low_column);
    const std::size_t needed =
        std::max(std::max(date_idx, close_idx), std::max(high_idx, low_idx)) + 1;

    std::vector<Date> dates;
    std::vector<double> close, high, low;
    std::string_view line;
    while (next_line(line)) {
        if (line.empty() || line == "\r") continue;
        const auto fields = detail::split_fields(line, schema.delimiter);
        if (fields.size() < needed)
            throw CsvError("line " + std::to_string(line_no) + ": expected at least " +
                           std::to_string(needed) + " fields, got " +
                           std::to_string(fields.size()));
        try {
            dates.push_back(Date::parse(fields[date_idx]));
        } catch (const DomainError& e) {
            throw CsvError("line " + std::to_string(line_no) + ": " + e.what());
        }
        close.push_back(detail::parse_cell(fields[close_idx], line_no, schema.close_column));
        high.push_back(detail::parse_cell(fields[high_idx], line_no, schema.high_column));
        low.push_back(detail::parse_cell(fields[low_idx], line_no, schema.low_column));
    }
    if (dates.empty()) throw InsufficientDataError("CSV has a header but no data rows");

    return PriceSeries(std::move(dates), std::move(close), std::move(high), std::move(low));
}

inline PriceSeries load_csv(const std::filesystem::path& path, const CsvSchema& schema = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path.string() + "'");
    return parse_prices_csv(buf.str(), schema);
}

/// Writes an OHLC file that load_csv reads back exactly: full-precision
/// prices, ISO dates, schema-controlled header.
inline void write_prices_csv(std::ostream& out, const PriceSeries& prices,
                             const CsvSchema& schema = {}) {
    const char d = schema.delimiter;
    out << schema.date_column << d << schema.close_column << d << schema.high_column << d
        << schema.low_column << '\n';
    char buf[3 * 32];
    for (std::size_t i = 0; i < prices.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", prices.close()[i]);
        out << prices.dates()[i].to_string() << d << buf;
        std::snprintf(buf, sizeof(buf), "%.17g", prices.high()[i]);
        out << d << buf;
        std::snprintf(buf, sizeof(buf), "%.17g", prices.low()[i]);
        out << d << buf << '\n';
    }
    if (!out) throw IoError("write failure while emitting price CSV");
}

}  // namespace hurstlab
