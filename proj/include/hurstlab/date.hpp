#pragma once

#include <array>
#include <charconv>
#include <compare>
#include <cstdio>
#include <string>
#include <string_view>

#include "hurstlab/error.hpp"

namespace hurstlab {

/// Calendar date, ISO-8601 (yyyy-mm-dd) on the wire. No time zones, no
/// calendar arithmetic beyond ordering and the successor day.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    friend auto operator<=>(const Date&, const Date&) = default;

    static constexpr bool is_leap_year(int y) {
        return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    }

    static constexpr int days_in_month(int y, int m) {
        constexpr std::array<int, 12> days{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
        if (m == 2 && is_leap_year(y)) return 29;
        return days[static_cast<std::size_t>(m - 1)];
    }

    constexpr bool valid() const {
        return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
    }

    /// Next calendar day.
    Date next() const {
        Date d = *this;
        if (++d.day > days_in_month(d.year, d.month)) {
            d.day = 1;
            if (++d.month > 12) {
                d.month = 1;
                ++d.year;
            }
        }
        return d;
    }

    std::string to_string() const {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
        return buf;
    }

    /// Parses strict "yyyy-mm-dd". Throws DomainError on anything else.
    static Date parse(std::string_view text) {
        auto fail = [&] {
            throw DomainError("invalid ISO-8601 date: '" + std::string(text) + "'");
        };
        if (text.size() != 10 || text[4] != '-' || text[7] != '-') fail();
        auto parse_int = [&](std::string_view s, int& out) {
            for (char c : s)
                if (c < '0' || c > '9') fail();
            auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
            if (ec != std::errc{} || p != s.data() + s.size()) fail();
        };
        Date d;
        parse_int(text.substr(0, 4), d.year);
        parse_int(text.substr(5, 2), d.month);
        parse_int(text.substr(8, 2), d.day);
        if (!d.valid()) fail();
        return d;
    }
};

}  // namespace hurstlab
