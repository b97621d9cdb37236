#pragma once

#include <string>

namespace gknn {

struct CalendarDate {
    int year = 1970;
    int month = 1; // 1..12
    int day = 1;   // 1..days_in_month

    friend bool operator==(const CalendarDate&, const CalendarDate&) = default;
};

bool is_leap_year(int year);
int days_in_month(int year, int month);
bool valid_date(const CalendarDate& d);
CalendarDate next_day(const CalendarDate& d);

std::string format_date(const CalendarDate& d); // YYYY-MM-DD
CalendarDate parse_date(const std::string& text); // throws on malformed input

} // namespace gknn
