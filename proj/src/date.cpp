#include "gknn/date.hpp"

#include <cstdio>
#include <stdexcept>

namespace gknn {

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr int kDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month < 1 || month > 12) return 0;
    if (month == 2 && is_leap_year(year)) return 29;
    return kDays[month - 1];
}

bool valid_date(const CalendarDate& d) {
    return d.month >= 1 && d.month <= 12 && d.day >= 1 &&
           d.day <= days_in_month(d.year, d.month);
}

CalendarDate next_day(const CalendarDate& d) {
    CalendarDate n = d;
    if (d.day < days_in_month(d.year, d.month)) {
        ++n.day;
    } else if (d.month < 12) {
        ++n.month;
        n.day = 1;
    } else {
        ++n.year;
        n.month = 1;
        n.day = 1;
    }
    return n;
}

std::string format_date(const CalendarDate& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

CalendarDate parse_date(const std::string& text) {
    CalendarDate d;
    char tail = 0;
    if (std::sscanf(text.c_str(), "%d-%d-%d%c", &d.year, &d.month, &d.day, &tail) != 3 ||
        !valid_date(d)) {
        throw std::invalid_argument("malformed date '" + text +
                                    "' (expected YYYY-MM-DD)");
    }
    return d;
}

} // namespace gknn
