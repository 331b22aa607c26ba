#include "hotcold/date.hpp"

#include <cstdio>

#include "hotcold/error.hpp"

namespace hotcold {
namespace {

// Civil <-> serial day conversion, Gregorian calendar, valid over the
// whole int range (Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

bool valid_ymd(int y, int m, int d) {
    if (m < 1 || m > 12 || d < 1) return false;
    static const int dim[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int max_d = dim[m - 1];
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap) max_d = 29;
    return d <= max_d;
}

} // namespace

Date::Date(int year, int month, int day) {
    if (!valid_ymd(year, month, day))
        throw ValidationError("invalid calendar date components");
    day_ = days_from_civil(year, month, day);
}

Date Date::parse(const std::string& iso) {
    int y = 0, m = 0, d = 0;
    char tail = 0;
    if (iso.size() != 10 ||
        std::sscanf(iso.c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &tail) != 3 ||
        iso[4] != '-' || iso[7] != '-' || !valid_ymd(y, m, d))
        throw ValidationError("invalid date '" + iso + "', expected YYYY-MM-DD");
    return Date(days_from_civil(y, m, d));
}

std::string Date::to_string() const {
    int y, m, d;
    civil_from_days(day_, y, m, d);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", y, m, d);
    return buf;
}

int Date::year() const {
    int y, m, d;
    civil_from_days(day_, y, m, d);
    return y;
}

int Date::month() const {
    int y, m, d;
    civil_from_days(day_, y, m, d);
    return m;
}

int Date::day_of_month() const {
    int y, m, d;
    civil_from_days(day_, y, m, d);
    return d;
}

int Date::weekday() const {
    // 1970-01-01 was a Thursday (weekday 3 with Monday = 0).
    std::int64_t w = (day_ + 3) % 7;
    if (w < 0) w += 7;
    return static_cast<int>(w);
}

} // namespace hotcold
