#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace hotcold {

/// Calendar date stored as a serial day number (days since 1970-01-01).
/// Plain value type: comparable, day arithmetic is integer arithmetic.
class Date {
public:
    Date() = default;
    explicit Date(std::int64_t serial_day) : day_(serial_day) {}
    Date(int year, int month, int day);

    /// Parses strict ISO-8601 "YYYY-MM-DD". Throws ValidationError otherwise.
    static Date parse(const std::string& iso);

    std::string to_string() const;

    std::int64_t serial() const { return day_; }
    int year() const;
    int month() const;      // 1..12
    int day_of_month() const;
    int weekday() const;    // 0 = Monday .. 6 = Sunday

    Date add_days(std::int64_t n) const { return Date(day_ + n); }
    std::int64_t days_until(Date other) const { return other.day_ - day_; }

    auto operator<=>(const Date&) const = default;

private:
    std::int64_t day_ = 0;
};

} // namespace hotcold
