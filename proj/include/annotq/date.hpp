#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace annotq {

/// Calendar date on the proleptic Gregorian calendar. Arithmetic happens on
/// day numbers (days since 1970-01-01, may be negative).
struct Date {
  int year = 1970;
  unsigned month = 1;  // 1..12
  unsigned day = 1;    // 1..31

  bool operator==(const Date&) const = default;
  auto operator<=>(const Date& o) const { return day_number() <=> o.day_number(); }

  std::int64_t day_number() const;
  static Date from_day_number(std::int64_t days);

  bool valid() const;
  std::string iso() const;  // YYYY-MM-DD
};

/// Parses "DD-MMM-YYYY" (flat-file DT style, month uppercase or mixed case).
std::optional<Date> parse_flatfile_date(std::string_view token);

/// Parses "YYYY-MM-DD".
std::optional<Date> parse_iso_date(std::string_view token);

/// Accepts either of the above.
std::optional<Date> parse_date(std::string_view token);

/// Whole months in a day span, using the mean Gregorian month length and
/// truncating toward zero.
int span_whole_months(double days);

}  // namespace annotq
