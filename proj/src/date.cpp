#include "annotq/date.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>

namespace annotq {

namespace {

constexpr std::array<std::string_view, 12> kMonths = {
    "JAN", "FEB", "MAR", "APR", "MAY", "JUN",
    "JUL", "AUG", "SEP", "OCT", "NOV", "DEC"};

// mean Gregorian month: 365.2425 / 12 days
constexpr double kMeanMonthDays = 30.436875;

std::chrono::year_month_day to_ymd(const Date& d) {
  return std::chrono::year{d.year} / static_cast<int>(d.month) / static_cast<int>(d.day);
}

bool parse_uint(std::string_view s, unsigned& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && p == s.data() + s.size();
}

}  // namespace

std::int64_t Date::day_number() const {
  const auto days = std::chrono::sys_days{to_ymd(*this)};
  return days.time_since_epoch().count();
}

Date Date::from_day_number(std::int64_t days) {
  const std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{days}}};
  return Date{static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
              static_cast<unsigned>(ymd.day())};
}

bool Date::valid() const { return to_ymd(*this).ok(); }

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year, month, day);
  return buf;
}

std::optional<Date> parse_flatfile_date(std::string_view token) {
  // DD-MMM-YYYY
  if (token.size() != 11 || token[2] != '-' || token[6] != '-') return std::nullopt;
  unsigned day = 0, year = 0;
  if (!parse_uint(token.substr(0, 2), day) || !parse_uint(token.substr(7, 4), year))
    return std::nullopt;
  std::string mon{token.substr(3, 3)};
  for (auto& c : mon) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  unsigned month = 0;
  for (unsigned i = 0; i < kMonths.size(); ++i)
    if (mon == kMonths[i]) month = i + 1;
  if (month == 0) return std::nullopt;
  Date d{static_cast<int>(year), month, day};
  if (!d.valid()) return std::nullopt;
  return d;
}

std::optional<Date> parse_iso_date(std::string_view token) {
  if (token.size() != 10 || token[4] != '-' || token[7] != '-') return std::nullopt;
  unsigned y = 0, m = 0, dd = 0;
  if (!parse_uint(token.substr(0, 4), y) || !parse_uint(token.substr(5, 2), m) ||
      !parse_uint(token.substr(8, 2), dd))
    return std::nullopt;
  Date d{static_cast<int>(y), m, dd};
  if (!d.valid()) return std::nullopt;
  return d;
}

std::optional<Date> parse_date(std::string_view token) {
  if (auto d = parse_iso_date(token)) return d;
  return parse_flatfile_date(token);
}

int span_whole_months(double days) {
  return static_cast<int>(std::trunc(days / kMeanMonthDays));
}

}  // namespace annotq
