#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace annotq {

// Bad or unusable input data (missing file, unreadable table, bad date, ...).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fit or statistic was requested on data with no observations in range.
class empty_support_error : public data_error {
 public:
  using data_error::data_error;
};

// Recoverable flat-file problem; the reader has skipped to the next record
// and may be called again.
class parse_error : public data_error {
 public:
  enum class Kind { Malformed, Truncated, BadDate };

  parse_error(Kind kind, std::uint64_t line, const std::string& what)
      : data_error(what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::uint64_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::uint64_t line_;
};

}  // namespace annotq
