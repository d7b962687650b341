#pragma once

#include <cstdint>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "annotq/date.hpp"
#include "annotq/errors.hpp"

namespace annotq {

enum class Lineage { Manual, Automated };

std::string to_string(Lineage l);
std::optional<Lineage> lineage_from_string(std::string_view s);

/// One dataset release. expected_entry_count comes from the release notes
/// when known and drives count validation.
struct DatasetVersion {
  std::string label;
  std::optional<Date> release_date;
  std::optional<std::uint64_t> expected_entry_count;
  Lineage lineage = Lineage::Manual;
};

/// One parsed record: primary accession, first DT date, and the entry's
/// comment payloads joined with single spaces (tag stripped).
struct Entry {
  std::string accession;
  std::optional<Date> creation_date;
  std::string comment_text;
  std::string source_version;
};

inline const std::string& extract_comment_text(const Entry& e) { return e.comment_text; }

/// Line-by-line input abstraction so the parser can run off plain files,
/// gzip files and in-memory streams alike.
class LineSource {
 public:
  virtual ~LineSource() = default;
  /// Fills `line` (without the newline) and returns true, or returns false at EOF.
  virtual bool next_line(std::string& line) = 0;
};

class IstreamLineSource final : public LineSource {
 public:
  explicit IstreamLineSource(std::istream& in) : in_(in) {}
  bool next_line(std::string& line) override;

 private:
  std::istream& in_;
};

/// Reads a file through zlib, which transparently detects the gzip magic
/// bytes and otherwise passes the raw bytes through.
class GzLineSource final : public LineSource {
 public:
  explicit GzLineSource(const std::string& path);
  ~GzLineSource() override;
  GzLineSource(const GzLineSource&) = delete;
  GzLineSource& operator=(const GzLineSource&) = delete;
  bool next_line(std::string& line) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct ReaderStats {
  std::uint64_t lines_read = 0;
  std::uint64_t entries_parsed = 0;
  std::uint64_t terminators = 0;
  std::uint64_t skipped_lines = 0;  // line types without a parsing rule
  std::uint64_t parse_errors = 0;
};

/// Streaming flat-file reader. Entries are framed by an ID line and a '//'
/// terminator; only the ID/AC/DT/CC tags are interpreted. Holds at most one
/// record in memory.
///
/// next() throws parse_error for a malformed record (recoverable: the reader
/// has already consumed through the record's terminator, call next() again)
/// and for a truncated final record (EOF before '//').
class FlatFileReader {
 public:
  FlatFileReader(LineSource& source, DatasetVersion version);

  std::optional<Entry> next();

  const ReaderStats& stats() const noexcept { return stats_; }
  const DatasetVersion& version() const noexcept { return version_; }

 private:
  LineSource& source_;
  DatasetVersion version_;
  ReaderStats stats_;
  std::string pending_line_;
  bool have_pending_ = false;
  bool eof_ = false;
};

/// Drains a reader into a vector. Parse errors propagate.
std::vector<Entry> read_all_entries(LineSource& source, const DatasetVersion& version);

struct ValidationReport {
  std::string label;
  std::uint64_t parsed = 0;
  std::optional<std::uint64_t> expected;
  bool passed = false;
  bool unchecked = false;  // release notes gave no expected count
  std::int64_t delta = 0;  // parsed - expected when checked
  std::uint64_t skipped_lines = 0;
  std::uint64_t parse_errors = 0;

  std::string to_json() const;
};

/// PASS when no expected count is configured (unchecked) or when it matches.
ValidationReport validate_count(std::uint64_t parsed, const DatasetVersion& version);

}  // namespace annotq
