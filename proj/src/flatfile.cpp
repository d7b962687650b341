#include "annotq/flatfile.hpp"

#include <zlib.h>

#include <nlohmann/json.hpp>

namespace annotq {

namespace {

std::string_view rstrip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' ||
                        s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

std::string_view lstrip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

bool has_tag(std::string_view line, std::string_view tag) {
  return line.size() >= tag.size() && line.substr(0, tag.size()) == tag &&
         (line.size() == tag.size() || line[tag.size()] == ' ');
}

// First token of the AC payload, with the trailing ';' removed.
std::string first_accession(std::string_view payload) {
  payload = lstrip(payload);
  size_t end = payload.find_first_of("; \t");
  std::string acc{payload.substr(0, end)};
  return acc;
}

// Leading date token of a DT payload: "01-NOV-1988 (Rel. 09, Created)" or
// "22-JUL-2008, integrated into UniProtKB/Swiss-Prot."
std::optional<Date> dt_date(std::string_view payload) {
  payload = lstrip(payload);
  size_t end = payload.find_first_of(", \t");
  return parse_flatfile_date(payload.substr(0, end == std::string_view::npos
                                                    ? payload.size()
                                                    : end));
}

}  // namespace

std::string to_string(Lineage l) { return l == Lineage::Manual ? "manual" : "automated"; }

std::optional<Lineage> lineage_from_string(std::string_view s) {
  if (s == "manual") return Lineage::Manual;
  if (s == "automated") return Lineage::Automated;
  return std::nullopt;
}

bool IstreamLineSource::next_line(std::string& line) {
  return static_cast<bool>(std::getline(in_, line));
}

struct GzLineSource::Impl {
  gzFile file = nullptr;
  std::string buf;
  bool eof = false;
};

GzLineSource::GzLineSource(const std::string& path) : impl_(std::make_unique<Impl>()) {
  impl_->file = gzopen(path.c_str(), "rb");
  if (!impl_->file) throw data_error("cannot open input file: " + path);
  gzbuffer(impl_->file, 1 << 16);
}

GzLineSource::~GzLineSource() {
  if (impl_ && impl_->file) gzclose(impl_->file);
}

bool GzLineSource::next_line(std::string& line) {
  if (impl_->eof) return false;
  line.clear();
  char chunk[4096];
  for (;;) {
    if (gzgets(impl_->file, chunk, sizeof chunk) == nullptr) {
      int errnum = 0;
      const char* msg = gzerror(impl_->file, &errnum);
      if (errnum != Z_OK && errnum != Z_STREAM_END)
        throw data_error(std::string("gzip read error: ") + (msg ? msg : ""));
      impl_->eof = true;
      return !line.empty();
    }
    line += chunk;
    if (!line.empty() && line.back() == '\n') {
      line.pop_back();
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return true;
    }
  }
}

FlatFileReader::FlatFileReader(LineSource& source, DatasetVersion version)
    : source_(source), version_(std::move(version)) {}

std::optional<Entry> FlatFileReader::next() {
  if (eof_) return std::nullopt;

  std::string line;
  bool in_entry = false;
  bool have_ac = false;
  bool have_dt = false;
  std::uint64_t entry_start_line = 0;
  Entry entry;
  entry.source_version = version_.label;

  auto fetch = [&](std::string& out) -> bool {
    if (have_pending_) {
      out = std::move(pending_line_);
      have_pending_ = false;
      return true;
    }
    if (!source_.next_line(out)) return false;
    ++stats_.lines_read;
    return true;
  };

  while (fetch(line)) {
    const std::string_view view = rstrip(line);

    if (has_tag(view, "//")) {
      ++stats_.terminators;
      if (!in_entry || !have_ac) {
        ++stats_.parse_errors;
        throw parse_error(parse_error::Kind::Malformed, stats_.lines_read,
                          "record ending at line " + std::to_string(stats_.lines_read) +
                              " has no AC line");
      }
      ++stats_.entries_parsed;
      return entry;
    }

    if (has_tag(view, "ID")) {
      if (in_entry) {
        // unterminated record; re-start at this ID line on the next call
        pending_line_ = line;
        have_pending_ = true;
        ++stats_.parse_errors;
        throw parse_error(parse_error::Kind::Malformed, stats_.lines_read,
                          "record starting at line " + std::to_string(entry_start_line) +
                              " is not terminated");
      }
      in_entry = true;
      entry_start_line = stats_.lines_read;
      continue;
    }

    if (!in_entry) {
      ++stats_.skipped_lines;
      continue;
    }

    if (has_tag(view, "AC")) {
      if (!have_ac) {
        entry.accession = first_accession(view.substr(2));
        if (entry.accession.empty()) {
          ++stats_.parse_errors;
          throw parse_error(parse_error::Kind::Malformed, stats_.lines_read,
                            "empty AC line at line " + std::to_string(stats_.lines_read));
        }
        have_ac = true;
      }
      continue;
    }

    if (has_tag(view, "DT")) {
      if (!have_dt) {
        auto d = dt_date(view.substr(2));
        if (!d) {
          ++stats_.parse_errors;
          throw parse_error(parse_error::Kind::BadDate, stats_.lines_read,
                            "unparseable DT date at line " + std::to_string(stats_.lines_read));
        }
        if (version_.release_date && *d > *version_.release_date) {
          ++stats_.parse_errors;
          throw parse_error(parse_error::Kind::BadDate, stats_.lines_read,
                            "creation date " + d->iso() + " is after the release date " +
                                version_.release_date->iso());
        }
        entry.creation_date = *d;
        have_dt = true;
      }
      continue;
    }

    if (has_tag(view, "CC")) {
      std::string_view payload = rstrip(lstrip(view.substr(2)));
      if (!entry.comment_text.empty()) entry.comment_text += ' ';
      entry.comment_text += payload;
      continue;
    }

    ++stats_.skipped_lines;
  }

  eof_ = true;
  if (in_entry) {
    ++stats_.parse_errors;
    throw parse_error(parse_error::Kind::Truncated, stats_.lines_read,
                      "end of input inside the record starting at line " +
                          std::to_string(entry_start_line));
  }
  return std::nullopt;
}

std::vector<Entry> read_all_entries(LineSource& source, const DatasetVersion& version) {
  FlatFileReader reader(source, version);
  std::vector<Entry> out;
  while (auto e = reader.next()) out.push_back(std::move(*e));
  return out;
}

ValidationReport validate_count(std::uint64_t parsed, const DatasetVersion& version) {
  ValidationReport r;
  r.label = version.label;
  r.parsed = parsed;
  r.expected = version.expected_entry_count;
  if (!version.expected_entry_count) {
    r.passed = true;
    r.unchecked = true;
  } else {
    r.delta = static_cast<std::int64_t>(parsed) -
              static_cast<std::int64_t>(*version.expected_entry_count);
    r.passed = r.delta == 0;
  }
  return r;
}

std::string ValidationReport::to_json() const {
  nlohmann::json j;
  j["label"] = label;
  j["parsed"] = parsed;
  if (expected)
    j["expected"] = *expected;
  else
    j["expected"] = nullptr;
  j["status"] = passed ? "PASS" : "FAIL";
  j["unchecked"] = unchecked;
  j["delta"] = delta;
  j["skipped_lines"] = skipped_lines;
  j["parse_errors"] = parse_errors;
  return j.dump(2) + "\n";
}

}  // namespace annotq
