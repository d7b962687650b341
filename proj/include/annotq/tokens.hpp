#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "annotq/flatfile.hpp"

namespace annotq {

/// Cleaning rules for comment text. The defaults carry the full heading list
/// and the three historical copyright wordings; data/cleaning_config.json
/// ships the same content in editable form.
struct CleaningConfig {
  std::vector<std::string> topic_headings;    // uppercase, unique
  std::vector<std::string> copyright_phrases; // matched case-insensitively
  bool strip_copyright = false;

  static CleaningConfig defaults();
  static CleaningConfig load(const std::string& path);

  /// Throws data_error on empty or duplicate headings.
  void validate() const;
};

/// Word-frequency table for one corpus. Keys are lowercase tokens over the
/// [a-z0-9] alphabet; every count is >= 1.
struct FrequencyTable {
  std::unordered_map<std::string, std::uint64_t> counts;
  std::uint64_t total_tokens = 0;
  std::unordered_map<std::string, std::uint64_t> removed_headings;

  std::uint64_t total_types() const { return counts.size(); }

  bool operator==(const FrequencyTable& o) const {
    return counts == o.counts && total_tokens == o.total_tokens &&
           removed_headings == o.removed_headings;
  }

  /// Two-column "word<TAB>count" rows, count descending then word ascending.
  std::string to_tsv() const;
  std::string to_json() const;

  static FrequencyTable from_tsv(std::istream& in);
  static FrequencyTable from_tsv_file(const std::string& path);

  /// Count multiset, for the fitting layer.
  std::vector<std::uint64_t> count_values() const;
};

/// Removes dash-rule delimited blocks whose body contains a configured
/// copyright phrase. Text without such blocks comes back unchanged.
std::string strip_copyright(const std::string& text, const CleaningConfig& config);

struct CleanResult {
  std::vector<std::string> words;
  std::unordered_map<std::string, std::uint64_t> removed_headings;
};

/// Drops configured "-!- HEADING:" markers (tallying them), lowercases, and
/// splits on every character outside [a-z0-9].
CleanResult strip_topics_and_clean(const std::string& text, const CleaningConfig& config);

FrequencyTable count_words(std::span<const std::string> words);

/// Pointwise sum; associative and commutative with the empty table as identity.
FrequencyTable merge_tables(const FrequencyTable& a, const FrequencyTable& b);

/// Full cleaning pipeline for one entry's comment text.
void accumulate_entry(FrequencyTable& table, const std::string& comment_text,
                      const CleaningConfig& config);

/// Serial reference kernel: clean and count a batch of entries one by one.
FrequencyTable count_corpus_serial(std::span<const Entry> entries,
                                   const CleaningConfig& config);

/// OpenMP kernel: per-thread tables merged pairwise. Exact integer counts,
/// so the result is identical to the serial reference for any thread count.
/// jobs = 0 uses the OpenMP default.
FrequencyTable count_corpus(std::span<const Entry> entries, const CleaningConfig& config,
                            int jobs = 0);

}  // namespace annotq
