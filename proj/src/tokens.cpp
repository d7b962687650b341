#include "annotq/tokens.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "annotq/errors.hpp"

namespace annotq {

namespace {

constexpr std::size_t kMinDashRule = 10;

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

bool contains_ci(std::string_view haystack, std::string_view needle_lower) {
  if (needle_lower.empty() || haystack.size() < needle_lower.size()) return false;
  for (size_t i = 0; i + needle_lower.size() <= haystack.size(); ++i) {
    size_t j = 0;
    while (j < needle_lower.size() && lower(haystack[i + j]) == needle_lower[j]) ++j;
    if (j == needle_lower.size()) return true;
  }
  return false;
}

struct DashRun {
  size_t begin;
  size_t end;  // one past the last dash
};

std::vector<DashRun> find_dash_rules(std::string_view text) {
  std::vector<DashRun> runs;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '-') {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && text[j] == '-') ++j;
    if (j - i >= kMinDashRule) runs.push_back({i, j});
    i = j;
  }
  return runs;
}

}  // namespace

CleaningConfig CleaningConfig::defaults() {
  CleaningConfig c;
  c.topic_headings = {
      "ALLERGEN", "ALTERNATIVE PRODUCTS", "BIOPHYSICOCHEMICAL PROPERTIES",
      "BIOTECHNOLOGY", "CATALYTIC ACTIVITY", "CAUTION", "COFACTOR", "DATABASE",
      "DEVELOPMENTAL STAGE", "DISEASE", "DISRUPTION PHENOTYPE", "DOMAIN",
      "ENZYME REGULATION", "FUNCTION", "INDUCTION", "INTERACTION",
      "MASS SPECTROMETRY", "MISCELLANEOUS", "PATHWAY", "PHARMACEUTICAL",
      "POLYMORPHISM", "PTM", "RNA EDITING", "SEQUENCE CAUTION", "SIMILARITY",
      "SUBCELLULAR LOCATION", "SUBUNIT", "TISSUE SPECIFICITY", "TOXIC DOSE",
      "WEB RESOURCE"};
  c.copyright_phrases = {
      "entry is copyright",
      "copyrighted by the uniprot consortium",
      "distributed under the creative commons"};
  return c;
}

CleaningConfig CleaningConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open cleaning config: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw data_error("bad cleaning config " + path + ": " + e.what());
  }
  CleaningConfig c = defaults();
  if (j.contains("topic_headings")) c.topic_headings = j["topic_headings"].get<std::vector<std::string>>();
  if (j.contains("copyright_phrases"))
    c.copyright_phrases = j["copyright_phrases"].get<std::vector<std::string>>();
  if (j.contains("strip_copyright")) c.strip_copyright = j["strip_copyright"].get<bool>();
  c.validate();
  return c;
}

void CleaningConfig::validate() const {
  std::set<std::string> seen;
  for (const auto& h : topic_headings) {
    if (h.empty()) throw data_error("empty topic heading in cleaning config");
    if (!seen.insert(h).second) throw data_error("duplicate topic heading: " + h);
  }
}

std::string strip_copyright(const std::string& text, const CleaningConfig& config) {
  const auto runs = find_dash_rules(text);
  if (runs.size() < 2) return text;

  std::vector<std::string> phrases;
  phrases.reserve(config.copyright_phrases.size());
  for (const auto& p : config.copyright_phrases) {
    std::string low = p;
    std::transform(low.begin(), low.end(), low.begin(), lower);
    phrases.push_back(std::move(low));
  }

  // Candidate blocks are the spans between consecutive dash rules. A rule
  // that closes a matched block cannot also open the next one.
  std::vector<std::pair<size_t, size_t>> removals;
  size_t i = 0;
  while (i + 1 < runs.size()) {
    const std::string_view body{text.data() + runs[i].end,
                                runs[i + 1].begin - runs[i].end};
    const bool matched = std::any_of(phrases.begin(), phrases.end(),
                                     [&](const std::string& p) { return contains_ci(body, p); });
    if (matched) {
      removals.emplace_back(runs[i].begin, runs[i + 1].end);
      i += 2;
    } else {
      ++i;
    }
  }
  if (removals.empty()) return text;

  std::string out;
  out.reserve(text.size());
  size_t pos = 0;
  for (auto [lo, hi] : removals) {
    // widen to swallow surrounding whitespace, leaving one separator
    while (lo > pos && (text[lo - 1] == ' ' || text[lo - 1] == '\t')) --lo;
    while (hi < text.size() && (text[hi] == ' ' || text[hi] == '\t')) ++hi;
    out.append(text, pos, lo - pos);
    if (!out.empty() && hi < text.size()) out += ' ';
    pos = hi;
  }
  out.append(text, pos, text.size() - pos);
  return out;
}

CleanResult strip_topics_and_clean(const std::string& text, const CleaningConfig& config) {
  CleanResult result;

  // pass 1: blank out configured "-!- HEADING:" markers
  std::string work = text;
  size_t pos = 0;
  while ((pos = work.find("-!-", pos)) != std::string::npos) {
    size_t label_start = pos + 3;
    while (label_start < work.size() && work[label_start] == ' ') ++label_start;
    const size_t colon = work.find(':', label_start);
    if (colon == std::string::npos) break;
    const std::string candidate = work.substr(label_start, colon - label_start);
    const bool known = std::find(config.topic_headings.begin(), config.topic_headings.end(),
                                 candidate) != config.topic_headings.end();
    if (known) {
      ++result.removed_headings[candidate];
      std::fill(work.begin() + static_cast<std::ptrdiff_t>(pos),
                work.begin() + static_cast<std::ptrdiff_t>(colon) + 1, ' ');
      pos = colon + 1;
    } else {
      pos += 3;
    }
  }

  // pass 2: lowercase and split on everything outside the token alphabet
  std::string token;
  for (char raw : work) {
    const char c = lower(raw);
    if (is_word_char(c)) {
      token += c;
    } else if (!token.empty()) {
      result.words.push_back(std::move(token));
      token.clear();
    }
  }
  if (!token.empty()) result.words.push_back(std::move(token));
  return result;
}

FrequencyTable count_words(std::span<const std::string> words) {
  FrequencyTable t;
  for (const auto& w : words) {
    ++t.counts[w];
    ++t.total_tokens;
  }
  return t;
}

FrequencyTable merge_tables(const FrequencyTable& a, const FrequencyTable& b) {
  FrequencyTable out = a;
  for (const auto& [w, c] : b.counts) out.counts[w] += c;
  out.total_tokens += b.total_tokens;
  for (const auto& [h, c] : b.removed_headings) out.removed_headings[h] += c;
  return out;
}

void accumulate_entry(FrequencyTable& table, const std::string& comment_text,
                      const CleaningConfig& config) {
  const std::string text =
      config.strip_copyright ? strip_copyright(comment_text, config) : comment_text;
  CleanResult cleaned = strip_topics_and_clean(text, config);
  for (auto& w : cleaned.words) {
    ++table.counts[std::move(w)];
    ++table.total_tokens;
  }
  for (const auto& [h, c] : cleaned.removed_headings) table.removed_headings[h] += c;
}

FrequencyTable count_corpus_serial(std::span<const Entry> entries,
                                   const CleaningConfig& config) {
  FrequencyTable t;
  for (const auto& e : entries) accumulate_entry(t, e.comment_text, config);
  return t;
}

FrequencyTable count_corpus(std::span<const Entry> entries, const CleaningConfig& config,
                            int jobs) {
#ifdef _OPENMP
  const int max_threads = jobs > 0 ? jobs : omp_get_max_threads();
  if (max_threads > 1 && entries.size() > 1) {
    std::vector<FrequencyTable> partial(static_cast<size_t>(max_threads));
#pragma omp parallel num_threads(max_threads)
    {
      FrequencyTable& mine = partial[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(entries.size()); ++i)
        accumulate_entry(mine, entries[static_cast<size_t>(i)].comment_text, config);
    }
    FrequencyTable out;
    for (auto& p : partial) out = merge_tables(out, p);
    return out;
  }
#else
  (void)jobs;
#endif
  return count_corpus_serial(entries, config);
}

std::string FrequencyTable::to_tsv() const {
  std::vector<std::pair<std::string_view, std::uint64_t>> rows;
  rows.reserve(counts.size());
  for (const auto& [w, c] : counts) rows.emplace_back(w, c);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::string out;
  for (const auto& [w, c] : rows) {
    out += w;
    out += '\t';
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

std::string FrequencyTable::to_json() const {
  nlohmann::json j;
  j["total_tokens"] = total_tokens;
  j["total_types"] = total_types();
  j["counts"] = std::map<std::string, std::uint64_t>(counts.begin(), counts.end());
  j["removed_headings"] =
      std::map<std::string, std::uint64_t>(removed_headings.begin(), removed_headings.end());
  return j.dump(2) + "\n";
}

FrequencyTable FrequencyTable::from_tsv(std::istream& in) {
  FrequencyTable t;
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw data_error("word table line " + std::to_string(lineno) + " has no tab");
    const std::string word = line.substr(0, tab);
    std::uint64_t count = 0;
    try {
      count = std::stoull(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw data_error("word table line " + std::to_string(lineno) + " has a bad count");
    }
    if (word.empty() || count == 0)
      throw data_error("word table line " + std::to_string(lineno) + " is invalid");
    t.counts[word] += count;
    t.total_tokens += count;
  }
  return t;
}

FrequencyTable FrequencyTable::from_tsv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open word table: " + path);
  return from_tsv(in);
}

std::vector<std::uint64_t> FrequencyTable::count_values() const {
  std::vector<std::uint64_t> v;
  v.reserve(counts.size());
  for (const auto& [w, c] : counts) v.push_back(c);
  return v;
}

}  // namespace annotq
