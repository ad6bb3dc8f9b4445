// Immutable lexical resources and their loaders.
//
// File formats (UTF-8, case-folded at load, `#` starts a comment line in
// the line-oriented files):
//   norms.tsv        header row, then word + concreteness, imageability,
//                    familiarity, age_of_acquisition, valence, arousal;
//                    an empty cell marks a missing dimension
//   frequencies.tsv  word <TAB> zipf   (optional header "word\tzipf")
//   connectives.txt  `[causal]`, `[logical]`, `[adversative]`, `[temporal]`,
//                    `[additive]` sections, one phrase per line
//   negations.txt    one phrase per line
//   stopwords.txt    one word per line
#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "metrix/document.hpp"
#include "metrix/error.hpp"
#include "metrix/utf8.hpp"

namespace metrix {

namespace detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Calls fn(line, line_no) for each line with '\r' stripped.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t pos = 0, line_no = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, line_no);
  }
}

inline std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::optional<double> parse_double(std::string_view s) {
  s = strip(s);
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v))
    return std::nullopt;
  return v;
}

inline std::vector<std::string> split_words(std::string_view phrase) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < phrase.size()) {
    while (i < phrase.size() && (phrase[i] == ' ' || phrase[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < phrase.size() && phrase[j] != ' ' && phrase[j] != '\t') ++j;
    if (j > i) out.emplace_back(phrase.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------- norms

enum class NormDimension {
  kConcreteness,
  kImageability,
  kFamiliarity,
  kAgeOfAcquisition,
  kValence,
  kArousal
};

inline constexpr std::array<NormDimension, 6> kNormDimensions = {
    NormDimension::kConcreteness,     NormDimension::kImageability,
    NormDimension::kFamiliarity,      NormDimension::kAgeOfAcquisition,
    NormDimension::kValence,          NormDimension::kArousal};

// Upper end of the rating scale: 7 for the first four, 9 for affect.
inline constexpr double scale_max(NormDimension d) {
  return (d == NormDimension::kValence || d == NormDimension::kArousal) ? 9.0 : 7.0;
}

struct NormEntry {
  std::array<std::optional<double>, 6> values;

  std::optional<double> get(NormDimension d) const {
    return values[static_cast<std::size_t>(d)];
  }
  friend bool operator==(const NormEntry&, const NormEntry&) = default;
};

class NormsTable {
 public:
  const NormEntry* find(std::string_view folded) const {
    auto it = entries_.find(std::string(folded));
    return it == entries_.end() ? nullptr : &it->second;
  }
  std::size_t size() const { return entries_.size(); }
  std::size_t duplicate_warnings() const { return duplicates_; }

  void insert(std::string word, NormEntry e) {
    auto [it, inserted] = entries_.insert_or_assign(std::move(word), e);
    if (!inserted) ++duplicates_;
  }

  friend bool operator==(const NormsTable& a, const NormsTable& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::unordered_map<std::string, NormEntry> entries_;
  std::size_t duplicates_ = 0;
};

inline NormsTable parse_norms(std::string_view text) {
  NormsTable table;
  bool header = true;
  detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (header) {
      header = false;
      return;
    }
    if (detail::strip(line).empty() || line.front() == '#') return;
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
      auto tab = line.find('\t', start);
      cells.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (cells.size() != 7)
      throw LexiconFormatError(line_no, "expected 7 columns, found " +
                                            std::to_string(cells.size()));
    NormEntry e;
    for (std::size_t i = 0; i < 6; ++i) {
      auto cell = detail::strip(cells[i + 1]);
      if (cell.empty()) continue;
      auto v = detail::parse_double(cell);
      if (!v)
        throw LexiconFormatError(line_no, "non-numeric norm '" + std::string(cell) + "'");
      double hi = scale_max(kNormDimensions[i]);
      if (*v < 1.0 || *v > hi)
        throw LexiconFormatError(line_no, "norm value out of range [1, " +
                                              std::to_string(static_cast<int>(hi)) + "]");
      e.values[i] = *v;
    }
    auto word = detail::strip(cells[0]);
    if (word.empty()) throw LexiconFormatError(line_no, "empty word");
    table.insert(utf8::fold_case(word), e);
  });
  return table;
}

inline NormsTable load_norms(const std::filesystem::path& path) {
  return parse_norms(detail::read_file(path));
}

// ------------------------------------------------------------ frequency

class FrequencyTable {
 public:
  // Out-of-vocabulary words get 0.0, i.e. rarer than anything attested.
  double zipf(std::string_view word) const {
    auto it = values_.find(utf8::fold_case(word));
    return it == values_.end() ? 0.0 : it->second;
  }
  bool contains(std::string_view word) const {
    return values_.count(utf8::fold_case(word)) != 0;
  }
  std::size_t size() const { return values_.size(); }
  void insert(std::string folded, double value) {
    values_.insert_or_assign(std::move(folded), value);
  }

  friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;

 private:
  std::unordered_map<std::string, double> values_;
};

inline double zipf(std::string_view word, const FrequencyTable& table) {
  return table.zipf(word);
}

inline FrequencyTable parse_frequencies(std::string_view text) {
  FrequencyTable table;
  detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (detail::strip(line).empty() || line.front() == '#') return;
    auto tab = line.find('\t');
    if (tab == std::string_view::npos)
      throw LexiconFormatError(line_no, "expected word<TAB>zipf");
    auto word = detail::strip(line.substr(0, tab));
    auto value = line.substr(tab + 1);
    if (line_no == 1 && word == "word") return;
    auto v = detail::parse_double(value);
    if (!v) throw LexiconFormatError(line_no, "non-numeric zipf value");
    if (*v < 0.0 || *v > 8.0)
      throw LexiconFormatError(line_no, "zipf value out of range [0, 8]");
    table.insert(utf8::fold_case(word), *v);
  });
  return table;
}

inline FrequencyTable load_frequencies(const std::filesystem::path& path) {
  return parse_frequencies(detail::read_file(path));
}

// -------------------------------------------------------------- phrases

// Set of case-folded phrases of one or more words.
class PhraseSet {
 public:
  void add(std::string_view phrase) {
    auto words = detail::split_words(utf8::fold_case(phrase));
    if (words.empty()) return;
    max_words_ = std::max(max_words_, words.size());
    std::string key;
    for (const auto& w : words) {
      if (!key.empty()) key += ' ';
      key += w;
    }
    phrases_.insert(std::move(key));
  }

  bool contains(std::string_view folded_phrase) const {
    return phrases_.count(std::string(folded_phrase)) != 0;
  }
  std::size_t size() const { return phrases_.size(); }
  bool empty() const { return phrases_.empty(); }
  std::size_t max_words() const { return max_words_; }

  // Longest-match-first, non-overlapping scan over case-folded words.
  std::size_t count_matches(const std::vector<std::string>& words) const {
    if (phrases_.empty()) return 0;
    std::size_t count = 0, i = 0;
    std::string key;
    while (i < words.size()) {
      std::size_t matched = 0;
      std::size_t longest = std::min(max_words_, words.size() - i);
      for (std::size_t len = longest; len >= 1 && matched == 0; --len) {
        key.clear();
        for (std::size_t k = 0; k < len; ++k) {
          if (k) key += ' ';
          key += words[i + k];
        }
        if (phrases_.count(key)) matched = len;
      }
      if (matched) {
        ++count;
        i += matched;
      } else {
        ++i;
      }
    }
    return count;
  }

  friend bool operator==(const PhraseSet& a, const PhraseSet& b) {
    return a.phrases_ == b.phrases_;
  }

 private:
  std::unordered_set<std::string> phrases_;
  std::size_t max_words_ = 0;
};

inline PhraseSet parse_phrase_list(std::string_view text) {
  PhraseSet set;
  detail::for_each_line(text, [&](std::string_view line, std::size_t) {
    line = detail::strip(line);
    if (line.empty() || line.front() == '#') return;
    set.add(line);
  });
  return set;
}

inline PhraseSet load_phrase_list(const std::filesystem::path& path) {
  return parse_phrase_list(detail::read_file(path));
}

// Case-folded surface forms of a sentence, punctuation removed; the unit
// over which phrase lists are matched.
inline std::vector<std::string> phrase_words(const Sentence& s) {
  std::vector<std::string> out;
  out.reserve(s.tokens.size());
  for (const auto& t : s.tokens)
    if (t.upos != Upos::PUNCT && t.is_alphanumeric)
      out.push_back(utf8::fold_case(t.surface));
  return out;
}

// ---------------------------------------------------------- connectives

enum class ConnectiveCategory { kCausal, kLogical, kAdversative, kTemporal, kAdditive };

inline constexpr std::array<std::string_view, 5> kConnectiveSections = {
    "causal", "logical", "adversative", "temporal", "additive"};

struct ConnectiveSets {
  std::array<PhraseSet, 5> sets;

  const PhraseSet& operator[](ConnectiveCategory c) const {
    return sets[static_cast<std::size_t>(c)];
  }
  PhraseSet& operator[](ConnectiveCategory c) {
    return sets[static_cast<std::size_t>(c)];
  }
  friend bool operator==(const ConnectiveSets&, const ConnectiveSets&) = default;
};

struct ConnectiveCounts {
  std::array<std::size_t, 5> by_category{};

  std::size_t operator[](ConnectiveCategory c) const {
    return by_category[static_cast<std::size_t>(c)];
  }
  std::size_t total() const {
    std::size_t n = 0;
    for (auto c : by_category) n += c;
    return n;
  }
};

inline ConnectiveSets parse_connectives(std::string_view text) {
  ConnectiveSets out;
  PhraseSet* current = nullptr;
  detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    line = detail::strip(line);
    if (line.empty() || line.front() == '#') return;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw LexiconFormatError(line_no, "unterminated section header");
      auto name = utf8::fold_case(detail::strip(line.substr(1, line.size() - 2)));
      current = nullptr;
      for (std::size_t i = 0; i < kConnectiveSections.size(); ++i)
        if (kConnectiveSections[i] == name) current = &out.sets[i];
      if (!current) throw LexiconFormatError(line_no, "unknown section '" + name + "'");
      return;
    }
    if (!current) throw LexiconFormatError(line_no, "phrase outside a section");
    if (detail::split_words(line).size() > 4)
      throw LexiconFormatError(line_no, "connective longer than 4 words");
    current->add(line);
  });
  return out;
}

inline ConnectiveSets load_connectives(const std::filesystem::path& path) {
  return parse_connectives(detail::read_file(path));
}

// Per-category counts; a phrase listed under two categories counts in both.
inline ConnectiveCounts match_connectives(const Sentence& sentence,
                                          const ConnectiveSets& sets) {
  ConnectiveCounts counts;
  auto words = phrase_words(sentence);
  for (std::size_t c = 0; c < sets.sets.size(); ++c)
    counts.by_category[c] = sets.sets[c].count_matches(words);
  return counts;
}

// ------------------------------------------------------------ stopwords

class WordSet {
 public:
  void add(std::string_view word) { words_.insert(utf8::fold_case(word)); }
  bool contains(std::string_view folded) const {
    return words_.count(std::string(folded)) != 0;
  }
  std::size_t size() const { return words_.size(); }
  friend bool operator==(const WordSet&, const WordSet&) = default;

 private:
  std::unordered_set<std::string> words_;
};

inline WordSet parse_word_list(std::string_view text) {
  WordSet set;
  detail::for_each_line(text, [&](std::string_view line, std::size_t) {
    line = detail::strip(line);
    if (line.empty() || line.front() == '#') return;
    set.add(line);
  });
  return set;
}

// --------------------------------------------------------------- bundle

struct LexiconBundle {
  NormsTable norms;
  FrequencyTable frequencies;
  ConnectiveSets connectives;
  PhraseSet negations;
  WordSet stopwords;

  static LexiconBundle load(const std::filesystem::path& dir) {
    LexiconBundle b;
    b.norms = load_norms(dir / "norms.tsv");
    b.frequencies = load_frequencies(dir / "frequencies.tsv");
    b.connectives = load_connectives(dir / "connectives.txt");
    b.negations = load_phrase_list(dir / "negations.txt");
    b.stopwords = parse_word_list(detail::read_file(dir / "stopwords.txt"));
    return b;
  }
};

}  // namespace metrix
