// Annotated document model: paragraphs -> sentences -> tokens.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace metrix {

enum class Upos {
  NOUN, PROPN, VERB, AUX, ADJ, ADV, PRON, DET, ADP,
  CCONJ, SCONJ, NUM, PART, INTJ, PUNCT, SYM, X
};

inline constexpr std::array<std::string_view, 17> kUposNames = {
    "NOUN", "PROPN", "VERB", "AUX",   "ADJ",   "ADV", "PRON", "DET", "ADP",
    "CCONJ", "SCONJ", "NUM", "PART", "INTJ", "PUNCT", "SYM", "X"};

inline std::string_view to_string(Upos u) {
  return kUposNames[static_cast<std::size_t>(u)];
}

// Unknown tags map to X.
inline Upos parse_upos(std::string_view tag) {
  for (std::size_t i = 0; i < kUposNames.size(); ++i)
    if (kUposNames[i] == tag) return static_cast<Upos>(i);
  return Upos::X;
}

inline constexpr bool is_content_upos(Upos u) {
  return u == Upos::NOUN || u == Upos::PROPN || u == Upos::VERB ||
         u == Upos::ADJ || u == Upos::ADV;
}

inline constexpr bool is_nominal(Upos u) {
  return u == Upos::NOUN || u == Upos::PROPN;
}

// Morphological features, kept sorted by key as CoNLL-U requires.
class Features {
 public:
  using Entry = std::pair<std::string, std::string>;

  Features() = default;

  void set(std::string key, std::string value) {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const Entry& e, const std::string& k) { return e.first < k; });
    if (it != entries_.end() && it->first == key)
      it->second = std::move(value);
    else
      entries_.insert(it, {std::move(key), std::move(value)});
  }

  std::optional<std::string_view> get(std::string_view key) const {
    for (const auto& [k, v] : entries_)
      if (k == key) return std::string_view(v);
    return std::nullopt;
  }

  // True when `value` is one of the comma-separated values stored for `key`.
  bool has(std::string_view key, std::string_view value) const {
    auto v = get(key);
    if (!v) return false;
    std::string_view rest = *v;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      if (rest.substr(0, comma) == value) return true;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return false;
  }

  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  friend bool operator==(const Features&, const Features&) = default;

 private:
  std::vector<Entry> entries_;
};

struct Token {
  static constexpr int kRoot = -1;

  std::string surface;
  std::string lemma;
  Upos upos = Upos::X;
  Features morph;
  int head = kRoot;  // sentence-local 0-based index, or kRoot
  std::string deprel;
  int syllables = 0;
  bool is_alphanumeric = false;
  bool is_content_word = false;
  bool is_stopword = false;

  bool is_root() const { return head == kRoot; }
  // Relation without its subtype ("acl:relcl" -> "acl").
  std::string_view base_deprel() const {
    std::string_view d = deprel;
    return d.substr(0, d.find(':'));
  }

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::size_t index = 0;

  std::size_t root() const {
    for (std::size_t i = 0; i < tokens.size(); ++i)
      if (tokens[i].is_root()) return i;
    return 0;
  }

  std::size_t word_count() const {
    return static_cast<std::size_t>(
        std::count_if(tokens.begin(), tokens.end(),
                      [](const Token& t) { return t.is_alphanumeric; }));
  }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Half-open range of sentence indices.
struct ParagraphRange {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t size() const { return last - first; }
  friend bool operator==(const ParagraphRange&, const ParagraphRange&) = default;
};

struct Document {
  std::string source_id;
  std::vector<Sentence> sentences;
  std::vector<ParagraphRange> paragraphs;

  friend bool operator==(const Document&, const Document&) = default;
};

// Calls fn(token) for every word (alphanumeric token) in document order.
template <typename Fn>
void for_each_word(const Document& doc, Fn&& fn) {
  for (const auto& s : doc.sentences)
    for (const auto& t : s.tokens)
      if (t.is_alphanumeric) fn(t);
}

inline std::size_t word_count(const Document& doc) {
  std::size_t n = 0;
  for (const auto& s : doc.sentences) n += s.word_count();
  return n;
}

}  // namespace metrix
