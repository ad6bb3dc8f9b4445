// Spanish Snowball stemmer (the snowballstem.org "spanish" algorithm).
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "metrix/utf8.hpp"

namespace metrix {

namespace stemmer_detail {

struct Suffix {
  std::u32string_view text;
  int action;
};

inline constexpr Suffix kPronouns[] = {
    {U"la", 1}, {U"sela", 1}, {U"le", 1},  {U"me", 1},    {U"se", 1},
    {U"lo", 1}, {U"selo", 1}, {U"las", 1}, {U"selas", 1}, {U"les", 1},
    {U"los", 1}, {U"selos", 1}, {U"nos", 1}};

// 1..5 rewrite to the unaccented gerund/infinitive, 6 deletes the pronoun,
// 7 deletes it only after "u".
inline constexpr Suffix kPronounHosts[] = {
    {U"ando", 6}, {U"iendo", 6}, {U"yendo", 7}, {U"ándo", 2}, {U"iéndo", 1},
    {U"ar", 6},   {U"er", 6},    {U"ir", 6},    {U"ár", 3},   {U"ér", 4},
    {U"ír", 5}};

inline constexpr Suffix kAmenteTail[] = {{U"ic", 2}, {U"ad", 2}, {U"os", 2}, {U"iv", 1}};
inline constexpr Suffix kMenteTail[] = {{U"able", 1}, {U"ible", 1}, {U"ante", 1}};
inline constexpr Suffix kIdadTail[] = {{U"ic", 1}, {U"abil", 1}, {U"iv", 1}};

inline constexpr Suffix kStandard[] = {
    {U"ica", 1},      {U"ancia", 2},    {U"encia", 5},    {U"adora", 2},
    {U"osa", 1},      {U"ista", 1},     {U"iva", 9},      {U"anza", 1},
    {U"logía", 3},    {U"idad", 8},     {U"able", 1},     {U"ible", 1},
    {U"ante", 2},     {U"mente", 7},    {U"amente", 6},   {U"acion", 2},
    {U"ucion", 4},    {U"ación", 2},    {U"ución", 4},    {U"ico", 1},
    {U"ismo", 1},     {U"oso", 1},      {U"amiento", 1},  {U"imiento", 1},
    {U"ivo", 9},      {U"ador", 2},     {U"icas", 1},     {U"ancias", 2},
    {U"encias", 5},   {U"adoras", 2},   {U"osas", 1},     {U"istas", 1},
    {U"ivas", 9},     {U"anzas", 1},    {U"logías", 3},   {U"idades", 8},
    {U"ables", 1},    {U"ibles", 1},    {U"aciones", 2},  {U"uciones", 4},
    {U"adores", 2},   {U"antes", 2},    {U"icos", 1},     {U"ismos", 1},
    {U"osos", 1},     {U"amientos", 1}, {U"imientos", 1}, {U"ivos", 9}};

inline constexpr Suffix kYVerb[] = {
    {U"ya", 1},  {U"ye", 1},  {U"yan", 1}, {U"yen", 1},  {U"yeron", 1}, {U"yendo", 1},
    {U"yo", 1},  {U"yas", 1}, {U"yes", 1}, {U"yais", 1}, {U"yamos", 1}, {U"yó", 1}};

inline constexpr Suffix kVerb[] = {
    {U"aba", 2},    {U"ada", 2},     {U"ida", 2},     {U"ara", 2},     {U"iera", 2},
    {U"ía", 2},     {U"aría", 2},    {U"ería", 2},    {U"iría", 2},    {U"ad", 2},
    {U"ed", 2},     {U"id", 2},      {U"ase", 2},     {U"iese", 2},    {U"aste", 2},
    {U"iste", 2},   {U"an", 2},      {U"aban", 2},    {U"aran", 2},    {U"ieran", 2},
    {U"ían", 2},    {U"arían", 2},   {U"erían", 2},   {U"irían", 2},   {U"en", 1},
    {U"asen", 2},   {U"iesen", 2},   {U"aron", 2},    {U"ieron", 2},   {U"arán", 2},
    {U"erán", 2},   {U"irán", 2},    {U"ado", 2},     {U"ido", 2},     {U"ando", 2},
    {U"iendo", 2},  {U"ar", 2},      {U"er", 2},      {U"ir", 2},      {U"as", 2},
    {U"abas", 2},   {U"adas", 2},    {U"idas", 2},    {U"aras", 2},    {U"ieras", 2},
    {U"ías", 2},    {U"arías", 2},   {U"erías", 2},   {U"irías", 2},   {U"es", 1},
    {U"ases", 2},   {U"ieses", 2},   {U"abais", 2},   {U"arais", 2},   {U"ierais", 2},
    {U"íais", 2},   {U"aríais", 2},  {U"eríais", 2},  {U"iríais", 2},  {U"aseis", 2},
    {U"ieseis", 2}, {U"asteis", 2},  {U"isteis", 2},  {U"áis", 2},     {U"éis", 1},
    {U"aréis", 2},  {U"eréis", 2},   {U"iréis", 2},   {U"ados", 2},    {U"idos", 2},
    {U"amos", 2},   {U"ábamos", 2},  {U"áramos", 2},  {U"iéramos", 2}, {U"íamos", 2},
    {U"aríamos", 2}, {U"eríamos", 2}, {U"iríamos", 2}, {U"emos", 1},    {U"aremos", 2},
    {U"eremos", 2}, {U"iremos", 2},  {U"ásemos", 2},  {U"iésemos", 2}, {U"imos", 2},
    {U"arás", 2},   {U"erás", 2},    {U"irás", 2},    {U"ís", 2},      {U"ará", 2},
    {U"erá", 2},    {U"irá", 2},     {U"aré", 2},     {U"eré", 2},     {U"iré", 2},
    {U"ió", 2}};

inline constexpr Suffix kResidual[] = {
    {U"a", 1}, {U"e", 2}, {U"o", 1}, {U"os", 1}, {U"á", 1}, {U"é", 2}, {U"í", 1}, {U"ó", 1}};

inline constexpr bool is_vowel(char32_t c) {
  switch (c) {
    case U'a': case U'e': case U'i': case U'o': case U'u':
    case U'á': case U'é': case U'í': case U'ó': case U'ú': case U'ü':
      return true;
    default:
      return false;
  }
}

class Stemmer {
 public:
  explicit Stemmer(std::u32string word) : w_(std::move(word)) {}

  std::u32string run() {
    mark_regions();
    attached_pronoun();
    if (!standard_suffix() && !y_verb_suffix()) verb_suffix();
    residual_suffix();
    for (auto& c : w_) {
      switch (c) {
        case U'á': c = U'a'; break;
        case U'é': c = U'e'; break;
        case U'í': c = U'i'; break;
        case U'ó': c = U'o'; break;
        case U'ú': c = U'u'; break;
        default: break;
      }
    }
    return std::move(w_);
  }

 private:
  // Longest entry of `table` ending at `end` and starting at or after
  // `floor`; returns {start, action}, action 0 when nothing matches.
  template <std::size_t N>
  std::pair<std::size_t, int> find(const Suffix (&table)[N], std::size_t end,
                                   std::size_t floor = 0) const {
    std::size_t best_len = 0;
    int action = 0;
    for (const auto& s : table) {
      std::size_t len = s.text.size();
      if (len <= best_len || len > end || end - len < floor) continue;
      if (std::u32string_view(w_).substr(end - len, len) == s.text) {
        best_len = len;
        action = s.action;
      }
    }
    return {end - best_len, action};
  }

  bool ends_with_at(std::size_t end, std::u32string_view s) const {
    return end >= s.size() && std::u32string_view(w_).substr(end - s.size(), s.size()) == s;
  }

  void erase_tail(std::size_t from) { w_.erase(from); }

  // Position just past the next vowel (or non-vowel) at or after i; npos if none.
  std::size_t past(std::size_t i, bool vowel) const {
    for (; i < w_.size(); ++i)
      if (is_vowel(w_[i]) == vowel) return i + 1;
    return std::u32string::npos;
  }

  void mark_regions() {
    const std::size_t n = w_.size();
    pv_ = p1_ = p2_ = n;
    constexpr auto npos = std::u32string::npos;
    if (n >= 2) {
      std::size_t pos = npos;
      if (is_vowel(w_[0])) {
        pos = !is_vowel(w_[1]) ? past(2, true) : past(2, false);
      } else {
        pos = !is_vowel(w_[1]) ? past(2, true) : 3;
        if (pos != npos && pos > n) pos = npos;
      }
      if (pos != npos) pv_ = pos;
    }
    std::size_t a = past(0, true);
    if (a != npos) a = past(a, false);
    if (a != npos) {
      p1_ = a;
      a = past(a, true);
      if (a != npos) a = past(a, false);
      if (a != npos) p2_ = a;
    }
  }

  void attached_pronoun() {
    const std::size_t end = w_.size();
    auto [bra, pron] = find(kPronouns, end);
    if (pron == 0) return;
    auto [host, action] = find(kPronounHosts, bra);
    if (action == 0 || host < pv_) return;
    switch (action) {
      case 1: w_.replace(host, end - host, U"iendo"); break;
      case 2: w_.replace(host, end - host, U"ando"); break;
      case 3: w_.replace(host, end - host, U"ar"); break;
      case 4: w_.replace(host, end - host, U"er"); break;
      case 5: w_.replace(host, end - host, U"ir"); break;
      case 6: erase_tail(bra); break;
      case 7:
        if (host > 0 && w_[host - 1] == U'u') erase_tail(bra);
        break;
    }
  }

  // Optionally removes `s` ending at the current word end when it lies in R2.
  bool drop_in_r2(std::u32string_view s) {
    std::size_t end = w_.size();
    if (!ends_with_at(end, s) || end - s.size() < p2_) return false;
    erase_tail(end - s.size());
    return true;
  }

  template <std::size_t N>
  int drop_any_in_r2(const Suffix (&table)[N]) {
    auto [start, action] = find(table, w_.size());
    if (action == 0 || start < p2_) return 0;
    erase_tail(start);
    return action;
  }

  bool standard_suffix() {
    const std::size_t end = w_.size();
    auto [start, action] = find(kStandard, end);
    if (action == 0) return false;
    const bool in_r2 = start >= p2_;
    switch (action) {
      case 1:
        if (!in_r2) return false;
        erase_tail(start);
        break;
      case 2:
        if (!in_r2) return false;
        erase_tail(start);
        drop_in_r2(U"ic");
        break;
      case 3:
        if (!in_r2) return false;
        w_.replace(start, end - start, U"log");
        break;
      case 4:
        if (!in_r2) return false;
        w_.replace(start, end - start, U"u");
        break;
      case 5:
        if (!in_r2) return false;
        w_.replace(start, end - start, U"ente");
        break;
      case 6:
        if (start < p1_) return false;
        erase_tail(start);
        if (drop_any_in_r2(kAmenteTail) == 1) drop_in_r2(U"at");
        break;
      case 7:
        if (!in_r2) return false;
        erase_tail(start);
        drop_any_in_r2(kMenteTail);
        break;
      case 8:
        if (!in_r2) return false;
        erase_tail(start);
        drop_any_in_r2(kIdadTail);
        break;
      default:
        if (!in_r2) return false;
        erase_tail(start);
        drop_in_r2(U"at");
        break;
    }
    return true;
  }

  bool y_verb_suffix() {
    const std::size_t end = w_.size();
    if (end < pv_) return false;
    auto [start, action] = find(kYVerb, end, pv_);
    if (action == 0) return false;
    if (start == 0 || w_[start - 1] != U'u') return false;
    erase_tail(start);
    return true;
  }

  bool verb_suffix() {
    const std::size_t end = w_.size();
    if (end < pv_) return false;
    auto [start, action] = find(kVerb, end, pv_);
    if (action == 0) return false;
    if (action == 1 && start >= 2 && w_[start - 1] == U'u' && w_[start - 2] == U'g')
      --start;
    erase_tail(start);
    return true;
  }

  void residual_suffix() {
    const std::size_t end = w_.size();
    auto [start, action] = find(kResidual, end);
    if (action == 0 || start < pv_) return;
    erase_tail(start);
    if (action == 2 && start >= 2 && w_[start - 1] == U'u' && w_[start - 2] == U'g' &&
        start - 1 >= pv_)
      erase_tail(start - 1);
  }

  std::u32string w_;
  std::size_t pv_ = 0, p1_ = 0, p2_ = 0;
};

}  // namespace stemmer_detail

// Stems one word. Input is lowercased first; the algorithm itself is
// case-sensitive and expects lowercase.
inline std::string stem_spanish(std::string_view word) {
  std::u32string cps = utf8::decode(word);
  for (auto& c : cps) c = utf8::to_lower(c);
  return utf8::encode(stemmer_detail::Stemmer(std::move(cps)).run());
}

}  // namespace metrix
