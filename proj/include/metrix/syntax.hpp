// Syntactic complexity and syntactic pattern density.
#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metrix/document.hpp"
#include "metrix/lexicons.hpp"
#include "metrix/registry.hpp"
#include "metrix/stats.hpp"
#include "metrix/utf8.hpp"

namespace metrix {

// Relations (by base label) through which a verb heads a clause of its own.
inline constexpr std::array<std::string_view, 6> kClausalRelations = {
    "ccomp", "xcomp", "advcl", "acl", "csubj", "parataxis"};

// Counts VERB tokens that are ROOT, attach through a clausal relation, or
// are conjuncts of another verb. A sentence with any VERB or AUX has at
// least one clause; a sentence without either has none.
inline int clause_count(const Sentence& s) {
  int clauses = 0;
  bool any_verb = false;
  for (const auto& t : s.tokens) {
    if (t.upos == Upos::VERB || t.upos == Upos::AUX) any_verb = true;
    if (t.upos != Upos::VERB) continue;
    auto rel = t.base_deprel();
    bool heads_clause =
        t.is_root() ||
        std::find(kClausalRelations.begin(), kClausalRelations.end(), rel) !=
            kClausalRelations.end() ||
        (rel == "conj" && s.tokens[static_cast<std::size_t>(t.head)].upos == Upos::VERB);
    if (heads_clause) ++clauses;
  }
  if (any_verb && clauses == 0) clauses = 1;
  return clauses;
}

// Levenshtein distance with unit costs divided by the longer length;
// 0 when both sequences are empty.
template <typename T>
double min_edit_distance(std::span<const T> a, std::span<const T> b) {
  const std::size_t n = a.size(), m = b.size();
  if (n == 0 && m == 0) return 0.0;
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return static_cast<double>(prev[m]) / static_cast<double>(std::max(n, m));
}

template <typename T>
double min_edit_distance(const std::vector<T>& a, const std::vector<T>& b) {
  return min_edit_distance(std::span<const T>(a), std::span<const T>(b));
}

namespace detail {

inline bool is_np_modifier(std::string_view rel) {
  return rel == "amod" || rel == "det" || rel == "nmod" || rel == "nummod";
}

}  // namespace detail

inline MetricSlice syntactic_complexity(const Document& doc) {
  // SYNNP: modifiers per nominal head.
  double heads = 0, modifiers = 0;
  for (const auto& s : doc.sentences) {
    std::vector<int> mods(s.tokens.size(), 0);
    for (const auto& t : s.tokens)
      if (!t.is_root() && detail::is_np_modifier(t.base_deprel()))
        ++mods[static_cast<std::size_t>(t.head)];
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (is_nominal(s.tokens[i].upos)) {
        heads += 1;
        modifiers += mods[i];
      }
    }
  }

  // SYNLE: words before a verbal ROOT, over sentences that have one.
  std::vector<double> left;
  for (const auto& s : doc.sentences) {
    std::size_t r = s.root();
    Upos u = s.tokens[r].upos;
    if (u != Upos::VERB && u != Upos::AUX) continue;
    double n = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (s.tokens[i].is_alphanumeric) ++n;
    left.push_back(n);
  }

  // SYNMED over adjacent sentence pairs.
  std::vector<std::vector<std::string>> wrd, lem;
  std::vector<std::vector<Upos>> pos;
  for (const auto& s : doc.sentences) {
    wrd.emplace_back();
    lem.emplace_back();
    pos.emplace_back();
    for (const auto& t : s.tokens) {
      if (!t.is_alphanumeric) continue;
      wrd.back().push_back(utf8::fold_case(t.surface));
      lem.back().push_back(utf8::fold_case(t.lemma));
      pos.back().push_back(t.upos);
    }
  }
  std::vector<double> med_w, med_l, med_p;
  for (std::size_t i = 0; i + 1 < doc.sentences.size(); ++i) {
    med_w.push_back(min_edit_distance(wrd[i], wrd[i + 1]));
    med_l.push_back(min_edit_distance(lem[i], lem[i + 1]));
    med_p.push_back(min_edit_distance(pos[i], pos[i + 1]));
  }

  // SYNCLS over all sentences; verbless and >7-clause sentences fall
  // outside every bin.
  std::array<double, 7> bins{};
  for (const auto& s : doc.sentences) {
    int c = clause_count(s);
    if (c >= 1 && c <= 7) ++bins[static_cast<std::size_t>(c - 1)];
  }
  const double total = static_cast<double>(doc.sentences.size());

  MetricSlice out;
  out.set("SYNNP", stats::ratio(modifiers, heads));
  out.set("SYNLE", stats::mean(left));
  out.set("SYNMEDwrd", stats::mean(med_w));
  out.set("SYNMEDlem", stats::mean(med_l));
  out.set("SYNMEDpos", stats::mean(med_p));
  static constexpr std::array<std::string_view, 7> kCodes = {
      "SYNCLS1", "SYNCLS2", "SYNCLS3", "SYNCLS4", "SYNCLS5", "SYNCLS6", "SYNCLS7"};
  for (std::size_t i = 0; i < 7; ++i) out.set(kCodes[i], stats::ratio(bins[i], total));
  return out;
}

// A VERB is one verb phrase if it is finite or carries a finite auxiliary
// (the chain "ha comido" counts once); an AUX that is ROOT counts too.
inline bool heads_verb_phrase(const Sentence& s, std::size_t i) {
  const Token& t = s.tokens[i];
  if (t.upos == Upos::AUX) return t.is_root();
  if (t.upos != Upos::VERB) return false;
  if (t.morph.has("VerbForm", "Fin")) return true;
  for (const auto& d : s.tokens)
    if (d.head == static_cast<int>(i) && d.upos == Upos::AUX &&
        d.morph.has("VerbForm", "Fin"))
      return true;
  return false;
}

inline MetricSlice pattern_density(const Document& doc, const PhraseSet& negations) {
  const double words = static_cast<double>(word_count(doc));
  double np = 0, vp = 0, neg = 0, ger = 0, inf = 0, cconj = 0, sconj = 0;
  for (const auto& s : doc.sentences) {
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      const Token& t = s.tokens[i];
      if (!t.is_alphanumeric) continue;
      if (is_nominal(t.upos)) ++np;
      if (heads_verb_phrase(s, i)) ++vp;
      if (t.morph.has("VerbForm", "Ger")) ++ger;
      if (t.morph.has("VerbForm", "Inf")) ++inf;
      if (t.upos == Upos::CCONJ) ++cconj;
      if (t.upos == Upos::SCONJ) ++sconj;
    }
    neg += static_cast<double>(negations.count_matches(phrase_words(s)));
  }
  MetricSlice out;
  auto pair = [&](std::string_view inc, std::string_view cnt, double c) {
    out.set(inc, stats::incidence(c, words));
    out.set(cnt, c);
  };
  pair("DRNP", "DRNPc", np);
  pair("DRVP", "DRVPc", vp);
  pair("DRNEG", "DRNEGc", neg);
  pair("DRGER", "DRGERc", ger);
  pair("DRINF", "DRINFc", inf);
  pair("DRCCONJ", "DRCCONJc", cconj);
  pair("DRSCONJ", "DRSCONJc", sconj);
  return out;
}

}  // namespace metrix
