// Descriptive, word-information and textual-simplicity metrics.
#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "metrix/document.hpp"
#include "metrix/error.hpp"
#include "metrix/registry.hpp"
#include "metrix/stats.hpp"
#include "metrix/utf8.hpp"

namespace metrix {

inline MetricSlice descriptive(const Document& doc) {
  const double words = static_cast<double>(word_count(doc));
  if (words == 0) throw EmptyDocument();

  std::unordered_set<std::string> unique;
  std::vector<double> para_len, sent_len, sent_len_ns;
  std::vector<double> syl, cw_syl, cw_letters, letters, ns_letters, lemma_letters;

  for (const auto& p : doc.paragraphs) para_len.push_back(static_cast<double>(p.size()));
  for (const auto& s : doc.sentences) {
    double n = 0, n_ns = 0;
    for (const auto& t : s.tokens) {
      if (!t.is_alphanumeric) continue;
      ++n;
      unique.insert(utf8::fold_case(t.surface));
      double lt = static_cast<double>(utf8::count_alnum(t.surface));
      syl.push_back(t.syllables);
      letters.push_back(lt);
      lemma_letters.push_back(static_cast<double>(utf8::count_alnum(t.lemma)));
      if (t.is_content_word) {
        cw_syl.push_back(t.syllables);
        cw_letters.push_back(lt);
      }
      if (!t.is_stopword) {
        ++n_ns;
        ns_letters.push_back(lt);
      }
    }
    sent_len.push_back(n);
    sent_len_ns.push_back(n_ns);
  }

  MetricSlice out;
  const double paragraphs = static_cast<double>(doc.paragraphs.size());
  const double sentences = static_cast<double>(doc.sentences.size());
  out.set("DESPC", paragraphs);
  out.set("DESPCi", stats::incidence(paragraphs, words));
  out.set("DESSC", sentences);
  out.set("DESSCi", stats::incidence(sentences, words));
  out.set("DESWC", words);
  out.set("DESWCU", static_cast<double>(unique.size()));
  out.set("DESWCUi", stats::incidence(static_cast<double>(unique.size()), words));
  out.set("DESPL", stats::mean(para_len));
  out.set("DESPLd", stats::stdev(para_len));
  out.set("DESSL", stats::mean(sent_len));
  out.set("DESSLd", stats::stdev(sent_len));
  out.set("DESSNSL", stats::mean(sent_len_ns));
  out.set("DESSNSLd", stats::stdev(sent_len_ns));
  out.set("DESSLmax", *std::max_element(sent_len.begin(), sent_len.end()));
  out.set("DESSLmin", *std::min_element(sent_len.begin(), sent_len.end()));
  out.set("DESWLsy", stats::mean(syl));
  out.set("DESWLsyd", stats::stdev(syl));
  out.set("DESCWLsy", stats::mean(cw_syl));
  out.set("DESCWLsyd", stats::stdev(cw_syl));
  out.set("DESCWLlt", stats::mean(cw_letters));
  out.set("DESCWLltd", stats::stdev(cw_letters));
  out.set("DESWLlt", stats::mean(letters));
  out.set("DESWLltd", stats::stdev(letters));
  out.set("DESWNSLlt", stats::mean(ns_letters));
  out.set("DESWNSLltd", stats::stdev(ns_letters));
  out.set("DESLLlt", stats::mean(lemma_letters));
  out.set("DESLLltd", stats::stdev(lemma_letters));
  return out;
}

inline bool is_personal_pronoun(const Token& t) {
  return t.upos == Upos::PRON && t.morph.has("PronType", "Prs");
}

inline MetricSlice word_information(const Document& doc) {
  const double words = static_cast<double>(word_count(doc));
  if (words == 0) throw EmptyDocument();

  double content = 0, nouns = 0, verbs = 0, adjs = 0, advs = 0, prons = 0;
  // [person 1..3][singular, plural]
  double split[3][2] = {};
  for_each_word(doc, [&](const Token& t) {
    if (t.is_content_word) ++content;
    if (is_nominal(t.upos)) ++nouns;
    if (t.upos == Upos::VERB) ++verbs;
    if (t.upos == Upos::ADJ) ++adjs;
    if (t.upos == Upos::ADV) ++advs;
    if (is_personal_pronoun(t)) {
      ++prons;
      auto person = t.morph.get("Person");
      int p = person && person->size() == 1 ? (*person)[0] - '0' : 0;
      int n = t.morph.has("Number", "Sing") ? 0 : t.morph.has("Number", "Plur") ? 1 : -1;
      if (p >= 1 && p <= 3 && n >= 0) ++split[p - 1][n];
    }
  });

  MetricSlice out;
  auto pair = [&](std::string_view inc, std::string_view cnt, double c) {
    out.set(inc, stats::incidence(c, words));
    out.set(cnt, c);
  };
  pair("WRDCONT", "WRDCONTc", content);
  pair("WRDNOUN", "WRDNOUNc", nouns);
  pair("WRDVERB", "WRDVERBc", verbs);
  pair("WRDADJ", "WRDADJc", adjs);
  pair("WRDADV", "WRDADVc", advs);
  pair("WRDPRO", "WRDPROc", prons);
  pair("WRDPRP1s", "WRDPRP1sc", split[0][0]);
  pair("WRDPRP1p", "WRDPRP1pc", split[0][1]);
  pair("WRDPRP2s", "WRDPRP2sc", split[1][0]);
  pair("WRDPRP2p", "WRDPRP2pc", split[1][1]);
  pair("WRDPRP3s", "WRDPRP3sc", split[2][0]);
  pair("WRDPRP3p", "WRDPRP3pc", split[2][1]);
  return out;
}

// Sentence-length bins: < 11, 11-12, 13-14, >= 15 words.
inline MetricSlice textual_simplicity(const Document& doc) {
  double bins[4] = {};
  for (const auto& s : doc.sentences) {
    auto n = s.word_count();
    int b = n < 11 ? 0 : n < 13 ? 1 : n < 15 ? 2 : 3;
    ++bins[b];
  }
  const double total = static_cast<double>(doc.sentences.size());
  MetricSlice out;
  out.set("TSSRsh", stats::ratio(bins[0], total));
  out.set("TSSRmd", stats::ratio(bins[1], total));
  out.set("TSSRlg", stats::ratio(bins[2], total));
  out.set("TSSRxl", stats::ratio(bins[3], total));
  return out;
}

}  // namespace metrix
