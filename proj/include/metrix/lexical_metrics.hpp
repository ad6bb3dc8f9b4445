// Psycholinguistic, word-frequency and connective metrics.
#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "metrix/config.hpp"
#include "metrix/document.hpp"
#include "metrix/lexicons.hpp"
#include "metrix/registry.hpp"
#include "metrix/stats.hpp"
#include "metrix/utf8.hpp"

namespace metrix {

// Index of the bin holding `v` for edges e0 < e1 < e2 < e3 < e4: bins are
// [e0,e1), [e1,e2), [e2,e3), [e3,e4]; values outside the scale are clamped
// into the first or last bin.
inline std::size_t norm_bin(double v, const std::array<double, 5>& edges) {
  for (std::size_t b = 0; b < 3; ++b)
    if (v < edges[b + 1]) return b;
  return 3;
}

// Lemma first, then surface.
inline const NormEntry* lookup_norms(const Token& t, const NormsTable& norms) {
  if (const NormEntry* e = norms.find(utf8::fold_case(t.lemma))) return e;
  return norms.find(utf8::fold_case(t.surface));
}

inline MetricSlice psycholinguistic_ratios(const Document& doc, const NormsTable& norms,
                                           const MetricConfig& config = {},
                                           Diagnostics* diag = nullptr) {
  static constexpr std::array<std::array<std::string_view, 5>, 6> kCodes = {{
      {"PSYC", "PSYC0", "PSYC1", "PSYC2", "PSYC3"},
      {"PSYIM", "PSYIM0", "PSYIM1", "PSYIM2", "PSYIM3"},
      {"PSYFM", "PSYFM0", "PSYFM1", "PSYFM2", "PSYFM3"},
      {"PSYAoA", "PSYAoA0", "PSYAoA1", "PSYAoA2", "PSYAoA3"},
      {"PSYVAL", "PSYVAL0", "PSYVAL1", "PSYVAL2", "PSYVAL3"},
      {"PSYARO", "PSYARO0", "PSYARO1", "PSYARO2", "PSYARO3"},
  }};
  std::array<std::vector<double>, 6> values;
  double content = 0, covered = 0;
  for_each_word(doc, [&](const Token& t) {
    if (!t.is_content_word) return;
    ++content;
    const NormEntry* e = lookup_norms(t, norms);
    if (!e) return;
    ++covered;
    for (std::size_t d = 0; d < 6; ++d)
      if (auto v = e->values[d]) values[d].push_back(*v);
  });

  MetricSlice out;
  for (std::size_t d = 0; d < 6; ++d) {
    const auto dim = kNormDimensions[d];
    const bool nine = scale_max(dim) == 9.0;
    const auto& edges = nine ? config.nine_point_bins : config.seven_point_bins;
    std::array<double, 4> bins{};
    for (double v : values[d]) ++bins[norm_bin(v, edges)];
    const double n = static_cast<double>(values[d].size());
    const double mean = stats::mean(values[d]);
    out.set(kCodes[d][0], mean / scale_max(dim));
    for (std::size_t b = 0; b < 4; ++b) out.set(kCodes[d][b + 1], stats::ratio(bins[b], n));
    if (diag) diag->norm_means[d] = mean;
  }
  if (diag) {
    diag->norm_coverage = stats::ratio(covered, content);
    if (covered == 0) diag->warnings.push_back("no content word found in the norms table");
  }
  return out;
}

inline MetricSlice word_frequency_metrics(const Document& doc, const FrequencyTable& freq,
                                          const MetricConfig& config = {}) {
  const double threshold = config.rare_zipf_threshold;
  const double words = static_cast<double>(word_count(doc));
  double no = 0, vb = 0, adj = 0, adv = 0, cw = 0;
  std::unordered_set<std::string> distinct;
  std::vector<double> all_z, cw_z, min_w, min_cw;
  for (const auto& s : doc.sentences) {
    double lo_w = 0, lo_cw = 0;
    bool any_w = false, any_cw = false;
    for (const auto& t : s.tokens) {
      if (!t.is_alphanumeric) continue;
      auto folded = utf8::fold_case(t.surface);
      double z = freq.zipf(folded);
      all_z.push_back(z);
      lo_w = any_w ? std::min(lo_w, z) : z;
      any_w = true;
      if (!t.is_content_word) continue;
      cw_z.push_back(z);
      lo_cw = any_cw ? std::min(lo_cw, z) : z;
      any_cw = true;
      if (z >= threshold) continue;
      ++cw;
      distinct.insert(folded);
      if (is_nominal(t.upos)) ++no;
      if (t.upos == Upos::VERB) ++vb;
      if (t.upos == Upos::ADJ) ++adj;
      if (t.upos == Upos::ADV) ++adv;
    }
    if (any_w) min_w.push_back(lo_w);
    if (any_cw) min_cw.push_back(lo_cw);
  }
  MetricSlice out;
  auto pair = [&](std::string_view cnt, std::string_view inc, double c) {
    out.set(cnt, c);
    out.set(inc, stats::incidence(c, words));
  };
  pair("WFRCno", "WFRCnoi", no);
  pair("WFRCvb", "WFRCvbi", vb);
  pair("WFRCadj", "WFRCadji", adj);
  pair("WFRCadv", "WFRCadvi", adv);
  pair("WFRCcw", "WFRCcwi", cw);
  pair("WFRCcwd", "WFRCcwdi", static_cast<double>(distinct.size()));
  out.set("WFMcw", stats::mean(cw_z));
  out.set("WFMw", stats::mean(all_z));
  out.set("WFMrw", stats::mean(min_w));
  out.set("WFMrcw", stats::mean(min_cw));
  return out;
}

inline MetricSlice connective_incidence(const Document& doc, const ConnectiveSets& sets) {
  const double words = static_cast<double>(word_count(doc));
  ConnectiveCounts total;
  for (const auto& s : doc.sentences) {
    auto c = match_connectives(s, sets);
    for (std::size_t i = 0; i < 5; ++i) total.by_category[i] += c.by_category[i];
  }
  auto inc = [&](ConnectiveCategory c) {
    return stats::incidence(static_cast<double>(total[c]), words);
  };
  MetricSlice out;
  out.set("CNCAll", stats::incidence(static_cast<double>(total.total()), words));
  out.set("CNCCaus", inc(ConnectiveCategory::kCausal));
  out.set("CNCLogic", inc(ConnectiveCategory::kLogical));
  out.set("CNCADC", inc(ConnectiveCategory::kAdversative));
  out.set("CNCTemp", inc(ConnectiveCategory::kTemporal));
  out.set("CNCAdd", inc(ConnectiveCategory::kAdditive));
  return out;
}

}  // namespace metrix
