// Lexical diversity: type-token ratios, MTLD, VOCd and the Maas index.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "metrix/config.hpp"
#include "metrix/document.hpp"
#include "metrix/error.hpp"
#include "metrix/registry.hpp"
#include "metrix/stats.hpp"
#include "metrix/utf8.hpp"

namespace metrix {

inline double type_token_ratio(std::span<const std::string> items) {
  if (items.empty()) return 0.0;
  std::unordered_set<std::string_view> types(items.begin(), items.end());
  return static_cast<double>(types.size()) / static_cast<double>(items.size());
}

// Case-folded surfaces of every word in the document.
inline std::vector<std::string> folded_words(const Document& doc) {
  std::vector<std::string> out;
  for_each_word(doc, [&](const Token& t) { out.push_back(utf8::fold_case(t.surface)); });
  return out;
}

inline MetricSlice ttr_family(const Document& doc) {
  std::vector<std::string> all, cw, no, vb, adv, adj;
  std::vector<std::string> l_all, l_no, l_vb, l_adv, l_adj, l_pron, l_rel, l_ind, l_fn;
  for_each_word(doc, [&](const Token& t) {
    std::string s = utf8::fold_case(t.surface);
    std::string l = utf8::fold_case(t.lemma);
    all.push_back(s);
    l_all.push_back(l);
    if (t.is_content_word) cw.push_back(s);
    else l_fn.push_back(l);
    if (is_nominal(t.upos)) no.push_back(s);
    if (t.upos == Upos::NOUN) l_no.push_back(l);
    if (t.upos == Upos::VERB) {
      vb.push_back(s);
      l_vb.push_back(l);
    }
    if (t.upos == Upos::ADV) {
      adv.push_back(s);
      l_adv.push_back(l);
    }
    if (t.upos == Upos::ADJ) {
      adj.push_back(s);
      l_adj.push_back(l);
    }
    if (t.upos == Upos::PRON) l_pron.push_back(l);
    if (t.morph.has("PronType", "Rel")) l_rel.push_back(l);
    if (t.morph.has("PronType", "Ind")) l_ind.push_back(l);
  });

  MetricSlice out;
  out.set("LDTTRa", type_token_ratio(all));
  out.set("LDTTRcw", type_token_ratio(cw));
  out.set("LDTTRno", type_token_ratio(no));
  out.set("LDTTRvb", type_token_ratio(vb));
  out.set("LDTTRadv", type_token_ratio(adv));
  out.set("LDTTRadj", type_token_ratio(adj));
  out.set("LDTTRLa", type_token_ratio(l_all));
  out.set("LDTTRLno", type_token_ratio(l_no));
  out.set("LDTTRLvb", type_token_ratio(l_vb));
  out.set("LDTTRLadv", type_token_ratio(l_adv));
  out.set("LDTTRLadj", type_token_ratio(l_adj));
  out.set("LDTTRLpron", type_token_ratio(l_pron));
  out.set("LDTTRLrpron", type_token_ratio(l_rel));
  out.set("LDTTRLipron", type_token_ratio(l_ind));
  out.set("LDTTRLifn", type_token_ratio(l_fn));
  const double words = static_cast<double>(all.size());
  out.set("LDDno", stats::ratio(static_cast<double>(no.size()), words));
  out.set("LDDvb", stats::ratio(static_cast<double>(vb.size()), words));
  out.set("LDDadv", stats::ratio(static_cast<double>(adv.size()), words));
  out.set("LDDadj", stats::ratio(static_cast<double>(adj.size()), words));
  return out;
}

// ----------------------------------------------------------------- MTLD

struct MtldResult {
  double value = 0.0;
  // Set when the input was too short (< 10 items) for a meaningful score;
  // value is then the item count.
  bool degenerate = false;
};

namespace detail {

// Factor count of one directional MTLD pass.
template <typename It>
double mtld_factors(It begin, It end, double threshold) {
  double factors = 0.0;
  std::unordered_set<std::string_view> types;
  std::size_t tokens = 0;
  double ttr = 1.0;
  for (It it = begin; it != end; ++it) {
    types.insert(*it);
    ++tokens;
    ttr = static_cast<double>(types.size()) / static_cast<double>(tokens);
    if (ttr < threshold) {
      factors += 1.0;
      types.clear();
      tokens = 0;
      ttr = 1.0;
    }
  }
  if (tokens > 0) factors += (1.0 - ttr) / (1.0 - threshold);
  return factors;
}

}  // namespace detail

inline MtldResult mtld(std::span<const std::string> items, double threshold = 0.72) {
  const double n = static_cast<double>(items.size());
  if (items.size() < 10) return {n, true};
  auto pass = [&](double factors) {
    return std::min(n / std::max(factors, 1e-9), n * n);
  };
  double fwd = pass(detail::mtld_factors(items.begin(), items.end(), threshold));
  double bwd = pass(detail::mtld_factors(items.rbegin(), items.rend(), threshold));
  return {(fwd + bwd) / 2.0, false};
}

// ----------------------------------------------------------------- VOCd

struct VocdParams {
  std::size_t min_sample = 35;
  std::size_t max_sample = 50;
  std::size_t trials = 100;
  std::size_t repetitions = 3;
  double d_min = 1.0;
  double d_max = 500.0;
};

enum class VocdStatus { kOk, kAtLowerBound, kAtUpperBound };

struct VocdResult {
  double d = 0.0;
  VocdStatus status = VocdStatus::kOk;
};

// Model TTR for a sample of n tokens given diversity parameter d.
inline double vocd_model_ttr(double n, double d) {
  return (d / n) * (std::sqrt(1.0 + 2.0 * n / d) - 1.0);
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform integer in [0, n) from raw 64-bit draws; unlike
// std::uniform_int_distribution this is identical on every platform.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

inline double vocd_sse(std::span<const double> ttrs, std::size_t min_sample, double d) {
  double sse = 0.0;
  for (std::size_t k = 0; k < ttrs.size(); ++k) {
    double e = ttrs[k] - vocd_model_ttr(static_cast<double>(min_sample + k), d);
    sse += e * e;
  }
  return sse;
}

}  // namespace detail

// Seed of repetition `rep` of a VOCd run seeded with `seed`.
inline std::uint64_t vocd_repetition_seed(std::uint64_t seed, std::size_t rep) {
  return detail::splitmix64(seed + 0x9E3779B97F4A7C15ULL * (rep + 1));
}

// Mean TTR for each sample size min_sample..max_sample. Samples are drawn
// without replacement by a partial Fisher-Yates shuffle over an index
// array that starts as the identity and persists across trials.
inline std::vector<double> vocd_ttr_curve(std::span<const std::string> items,
                                          std::uint64_t rep_seed,
                                          const VocdParams& p = {}) {
  std::unordered_map<std::string_view, std::uint32_t> ids;
  std::vector<std::uint32_t> type_of(items.size());
  for (std::size_t i = 0; i < items.size(); ++i)
    type_of[i] = ids.emplace(items[i], static_cast<std::uint32_t>(ids.size())).first->second;

  std::mt19937_64 rng(rep_seed);
  std::vector<std::uint32_t> idx(items.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> stamp(ids.size(), 0);
  std::uint32_t trial_id = 0;

  std::vector<double> curve;
  const std::uint64_t m = items.size();
  for (std::size_t n = p.min_sample; n <= p.max_sample; ++n) {
    double sum = 0.0;
    for (std::size_t trial = 0; trial < p.trials; ++trial) {
      ++trial_id;
      std::size_t types = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = i + detail::draw_below(rng, m - i);
        std::swap(idx[i], idx[j]);
        auto type = type_of[idx[i]];
        if (stamp[type] != trial_id) {
          stamp[type] = trial_id;
          ++types;
        }
      }
      sum += static_cast<double>(types) / static_cast<double>(n);
    }
    curve.push_back(sum / static_cast<double>(p.trials));
  }
  return curve;
}

// Least-squares D for one TTR curve: unit-step scan over [d_min, d_max]
// followed by golden-section refinement around the best grid point.
inline VocdResult vocd_fit(std::span<const double> curve, const VocdParams& p = {}) {
  double best_d = p.d_min, best = std::numeric_limits<double>::infinity();
  for (double d = p.d_min; d <= p.d_max; d += 1.0) {
    double e = detail::vocd_sse(curve, p.min_sample, d);
    if (e < best) {
      best = e;
      best_d = d;
    }
  }
  double lo = std::max(p.d_min, best_d - 1.0), hi = std::min(p.d_max, best_d + 1.0);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = detail::vocd_sse(curve, p.min_sample, x1);
  double f2 = detail::vocd_sse(curve, p.min_sample, x2);
  while (hi - lo > 1e-7) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = detail::vocd_sse(curve, p.min_sample, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = detail::vocd_sse(curve, p.min_sample, x2);
    }
  }
  double d = (lo + hi) / 2.0;
  for (double edge : {p.d_min, p.d_max}) {
    if (detail::vocd_sse(curve, p.min_sample, edge) <= detail::vocd_sse(curve, p.min_sample, d))
      d = edge;
  }
  VocdResult r{d, VocdStatus::kOk};
  if (d <= p.d_min + 1e-6) r.status = VocdStatus::kAtLowerBound;
  if (d >= p.d_max - 1e-6) r.status = VocdStatus::kAtUpperBound;
  return r;
}

// Mean fitted D over p.repetitions independent runs. A fit that lands on
// a bound is clamped there and reported through the status.
inline VocdResult vocd(std::span<const std::string> items, std::uint64_t seed,
                       const VocdParams& p = {}) {
  if (items.size() < p.max_sample) throw NotEnoughTokens(items.size(), p.max_sample);
  VocdResult out;
  double sum = 0.0;
  for (std::size_t rep = 0; rep < p.repetitions; ++rep) {
    auto curve = vocd_ttr_curve(items, vocd_repetition_seed(seed, rep), p);
    auto r = vocd_fit(curve, p);
    sum += r.d;
    if (r.status != VocdStatus::kOk) out.status = r.status;
  }
  out.d = sum / static_cast<double>(p.repetitions);
  return out;
}

// ----------------------------------------------------------------- Maas

// a^2 = (log10 N - log10 V) / (log10 N)^2; 0 with fewer than two tokens or
// two types.
inline double maas(std::span<const std::string> items) {
  std::unordered_set<std::string_view> types(items.begin(), items.end());
  if (items.size() < 2 || types.size() < 2) return 0.0;
  double ln = std::log10(static_cast<double>(items.size()));
  double lv = std::log10(static_cast<double>(types.size()));
  return (ln - lv) / (ln * ln);
}

// All 22 lexical-diversity metrics.
inline MetricSlice lexical_diversity(const Document& doc, const MetricConfig& config,
                                     Diagnostics* diag = nullptr) {
  MetricSlice out = ttr_family(doc);
  auto words = folded_words(doc);

  auto m = mtld(words, config.mtld_threshold);
  if (m.degenerate && diag) diag->warnings.push_back("MTLD: fewer than 10 words");
  out.set("LDMLTD", m.value);

  double d = 0.0;
  try {
    auto v = vocd(words, config.seed);
    d = v.d;
    if (v.status != VocdStatus::kOk && diag)
      diag->warnings.push_back(v.status == VocdStatus::kAtUpperBound
                                   ? "VOCd: fit reached upper bound"
                                   : "VOCd: fit reached lower bound");
  } catch (const NotEnoughTokens&) {
    if (diag) diag->warnings.push_back("VOCd: fewer than 50 words");
  }
  out.set("LDVOCd", d);
  out.set("LDMaas", maas(words));
  return out;
}

}  // namespace metrix
