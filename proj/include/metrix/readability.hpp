// Readability indices for Spanish text.
#pragma once

#include <cmath>
#include <string>
#include <unordered_map>
#include <vector>

#include "metrix/document.hpp"
#include "metrix/error.hpp"
#include "metrix/registry.hpp"
#include "metrix/stats.hpp"
#include "metrix/utf8.hpp"

namespace metrix {

// Honoré's statistic when every type is a hapax (the formula divides by 0).
inline constexpr double kHonoreSentinel = 1e6;

// Fernández-Huertas with syllables per word (not per 100 words).
inline double fernandez_huertas(double syllables, double words, double sentences) {
  return 206.84 - 0.60 * (syllables / words) - 1.02 * (words / sentences);
}

inline double szigriszt_pazos(double syllables, double words, double sentences) {
  return 206.835 - 62.3 * (syllables / words) - (words / sentences);
}

// Muñoz µ from the mean and population variance of letters per word.
inline double readability_mu(double words, double mean_letters, double var_letters) {
  if (var_letters <= 0.0 || words < 2) return 0.0;
  return (words / (words - 1.0)) * (mean_letters / var_letters) * 100.0;
}

inline double smog(double polysyllables, double sentences) {
  return 1.043 * std::sqrt(polysyllables * 30.0 / sentences) + 3.1291;
}

inline double gunning_fog(double words, double sentences, double complex_words) {
  return 0.4 * (words / sentences + 100.0 * complex_words / words);
}

inline double honore(double words, double types, double hapax) {
  if (hapax >= types) return kHonoreSentinel;
  return 100.0 * std::log(words) / (1.0 - hapax / types);
}

inline double brunet(double words, double types) {
  return std::pow(words, std::pow(types, -0.165));
}

// Word/sentence statistics the indices are built from.
struct ReadabilityCounts {
  double words = 0, sentences = 0, syllables = 0, polysyllables = 0;
  double types = 0, hapax = 0, mean_letters = 0, var_letters = 0;
};

inline ReadabilityCounts readability_counts(const Document& doc) {
  ReadabilityCounts c;
  c.sentences = static_cast<double>(doc.sentences.size());
  std::unordered_map<std::string, int> freq;
  std::vector<double> letters;
  for_each_word(doc, [&](const Token& t) {
    c.words += 1;
    c.syllables += t.syllables;
    if (t.syllables >= 3) c.polysyllables += 1;
    ++freq[utf8::fold_case(t.surface)];
    letters.push_back(static_cast<double>(utf8::count_alnum(t.surface)));
  });
  c.types = static_cast<double>(freq.size());
  for (const auto& [w, n] : freq)
    if (n == 1) c.hapax += 1;
  c.mean_letters = stats::mean(letters);
  double sd = stats::stdev(letters);
  c.var_letters = sd * sd;
  return c;
}

inline MetricSlice readability_indices(const Document& doc) {
  auto c = readability_counts(doc);
  if (c.words < 2) throw DegenerateText("readability needs at least 2 words");
  if (c.sentences < 1) throw DegenerateText("readability needs a sentence");
  MetricSlice out;
  out.set("RDFHGL", fernandez_huertas(c.syllables, c.words, c.sentences));
  out.set("RDSPP", szigriszt_pazos(c.syllables, c.words, c.sentences));
  out.set("RDMU", readability_mu(c.words, c.mean_letters, c.var_letters));
  out.set("RDSMOG", smog(c.polysyllables, c.sentences));
  out.set("RDFOG", gunning_fog(c.words, c.sentences, c.polysyllables));
  out.set("RDHS", honore(c.words, c.types, c.hapax));
  out.set("RDBR", brunet(c.words, c.types));
  return out;
}

}  // namespace metrix
