#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace metrix::stats {

inline double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

// Population standard deviation; 0 for fewer than two values.
inline double stdev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size()));
}

inline double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

// Occurrences per 1000 words.
inline double incidence(double count, double words) {
  return words > 0.0 ? 1000.0 * count / words : 0.0;
}

}  // namespace metrix::stats
