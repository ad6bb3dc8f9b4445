// Tunable thresholds shared by the metric modules.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace metrix {

struct MetricConfig {
  // Words below this Zipf value are "rare".
  double rare_zipf_threshold = 4.0;
  // Bin edges for concreteness, imageability, familiarity and age of
  // acquisition (1-7 scales), and for valence and arousal (1-9 scales).
  std::array<double, 5> seven_point_bins = {1.0, 2.5, 4.0, 5.5, 7.0};
  std::array<double, 5> nine_point_bins = {1.0, 3.0, 5.0, 7.0, 9.0};
  double mtld_threshold = 0.72;
  std::uint64_t seed = 42;
};

// Non-fatal notes collected while computing one document.
struct Diagnostics {
  // Fraction of content words found in the norms table.
  double norm_coverage = 0.0;
  // Unnormalized mean rating per norm dimension over covered words.
  std::array<double, 6> norm_means{};
  std::vector<std::string> warnings;
};

}  // namespace metrix
