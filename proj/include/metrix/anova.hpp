// One-way ANOVA feature ranking over a feature matrix.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/math/distributions/fisher_f.hpp>

#include "metrix/error.hpp"
#include "metrix/lexicons.hpp"

namespace metrix {

struct FeatureMatrix {
  std::vector<std::string> row_ids;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // rows[i][j] = value of column j
};

struct RankedFeature {
  std::string code;
  double f_statistic = 0;
  double p_value = 1;
  std::size_t rank = 0;  // 1-based
};

struct RankingResult {
  std::vector<RankedFeature> features;
  std::vector<std::string> notes;  // dropped constant columns and the like
};

struct AnovaStat {
  double f = 0;
  double p = 1;
  double df_between = 0;
  double df_within = 0;
};

// F statistic and upper-tail p-value for the values grouped by `groups`
// (group ids 0..k-1). Requires a non-zero within-group variance.
inline AnovaStat one_way_anova(const std::vector<double>& values,
                               const std::vector<std::size_t>& groups, std::size_t k) {
  std::vector<double> sum(k, 0.0), n(k, 0.0);
  double total = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    sum[groups[i]] += values[i];
    n[groups[i]] += 1;
    total += values[i];
  }
  const double grand = total / static_cast<double>(values.size());
  double ssb = 0, ssw = 0;
  for (std::size_t g = 0; g < k; ++g) {
    double m = sum[g] / n[g];
    ssb += n[g] * (m - grand) * (m - grand);
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    double m = sum[groups[i]] / n[groups[i]];
    ssw += (values[i] - m) * (values[i] - m);
  }
  AnovaStat s;
  s.df_between = static_cast<double>(k - 1);
  s.df_within = static_cast<double>(values.size() - k);
  if (ssw <= 0.0) {
    // Perfect separation: every group is constant but the groups differ.
    s.f = ssb > 0 ? INFINITY : 0.0;
    s.p = ssb > 0 ? 0.0 : 1.0;
    return s;
  }
  s.f = (ssb / s.df_between) / (ssw / s.df_within);
  boost::math::fisher_f dist(s.df_between, s.df_within);
  s.p = boost::math::cdf(boost::math::complement(dist, s.f));
  return s;
}

// Ranks columns by one-way ANOVA F across label classes. Constant columns
// are dropped with a note; features with p > alpha are dropped; ties in F
// keep column order.
inline RankingResult rank_features(const FeatureMatrix& matrix,
                                   const std::vector<std::string>& labels, double alpha = 0.05) {
  if (!(alpha > 0 && alpha < 1)) throw Error("InvalidArgument", "alpha must be in (0, 1)");
  if (labels.size() != matrix.rows.size())
    throw Error("InvalidArgument", "got " + std::to_string(labels.size()) + " labels for " +
                                       std::to_string(matrix.rows.size()) + " rows");
  std::map<std::string, std::size_t> class_of;
  for (const auto& l : labels) class_of.emplace(l, class_of.size());
  if (class_of.size() < 2) throw DegenerateLabels();
  std::vector<std::size_t> groups, sizes(class_of.size(), 0);
  for (const auto& l : labels) {
    groups.push_back(class_of[l]);
    ++sizes[class_of[l]];
  }
  for (const auto& [label, g] : class_of)
    if (sizes[g] < 2) throw TooFewRows("class '" + label + "' has fewer than 2 rows");

  RankingResult result;
  std::vector<double> col(matrix.rows.size());
  for (std::size_t j = 0; j < matrix.columns.size(); ++j) {
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) col[i] = matrix.rows[i][j];
    auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    if (*lo == *hi) {
      result.notes.push_back("dropped constant column " + matrix.columns[j]);
      continue;
    }
    auto s = one_way_anova(col, groups, class_of.size());
    if (s.p > alpha) continue;
    result.features.push_back({matrix.columns[j], s.f, s.p, 0});
  }
  std::stable_sort(result.features.begin(), result.features.end(),
                   [](const RankedFeature& a, const RankedFeature& b) {
                     return a.f_statistic > b.f_statistic;
                   });
  for (std::size_t i = 0; i < result.features.size(); ++i) result.features[i].rank = i + 1;
  return result;
}

namespace detail {

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

}  // namespace detail

// Parses a feature-matrix CSV. Columns named in `skip` (e.g. "source_id",
// "coverage", "warnings") are not features; a "source_id" column supplies row ids.
inline FeatureMatrix parse_matrix_csv(std::string_view text,
                                      const std::vector<std::string>& skip = {"source_id", "coverage",
                                                                              "warnings"}) {
  FeatureMatrix m;
  std::vector<std::string> header;
  std::vector<int> feature_index;  // header position -> feature column or -1
  int id_col = -1;
  detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (detail::strip(line).empty()) return;
    auto cells = detail::split_csv_line(line);
    if (header.empty()) {
      header = cells;
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "source_id") id_col = static_cast<int>(i);
        bool skipped = std::find(skip.begin(), skip.end(), header[i]) != skip.end();
        feature_index.push_back(skipped ? -1 : static_cast<int>(m.columns.size()));
        if (!skipped) m.columns.push_back(header[i]);
      }
      return;
    }
    if (cells.size() != header.size())
      throw Error("MatrixFormatError", "line " + std::to_string(line_no) + ": expected " +
                                           std::to_string(header.size()) + " cells");
    std::vector<double> row(m.columns.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (feature_index[i] < 0) continue;
      auto v = detail::parse_double(cells[i]);
      if (!v)
        throw Error("MatrixFormatError", "line " + std::to_string(line_no) +
                                             ": non-numeric value in column " + header[i]);
      row[static_cast<std::size_t>(feature_index[i])] = *v;
    }
    m.row_ids.push_back(id_col >= 0 ? cells[static_cast<std::size_t>(id_col)]
                                    : std::to_string(m.rows.size() + 1));
    m.rows.push_back(std::move(row));
  });
  if (header.empty()) throw Error("MatrixFormatError", "empty matrix file");
  return m;
}

// Labels are either one per line in row order, or "source_id,label" lines
// matched against the matrix row ids (an optional "source_id,label" header
// is skipped).
inline std::vector<std::string> parse_labels(std::string_view text, const FeatureMatrix& m) {
  std::vector<std::string> positional;
  std::map<std::string, std::string> keyed;
  bool any_keyed = false;
  detail::for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    line = detail::strip(line);
    if (line.empty()) return;
    auto cells = detail::split_csv_line(line);
    if (cells.size() == 1) {
      positional.push_back(cells[0]);
    } else if (cells.size() == 2) {
      if (line_no == 1 && cells[0] == "source_id") return;
      any_keyed = true;
      keyed[cells[0]] = cells[1];
    } else {
      throw Error("LabelFormatError", "line " + std::to_string(line_no) + ": expected 1 or 2 cells");
    }
  });
  if (any_keyed && !positional.empty())
    throw Error("LabelFormatError", "mixed positional and keyed labels");
  if (!any_keyed) return positional;
  std::vector<std::string> out;
  for (const auto& id : m.row_ids) {
    auto it = keyed.find(id);
    if (it == keyed.end()) throw Error("LabelFormatError", "no label for row '" + id + "'");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace metrix
