// Corpus loading, parallel batch execution and feature-matrix output.
#pragma once

#include <glob.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"
#include "metrix/analyzer.hpp"
#include "metrix/annotator.hpp"
#include "metrix/conllu.hpp"
#include "metrix/error.hpp"
#include "metrix/registry.hpp"

namespace metrix {

// ------------------------------------------------------------- formatting

// Six significant digits, '.' separator, independent of the C locale.
inline std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // also folds -0
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, end);
}

// The value a reader of the formatted output sees.
inline double rounded_value(double v) {
  if (!std::isfinite(v)) return v;
  double r = 0;
  auto s = format_value(v);
  std::from_chars(s.data(), s.data() + s.size(), r);
  return r;
}

// ----------------------------------------------------------------- corpus

enum class InputFormat { kConllu, kRaw };

struct InputDocument {
  std::string source_id;
  std::string text;
};

// Expands shell-style patterns (sorted per pattern); a directory contributes
// its regular files in name order.
inline std::vector<std::filesystem::path> expand_inputs(const std::vector<std::string>& patterns) {
  std::vector<std::filesystem::path> out;
  for (const auto& pattern : patterns) {
    glob_t g{};
    int rc = ::glob(pattern.c_str(), 0, nullptr, &g);
    if (rc == GLOB_NOMATCH) {
      globfree(&g);
      throw Error("IoError", "no input matches '" + pattern + "'");
    }
    if (rc != 0) {
      globfree(&g);
      throw Error("IoError", "cannot expand '" + pattern + "'");
    }
    for (std::size_t i = 0; i < g.gl_pathc; ++i) {
      std::filesystem::path p = g.gl_pathv[i];
      if (std::filesystem::is_directory(p)) {
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(p))
          if (e.is_regular_file()) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        out.insert(out.end(), files.begin(), files.end());
      } else {
        out.push_back(p);
      }
    }
    globfree(&g);
  }
  return out;
}

namespace detail {

inline std::optional<std::string> newdoc_id(std::string_view line) {
  auto body = trim(line.substr(1));
  if (body.substr(0, 6) != "newdoc") return std::nullopt;
  body = trim(body.substr(6));
  if (body.substr(0, 2) != "id") return std::string();
  body = trim(body.substr(2));
  if (body.empty() || body.front() != '=') return std::string();
  return std::string(trim(body.substr(1)));
}

}  // namespace detail

// A CoNLL-U file may hold several documents separated by `# newdoc` lines.
// Ids come from `# newdoc id = X`, else "<name>#<n>" (1-based); a file with
// no marker is one document named after the file.
inline std::vector<InputDocument> split_conllu_documents(std::string_view text,
                                                         const std::string& name) {
  struct Part {
    std::optional<std::string> id;  // set for parts opened by a marker
    std::string text;
    bool has_tokens = false;
  };
  std::vector<Part> parts;
  Part current;
  bool any_marker = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    auto end = nl == std::string_view::npos ? text.size() : nl + 1;
    std::string_view line = text.substr(pos, end - pos);
    pos = end;
    std::string_view bare = detail::trim(line);
    if (!bare.empty() && bare.front() == '#') {
      if (auto id = detail::newdoc_id(bare)) {
        if (current.id || current.has_tokens) parts.push_back(std::move(current));
        current = Part{*id, {}, false};
        any_marker = true;
      }
    } else if (!bare.empty()) {
      current.has_tokens = true;
    }
    current.text.append(line);
  }
  if (!any_marker) return {{name, std::string(text)}};
  if (current.id || current.has_tokens) parts.push_back(std::move(current));
  std::vector<InputDocument> docs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& id = parts[i].id;
    docs.push_back({id && !id->empty() ? *id : name + "#" + std::to_string(i + 1),
                    std::move(parts[i].text)});
  }
  return docs;
}

inline std::vector<InputDocument> read_corpus(const std::vector<std::filesystem::path>& files,
                                              InputFormat format) {
  std::vector<InputDocument> docs;
  for (const auto& f : files) {
    auto text = detail::read_file(f);
    auto name = f.filename().string();
    if (format == InputFormat::kRaw) {
      docs.push_back({name, std::move(text)});
    } else {
      auto part = split_conllu_documents(text, name);
      for (auto& d : part) docs.push_back(std::move(d));
    }
  }
  return docs;
}

// ------------------------------------------------------------------ batch

struct DocumentResult {
  std::string source_id;
  std::optional<Analysis> analysis;
  std::string error_kind;
  std::string error_message;

  bool ok() const { return analysis.has_value(); }
};

struct BatchOptions {
  std::size_t workers = 1;
  std::size_t batch_size = 16;
  InputFormat format = InputFormat::kConllu;
  // Used for raw input; must be safe to call from several threads.
  std::shared_ptr<Annotator> annotator;
};

inline DocumentResult analyze_one(const InputDocument& in, const Analyzer& analyzer,
                                  const BatchOptions& options) {
  DocumentResult r;
  r.source_id = in.source_id;
  try {
    Document doc;
    if (options.format == InputFormat::kRaw) {
      if (!options.annotator) throw AnnotatorFailure("no annotator configured");
      doc = annotate(in.text, *options.annotator, in.source_id, analyzer.ingest_options());
    } else {
      doc = analyzer.parse_conllu(in.text, in.source_id);
    }
    r.analysis = analyzer.analyze(doc);
  } catch (const Error& e) {
    r.error_kind = e.kind();
    r.error_message = e.what();
  } catch (const std::exception& e) {
    r.error_kind = "InternalError";
    r.error_message = e.what();
  }
  return r;
}

// Workers claim whole batches from a shared counter; results land at their
// input index, so output order never depends on scheduling.
inline std::vector<DocumentResult> run_batches(const std::vector<InputDocument>& inputs,
                                               const Analyzer& analyzer,
                                               const BatchOptions& options) {
  if (options.workers < 1) throw Error("InvalidArgument", "workers must be >= 1");
  if (options.batch_size < 1) throw Error("InvalidArgument", "batch_size must be >= 1");
  std::vector<DocumentResult> results(inputs.size());
  const std::size_t batches = (inputs.size() + options.batch_size - 1) / options.batch_size;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t b = next++; b < batches; b = next++) {
      std::size_t first = b * options.batch_size;
      std::size_t last = std::min(inputs.size(), first + options.batch_size);
      for (std::size_t i = first; i < last; ++i)
        results[i] = analyze_one(inputs[i], analyzer, options);
    }
  };
  std::size_t n = std::min(options.workers, std::max<std::size_t>(batches, 1));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return results;
}

// ----------------------------------------------------------------- output

enum class EmitFormat { kCsv, kJsonl, kGroupedJson };

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline nlohmann::ordered_json metrics_json(const MetricVector& v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kMetricCount; ++i)
    j[std::string(catalog::kMetrics[i].code)] = rounded_value(v.at(i));
  return j;
}

}  // namespace detail

inline void write_csv_header(std::ostream& out) {
  out << "source_id";
  for (const auto& d : all_metrics()) out << ',' << d.code;
  out << ",coverage\n";
}

inline void write_csv(std::ostream& out, const std::vector<DocumentResult>& results) {
  write_csv_header(out);
  for (const auto& r : results) {
    if (!r.ok()) continue;
    out << detail::csv_field(r.source_id);
    for (double v : r.analysis->metrics.values()) out << ',' << format_value(v);
    out << ',' << format_value(r.analysis->diagnostics.norm_coverage) << '\n';
  }
}

inline void write_jsonl(std::ostream& out, const std::vector<DocumentResult>& results) {
  for (const auto& r : results) {
    if (!r.ok()) continue;
    nlohmann::ordered_json j;
    j["source_id"] = r.source_id;
    j["metrics"] = detail::metrics_json(r.analysis->metrics);
    j["coverage"] = rounded_value(r.analysis->diagnostics.norm_coverage);
    j["warnings"] = r.analysis->diagnostics.warnings;
    out << j.dump() << '\n';
  }
}

inline nlohmann::ordered_json grouped_json(const MetricVector& v) {
  nlohmann::ordered_json cats = nlohmann::ordered_json::object();
  for (const auto& g : group_by_category(v)) {
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [code, value] : g.values) m[std::string(code)] = rounded_value(value);
    cats[std::string(category_name(g.category))] = std::move(m);
  }
  return cats;
}

inline void write_grouped_json(std::ostream& out, const std::vector<DocumentResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    if (!r.ok()) continue;
    nlohmann::ordered_json j;
    j["source_id"] = r.source_id;
    j["categories"] = grouped_json(r.analysis->metrics);
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

inline void write_results(std::ostream& out, const std::vector<DocumentResult>& results,
                          EmitFormat format) {
  switch (format) {
    case EmitFormat::kCsv: write_csv(out, results); break;
    case EmitFormat::kJsonl: write_jsonl(out, results); break;
    case EmitFormat::kGroupedJson: write_grouped_json(out, results); break;
  }
}

// One line per failed document: source_id, error kind, message.
inline void write_errors(std::ostream& out, const std::vector<DocumentResult>& results) {
  auto clean = [](std::string s) {
    std::replace(s.begin(), s.end(), '\t', ' ');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
  };
  for (const auto& r : results)
    if (!r.ok())
      out << clean(r.source_id) << '\t' << r.error_kind << '\t' << clean(r.error_message) << '\n';
}

// One line per document with warnings: source_id, count, messages joined by "; ".
inline void write_warnings(std::ostream& out, const std::vector<DocumentResult>& results) {
  for (const auto& r : results) {
    if (!r.ok() || r.analysis->diagnostics.warnings.empty()) continue;
    const auto& w = r.analysis->diagnostics.warnings;
    out << r.source_id << '\t' << w.size() << '\t';
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "; " : "") << w[i];
    out << '\n';
  }
}

// ------------------------------------------------------------------- run

struct RunConfig {
  std::vector<std::string> inputs;
  InputFormat format = InputFormat::kConllu;
  std::string annotator_cmd;  // empty: built-in rule-based annotator
  std::size_t workers = 1;
  std::size_t batch_size = 16;
  std::string out;  // empty or "-": stdout
  EmitFormat emit = EmitFormat::kCsv;
  std::filesystem::path lexicon_dir;  // empty: resolve_data_dir()
  std::filesystem::path embeddings;   // optional matrix file
  std::filesystem::path embeddings_vocab;  // default: vocab.tsv next to it
  MetricConfig metrics;
};

// Flag, then METRIX_DATA_DIR, then the directory compiled into the build.
inline std::filesystem::path resolve_data_dir(const std::filesystem::path& flag = {}) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("METRIX_DATA_DIR"); env && *env) return env;
#ifdef METRIX_DEFAULT_DATA_DIR
  return METRIX_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

// Reads overrides for thresholds, bins and seed from a JSON object.
inline MetricConfig parse_metric_config(std::string_view text, MetricConfig base = {}) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("ConfigError", e.what());
  }
  if (!j.is_object()) throw Error("ConfigError", "config must be a JSON object");
  auto bins = [&](const char* key, std::array<double, 5>& edges) {
    if (!j.contains(key)) return;
    auto v = j.at(key).get<std::vector<double>>();
    if (v.size() != 5) throw Error("ConfigError", std::string(key) + " needs 5 edges");
    for (std::size_t i = 0; i + 1 < 5; ++i)
      if (!(v[i] < v[i + 1])) throw Error("ConfigError", std::string(key) + " must increase");
    std::copy(v.begin(), v.end(), edges.begin());
  };
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const auto& k = it.key();
      if (k != "rare_zipf_threshold" && k != "seven_point_bins" && k != "nine_point_bins" &&
          k != "mtld_threshold" && k != "seed")
        throw Error("ConfigError", "unknown config key '" + k + "'");
    }
    if (j.contains("rare_zipf_threshold"))
      base.rare_zipf_threshold = j.at("rare_zipf_threshold").get<double>();
    if (j.contains("mtld_threshold")) base.mtld_threshold = j.at("mtld_threshold").get<double>();
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    bins("seven_point_bins", base.seven_point_bins);
    bins("nine_point_bins", base.nine_point_bins);
  } catch (const nlohmann::json::exception& e) {
    throw Error("ConfigError", e.what());
  }
  if (!(base.mtld_threshold > 0 && base.mtld_threshold < 1))
    throw Error("ConfigError", "mtld_threshold must be in (0, 1)");
  return base;
}

inline std::shared_ptr<const EmbeddingProvider> load_embeddings(const RunConfig& config) {
  if (config.embeddings.empty()) return std::make_shared<HashedTfProvider>();
  auto vocab = config.embeddings_vocab.empty()
                   ? config.embeddings.parent_path() / "vocab.tsv"
                   : config.embeddings_vocab;
  return MatrixEmbeddingProvider::load(config.embeddings, vocab);
}

struct RunSummary {
  std::size_t documents = 0;
  std::size_t failed = 0;
  int exit_code = 0;
};

// Runs the whole pipeline. Per-document failures go to the errors sidecar
// (`<out>.errors.tsv`, or stderr when writing to stdout) and set exit code 2;
// setup failures throw.
inline RunSummary run(const RunConfig& config, std::ostream& stdout_stream,
                      std::ostream& stderr_stream) {
  auto lexicons = std::make_shared<const LexiconBundle>(
      LexiconBundle::load(resolve_data_dir(config.lexicon_dir)));
  Analyzer analyzer(lexicons, load_embeddings(config), config.metrics);

  BatchOptions options;
  options.workers = config.workers;
  options.batch_size = config.batch_size;
  options.format = config.format;
  if (config.format == InputFormat::kRaw) {
    if (config.annotator_cmd.empty())
      options.annotator = std::make_shared<RuleBasedAnnotator>();
    else
      options.annotator = std::make_shared<CommandAnnotator>(config.annotator_cmd);
  }

  auto inputs = read_corpus(expand_inputs(config.inputs), config.format);
  auto results = run_batches(inputs, analyzer, options);

  RunSummary summary;
  summary.documents = results.size();
  for (const auto& r : results) summary.failed += r.ok() ? 0 : 1;
  summary.exit_code = summary.failed ? 2 : 0;

  const bool to_stdout = config.out.empty() || config.out == "-";
  if (to_stdout) {
    write_results(stdout_stream, results, config.emit);
    write_errors(stderr_stream, results);
  } else {
    std::ofstream out(config.out, std::ios::binary);
    if (!out) throw Error("IoError", "cannot write " + config.out);
    write_results(out, results, config.emit);
    std::ofstream err(config.out + ".errors.tsv", std::ios::binary);
    write_errors(err, results);
    std::ofstream warn(config.out + ".warnings.tsv", std::ios::binary);
    write_warnings(warn, results);
  }
  return summary;
}

}  // namespace metrix
