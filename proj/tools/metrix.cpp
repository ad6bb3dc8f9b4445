// Command-line front end: batch metric extraction, registry dump, feature ranking.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "metrix/metrix.hpp"

namespace {

int cmd_run(const metrix::RunConfig& config) {
  auto summary = metrix::run(config, std::cout, std::cerr);
  if (summary.failed)
    std::cerr << "metrix: " << summary.failed << " of " << summary.documents
              << " documents failed\n";
  return summary.exit_code;
}

int cmd_registry(bool as_json, const std::string& category) {
  auto metrics = category.empty() ? metrix::list_metrics()
                                  : metrix::list_metrics(std::string_view(category));
  if (as_json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& d : metrics) {
      arr.push_back({{"code", d.code},
                     {"category", metrix::category_name(d.category)},
                     {"description", d.description},
                     {"unit", metrix::unit_name(d.unit)},
                     {"module", d.module}});
    }
    std::cout << arr.dump(2) << '\n';
    return 0;
  }
  for (const auto& d : metrics)
    std::cout << d.code << '\t' << metrix::category_name(d.category) << '\t'
              << metrix::unit_name(d.unit) << '\t' << d.description << '\n';
  std::cout << "# " << metrics.size() << " metrics\n";
  return 0;
}

int cmd_rank(const std::string& matrix_path, const std::string& labels_path, double alpha) {
  auto matrix = metrix::parse_matrix_csv(metrix::detail::read_file(matrix_path));
  auto labels = metrix::parse_labels(metrix::detail::read_file(labels_path), matrix);
  auto result = metrix::rank_features(matrix, labels, alpha);
  for (const auto& note : result.notes) std::cerr << "note: " << note << '\n';
  std::cout << "rank,code,f_statistic,p_value\n";
  for (const auto& f : result.features)
    std::cout << f.rank << ',' << f.code << ',' << metrix::format_value(f.f_statistic) << ','
              << metrix::format_value(f.p_value) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanish linguistic metrics engine"};
  app.require_subcommand(1);

  metrix::RunConfig config;
  std::string format = "conllu", emit = "csv", config_file, lexicons, embeddings, vocab;
  std::uint64_t seed = config.metrics.seed;
  auto* run = app.add_subcommand("run", "Compute all metrics for a corpus");
  run->add_option("-i,--input", config.inputs, "Input files, directories or globs")->required();
  run->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"conllu", "raw"}));
  run->add_option("--annotator-cmd", config.annotator_cmd,
                  "Command turning raw text on stdin into CoNLL-U on stdout");
  run->add_option("-w,--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);
  run->add_option("-b,--batch-size", config.batch_size, "Documents per batch")
      ->check(CLI::PositiveNumber);
  run->add_option("-o,--out", config.out, "Output file (default stdout)");
  run->add_option("--emit", emit, "Output format")
      ->check(CLI::IsMember({"csv", "jsonl", "grouped-json"}));
  run->add_option("--lexicons", lexicons, "Lexicon directory (else $METRIX_DATA_DIR)");
  run->add_option("--embeddings", embeddings, "float32 embedding matrix");
  run->add_option("--embeddings-vocab", vocab, "Vocabulary for --embeddings (default vocab.tsv beside it)");
  auto* seed_opt = run->add_option("--seed", seed, "Random seed for VOCd");
  run->add_option("--config", config_file, "JSON file with threshold and bin overrides");

  bool as_json = false;
  std::string category;
  auto* reg = app.add_subcommand("registry", "List the metric catalog");
  reg->add_flag("--json", as_json, "Emit JSON");
  reg->add_option("--category", category, "Restrict to one category");

  std::string matrix_path, labels_path;
  double alpha = 0.05;
  auto* rank = app.add_subcommand("rank", "Rank features by one-way ANOVA");
  rank->add_option("--matrix", matrix_path, "Feature matrix CSV")->required();
  rank->add_option("--labels", labels_path, "Class labels")->required();
  rank->add_option("--alpha", alpha, "Significance level")->check(CLI::Range(0.0, 1.0));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      config.format = format == "raw" ? metrix::InputFormat::kRaw : metrix::InputFormat::kConllu;
      config.emit = emit == "jsonl"          ? metrix::EmitFormat::kJsonl
                    : emit == "grouped-json" ? metrix::EmitFormat::kGroupedJson
                                             : metrix::EmitFormat::kCsv;
      config.lexicon_dir = lexicons;
      config.embeddings = embeddings;
      config.embeddings_vocab = vocab;
      if (!config_file.empty())
        config.metrics = metrix::parse_metric_config(metrix::detail::read_file(config_file));
      if (seed_opt->count()) config.metrics.seed = seed;
      return cmd_run(config);
    }
    if (*reg) return cmd_registry(as_json, category);
    return cmd_rank(matrix_path, labels_path, alpha);
  } catch (const metrix::Error& e) {
    std::cerr << "metrix: " << e.kind() << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "metrix: " << e.what() << '\n';
  }
  return 1;
}
