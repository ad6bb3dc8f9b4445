#include <gtest/gtest.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "metrix/metrix.hpp"
#include "support/fixtures.hpp"

namespace {

namespace fs = std::filesystem;

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("metrix_pipeline_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  metrix::RunConfig config(std::vector<std::string> inputs) {
    metrix::RunConfig c;
    c.inputs = std::move(inputs);
    c.lexicon_dir = fixtures::data_dir();
    return c;
  }

  fs::path dir_;
};

std::string corpus(int docs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string text;
  for (int i = 0; i < docs; ++i)
    text += "# newdoc id = d" + std::to_string(i) + "\n" + fixtures::random_conllu(rng);
  return text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

TEST_F(PipelineTest, CsvHasHeaderAndOneRowPerDocument) {
  auto in = write("a.conllu", corpus(1, 1));
  std::ostringstream out, err;
  auto summary = metrix::run(config({in}), out, err);
  EXPECT_EQ(summary.exit_code, 0);
  auto lines = split(out.str(), '\n');
  ASSERT_EQ(lines.size(), 2u);
  auto header = split(lines[0], ',');
  EXPECT_EQ(header.size(), 184u);
  EXPECT_EQ(header.front(), "source_id");
  EXPECT_EQ(header[1], "DESPC");
  EXPECT_EQ(header.back(), "coverage");
  EXPECT_EQ(split(lines[1], ',').size(), 184u);
  EXPECT_EQ(split(lines[1], ',')[0], "d0");
}

TEST_F(PipelineTest, WorkerCountDoesNotChangeOutput) {
  auto in = write("c.conllu", corpus(40, 2));
  std::string outputs[2];
  std::size_t workers[2] = {1, 8};
  for (int i = 0; i < 2; ++i) {
    auto c = config({in});
    c.workers = workers[i];
    c.batch_size = 3;
    c.out = (dir_ / ("out" + std::to_string(i) + ".csv")).string();
    std::ostringstream so, se;
    EXPECT_EQ(metrix::run(c, so, se).exit_code, 0);
    outputs[i] = slurp(c.out);
  }
  EXPECT_EQ(split(outputs[0], '\n').size(), 41u);
  EXPECT_EQ(outputs[0], outputs[1]);
}

TEST_F(PipelineTest, FailedDocumentGoesToErrorsSidecar) {
  auto in = write("m.conllu", corpus(1, 3) + "# newdoc id = hueco\n\n" + corpus(1, 4));
  auto c = config({in});
  c.out = (dir_ / "m.csv").string();
  std::ostringstream so, se;
  auto summary = metrix::run(c, so, se);
  EXPECT_EQ(summary.exit_code, 2);
  EXPECT_EQ(summary.failed, 1u);
  EXPECT_EQ(summary.documents, 3u);
  EXPECT_EQ(split(slurp(c.out), '\n').size(), 3u);
  auto errors = slurp(c.out + ".errors.tsv");
  EXPECT_EQ(errors.rfind("hueco\tEmptyDocument\t", 0), 0u) << errors;
  EXPECT_EQ(split(errors, '\n').size(), 1u);
}

TEST_F(PipelineTest, GroupedJson) {
  std::ifstream sample(std::string(METRIX_SAMPLES_DIR) + "/ejemplo.conllu");
  std::stringstream buf;
  buf << sample.rdbuf();
  auto c = config({write("s.conllu", buf.str())});
  c.emit = metrix::EmitFormat::kGroupedJson;
  std::ostringstream so, se;
  metrix::run(c, so, se);
  auto j = nlohmann::json::parse(so.str());
  ASSERT_TRUE(j.is_array());
  ASSERT_FALSE(j.empty());
  const auto& cats = j[0]["categories"];
  EXPECT_EQ(cats.size(), 12u);
  EXPECT_EQ(cats["Readability"].size(), 7u);
  EXPECT_TRUE(cats["Readability"].contains("RDFHGL"));
  EXPECT_EQ(j[0]["source_id"], "ejemplo");
  EXPECT_NEAR(cats["Readability"]["RDFHGL"].get<double>(), 201.71, 1e-9);
}

TEST_F(PipelineTest, JsonLinesCarryWarnings) {
  auto c = config({write("w.conllu", fixtures::ConlluBuilder().sentence(fixtures::nouns(3)).str())});
  c.emit = metrix::EmitFormat::kJsonl;
  std::ostringstream so, se;
  metrix::run(c, so, se);
  auto j = nlohmann::json::parse(so.str());
  EXPECT_EQ(j["metrics"].size(), 182u);
  EXPECT_FALSE(j["warnings"].empty());
}

TEST_F(PipelineTest, EmptyCorpusWritesHeaderOnly) {
  fs::create_directories(dir_ / "empty");
  std::ostringstream so, se;
  auto summary = metrix::run(config({(dir_ / "empty").string()}), so, se);
  EXPECT_EQ(summary.exit_code, 0);
  EXPECT_EQ(split(so.str(), '\n').size(), 1u);
}

TEST_F(PipelineTest, RawTextThroughBuiltInAnnotator) {
  auto c = config({write("r.txt", "El perro corre por el parque. Luego duerme.\n")});
  c.format = metrix::InputFormat::kRaw;
  std::ostringstream so, se;
  EXPECT_EQ(metrix::run(c, so, se).exit_code, 0);
  EXPECT_EQ(split(so.str(), '\n').size(), 2u);
}

TEST(Formatting, SixSignificantDigits) {
  EXPECT_EQ(metrix::format_value(0.0), "0");
  EXPECT_EQ(metrix::format_value(-0.0), "0");
  EXPECT_EQ(metrix::format_value(1.0), "1");
  EXPECT_EQ(metrix::format_value(201.7125), "201.713");
  EXPECT_EQ(metrix::format_value(1.0 / 3), "0.333333");
  EXPECT_EQ(metrix::format_value(1e6), "1e+06");
  EXPECT_EQ(metrix::rounded_value(1.0 / 3), 0.333333);
}

TEST(Corpus, SplitsOnNewdoc) {
  auto one = metrix::split_conllu_documents("1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n\n", "f.conllu");
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].source_id, "f.conllu");

  auto many = metrix::split_conllu_documents(
      "# newdoc id = x\n1\ta\ta\tX\t_\t_\t0\troot\t_\t_\n\n# newdoc\n1\tb\tb\tX\t_\t_\t0\troot\t_\t_\n\n",
      "f.conllu");
  ASSERT_EQ(many.size(), 2u);
  EXPECT_EQ(many[0].source_id, "x");
  EXPECT_EQ(many[1].source_id, "f.conllu#2");
  EXPECT_NE(many[1].text.find("\tb\t"), std::string::npos);
}

TEST(MetricConfigJson, OverridesAndErrors) {
  auto c = metrix::parse_metric_config(R"({"rare_zipf_threshold": 3.5, "seed": 7,
                                            "nine_point_bins": [1, 2, 3, 4, 9]})");
  EXPECT_EQ(c.rare_zipf_threshold, 3.5);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.nine_point_bins[1], 2.0);
  EXPECT_EQ(c.seven_point_bins[1], 2.5);
  EXPECT_THROW(metrix::parse_metric_config("{"), metrix::Error);
  EXPECT_THROW(metrix::parse_metric_config("[]"), metrix::Error);
  EXPECT_THROW(metrix::parse_metric_config(R"({"colour": 1})"), metrix::Error);
  EXPECT_THROW(metrix::parse_metric_config(R"({"seven_point_bins": [1, 2]})"), metrix::Error);
  EXPECT_THROW(metrix::parse_metric_config(R"({"seven_point_bins": [1, 3, 2, 4, 7]})"),
               metrix::Error);
  EXPECT_THROW(metrix::parse_metric_config(R"({"mtld_threshold": 1.5})"), metrix::Error);
  EXPECT_THROW(metrix::parse_metric_config(R"({"seed": "x"})"), metrix::Error);
}

TEST(Batches, RejectsZeroWorkers) {
  metrix::Analyzer analyzer(fixtures::shipped_lexicons());
  metrix::BatchOptions o;
  o.workers = 0;
  EXPECT_THROW(metrix::run_batches({}, analyzer, o), metrix::Error);
}

TEST(Cli, RegistryListsEveryMetric) {
  auto out = fs::temp_directory_path() / ("metrix_cli_" + std::to_string(::getpid()) + ".txt");
  std::string cmd = std::string("\"") + METRIX_CLI_PATH + "\" registry --category Readability > \"" +
                    out.string() + "\"";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  fs::remove(out);
  auto lines = split(buf.str(), '\n');
  ASSERT_EQ(lines.size(), 8u);
  EXPECT_EQ(lines[0].substr(0, 7), "RDFHGL\t");
  EXPECT_EQ(lines.back(), "# 7 metrics");
}

TEST(Cli, UnknownCategoryFails) {
  std::string cmd = std::string("\"") + METRIX_CLI_PATH + "\" registry --category Nope 2>/dev/null";
  EXPECT_NE(std::system(cmd.c_str()), 0);
}

}  // namespace
