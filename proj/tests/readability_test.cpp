#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "metrix/metrix.hpp"
#include "support/fixtures.hpp"

namespace {

using fixtures::ConlluBuilder;
using fixtures::flat;

metrix::Document este_es_mi_ejemplo() {
  return ConlluBuilder()
      .sentence({{"Este", "este", "PRON", "PronType=Dem", 4, "nsubj"},
                 {"es", "ser", "AUX", "VerbForm=Fin", 4, "cop"},
                 {"mi", "mi", "DET", "Poss=Yes", 4, "det"},
                 {"ejemplo", "ejemplo", "NOUN", "", 0, "root"},
                 {".", ".", "PUNCT", "", 4, "punct"}})
      .doc();
}

TEST(Readability, FernandezHuertasCalibration) {
  auto doc = este_es_mi_ejemplo();
  std::vector<int> syl;
  for (const auto& t : doc.sentences[0].tokens)
    if (t.is_alphanumeric) syl.push_back(t.syllables);
  EXPECT_EQ(syl, (std::vector<int>{2, 1, 1, 3}));
  double v = *metrix::readability_indices(doc).get("RDFHGL");
  EXPECT_NEAR(v, 201.71, 1e-9);
  EXPECT_GE(v, 201.3);
  EXPECT_LE(v, 202.4);
}

TEST(Readability, SzigrisztOneSyllableWords) {
  auto doc = ConlluBuilder()
                 .sentence(flat({{"Yo", "PRON"}, {"sé", "VERB"}, {"que", "SCONJ"}, {"no", "ADV"}}))
                 .doc();
  EXPECT_NEAR(*metrix::readability_indices(doc).get("RDSPP"), 140.535, 1e-9);
}

TEST(Readability, AllHapaxGivesHonoreSentinel) {
  auto doc = ConlluBuilder().sentence(fixtures::nouns(6)).doc();
  EXPECT_EQ(*metrix::readability_indices(doc).get("RDHS"), metrix::kHonoreSentinel);
}

TEST(Readability, HandComputedIndices) {
  // "casa casa perro": N=3, V=2, one hapax, syllables 2+2+2, letters 4,4,5.
  auto doc = ConlluBuilder()
                 .sentence(flat({{"casa", "NOUN"}, {"casa", "NOUN"}, {"perro", "NOUN"}}))
                 .doc();
  auto s = metrix::readability_indices(doc);
  EXPECT_NEAR(*s.get("RDHS"), 100 * std::log(3.0) / 0.5, 1e-9);
  EXPECT_NEAR(*s.get("RDBR"), std::pow(3.0, std::pow(2.0, -0.165)), 1e-12);
  EXPECT_NEAR(*s.get("RDSMOG"), 3.1291, 1e-12);
  EXPECT_NEAR(*s.get("RDFOG"), 0.4 * 3, 1e-12);
  double mean = 13.0 / 3, var = (2 * (4 - mean) * (4 - mean) + (5 - mean) * (5 - mean)) / 3;
  EXPECT_NEAR(*s.get("RDMU"), 1.5 * mean / var * 100, 1e-9);
}

TEST(Readability, MuIsZeroWithoutLetterVariance) {
  auto doc = ConlluBuilder().sentence(flat({{"casa", "NOUN"}, {"mesa", "NOUN"}})).doc();
  EXPECT_EQ(*metrix::readability_indices(doc).get("RDMU"), 0.0);
}

TEST(Readability, DegenerateText) {
  auto doc = ConlluBuilder().sentence(flat({{"Hola", "INTJ"}, {"!", "PUNCT"}})).doc();
  EXPECT_THROW(metrix::readability_indices(doc), metrix::DegenerateText);
}

TEST(Readability, FogAndSmogGrowWithPolysyllables) {
  double last_fog = 0, last_smog = 0;
  for (int poly = 0; poly <= 6; ++poly) {
    std::vector<fixtures::Row> rows;
    for (int i = 0; i < 6; ++i) {
      std::string w = i < poly ? "organización" : "sol";
      rows.push_back({w, w, "NOUN", "", 0, ""});
    }
    auto s = metrix::readability_indices(ConlluBuilder().sentence(rows).doc());
    EXPECT_GE(*s.get("RDFOG"), last_fog);
    EXPECT_GE(*s.get("RDSMOG"), last_smog);
    last_fog = *s.get("RDFOG");
    last_smog = *s.get("RDSMOG");
  }
}

TEST(Readability, BrunetRange) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    fixtures::RandomDocOptions o;
    o.min_words = 2;
    auto doc = fixtures::random_document(rng, o);
    double br = *metrix::readability_indices(doc).get("RDBR");
    EXPECT_GT(br, 1.0);
    EXPECT_LE(br, static_cast<double>(metrix::word_count(doc)));
  }
}

TEST(Readability, IndependentOfParagraphing) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    fixtures::RandomDocOptions o;
    o.min_words = 2;
    auto doc = fixtures::random_document(rng, o);
    auto before = metrix::readability_indices(doc);
    doc.paragraphs = {{0, doc.sentences.size()}};
    auto after = metrix::readability_indices(doc);
    EXPECT_EQ(before.values, after.values);
  }
}

}  // namespace
