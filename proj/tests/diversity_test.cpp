#include <gtest/gtest.h>

#include <random>

#include "metrix/metrix.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

namespace {

using fixtures::ConlluBuilder;
using fixtures::flat;
using Items = std::vector<std::string>;

Items repeat(const Items& unit, int times) {
  Items out;
  for (int i = 0; i < times; ++i) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

Items distinct(int n) {
  Items out;
  for (int i = 0; i < n; ++i) out.push_back("w" + std::to_string(i));
  return out;
}

TEST(TypeTokenRatio, Basics) {
  EXPECT_EQ(metrix::type_token_ratio(Items{"a", "b", "a", "c"}), 0.75);
  EXPECT_EQ(metrix::type_token_ratio(distinct(7)), 1.0);
  EXPECT_EQ(metrix::type_token_ratio(Items{}), 0.0);
}

TEST(TypeTokenRatio, FamilyOverWordClasses) {
  auto doc = ConlluBuilder()
                 .sentence({{"Los", "el", "DET", "", 2, "det"},
                            {"perros", "perro", "NOUN", "", 3, "nsubj"},
                            {"corren", "correr", "VERB", "", 0, "root"},
                            {"y", "y", "CCONJ", "", 5, "cc"},
                            {"el", "el", "DET", "", 6, "det"},
                            {"perro", "perro", "NOUN", "", 3, "conj"},
                            {"que", "que", "PRON", "PronType=Rel", 8, "nsubj"},
                            {"corre", "correr", "VERB", "", 6, "acl"},
                            {"María", "María", "PROPN", "", 3, "obj"},
                            {".", ".", "PUNCT", "", 3, "punct"}})
                 .doc();
  auto s = metrix::ttr_family(doc);
  EXPECT_EQ(*s.get("LDTTRa"), 1.0);
  EXPECT_EQ(*s.get("LDTTRLa"), 6.0 / 9);
  EXPECT_EQ(*s.get("LDTTRno"), 1.0);        // perros, perro, maría
  EXPECT_EQ(*s.get("LDTTRLno"), 0.5);       // NOUN lemmas only: perro x2
  EXPECT_EQ(*s.get("LDTTRLvb"), 0.5);
  EXPECT_EQ(*s.get("LDTTRLrpron"), 1.0);
  EXPECT_EQ(*s.get("LDTTRLipron"), 0.0);
  EXPECT_EQ(*s.get("LDTTRLifn"), 0.75);     // el, y, el, que
  EXPECT_EQ(*s.get("LDTTRadj"), 0.0);
  EXPECT_EQ(*s.get("LDDadj"), 0.0);
  EXPECT_DOUBLE_EQ(*s.get("LDDno"), 3.0 / 9);
  EXPECT_DOUBLE_EQ(*s.get("LDDvb"), 2.0 / 9);
}

TEST(Mtld, OneRepeatedWord) {
  // Every second token drops the running TTR to 0.5 and closes a factor.
  auto items = repeat({"a"}, 50);
  EXPECT_EQ(metrix::mtld(items).value, 2.0);
  EXPECT_EQ(metrix::mtld(items).value, oracle::mtld(items));
}

TEST(Mtld, AllDistinctHitsTheCap) {
  auto items = distinct(50);
  EXPECT_EQ(metrix::mtld(items).value, 2500.0);
  EXPECT_EQ(metrix::mtld(items).value, oracle::mtld(items));
}

TEST(Mtld, AlternatingIsSymmetric) {
  auto items = repeat({"a", "b"}, 50);
  // a, ab, aba (2/3 < 0.72): a factor every three tokens, 33 of them.
  EXPECT_DOUBLE_EQ(metrix::mtld(items).value, 100.0 / 33);
  Items rev(items.rbegin(), items.rend());
  EXPECT_DOUBLE_EQ(oracle::mtld_pass(items, 0.72), oracle::mtld_pass(rev, 0.72));
  EXPECT_EQ(metrix::mtld(items).value, oracle::mtld(items));
}

TEST(Mtld, ShortInputIsFlagged) {
  auto r = metrix::mtld(distinct(9));
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.value, 9.0);
  EXPECT_FALSE(metrix::mtld(distinct(10)).degenerate);
}

TEST(Vocd, NeedsFiftyItems) {
  EXPECT_THROW(metrix::vocd(distinct(49), 1), metrix::NotEnoughTokens);
  EXPECT_NO_THROW(metrix::vocd(distinct(50), 1));
}

TEST(Vocd, OneRepeatedWordSitsOnLowerBound) {
  auto r = metrix::vocd(repeat({"a"}, 200), 42);
  EXPECT_EQ(r.d, 1.0);
  EXPECT_EQ(r.status, metrix::VocdStatus::kAtLowerBound);
}

TEST(Vocd, AllDistinctSitsOnUpperBound) {
  auto r = metrix::vocd(distinct(200), 42);
  EXPECT_EQ(r.d, 500.0);
  EXPECT_EQ(r.status, metrix::VocdStatus::kAtUpperBound);
}

TEST(Vocd, DeterministicForSeed) {
  std::mt19937_64 rng(3);
  auto items = fixtures::zipf_tokens(rng, 300);
  auto a = metrix::vocd(items, 42), b = metrix::vocd(items, 42);
  EXPECT_EQ(a.d, b.d);
  EXPECT_EQ(a.status, metrix::VocdStatus::kOk);
  EXPECT_NEAR(a.d, oracle::vocd(items, 42), 0.5);
}

TEST(Vocd, ModelCurveRecoversD) {
  // A curve generated by the model itself must fit back to its D.
  std::vector<double> curve;
  for (int n = 35; n <= 50; ++n) curve.push_back(metrix::vocd_model_ttr(n, 73.25));
  EXPECT_NEAR(metrix::vocd_fit(curve).d, 73.25, 1e-5);
}

TEST(Maas, WorkedValues) {
  EXPECT_NEAR(metrix::maas(Items{"a", "b", "c", "a"}), 0.3447, 5e-5);
  Items hundred;
  for (int i = 0; i < 100; ++i) hundred.push_back("w" + std::to_string(i % 50));
  // (2 - log10 50) / 4
  EXPECT_NEAR(metrix::maas(hundred), 0.0753, 5e-5);
  EXPECT_EQ(metrix::maas(distinct(20)), 0.0);
  EXPECT_EQ(metrix::maas(Items{"a"}), 0.0);
  EXPECT_EQ(metrix::maas(repeat({"a"}, 5)), 0.0);
}

TEST(Maas, DecreasesWithRicherVocabulary) {
  Items prev;
  double last = 1e9;
  for (int v = 2; v <= 100; v += 7) {
    Items items;
    for (int i = 0; i < 100; ++i) items.push_back("w" + std::to_string(i % v));
    double m = metrix::maas(items);
    EXPECT_LT(m, last) << "V=" << v;
    last = m;
  }
}

TEST(LexicalDiversity, WarningsForShortText) {
  auto doc = ConlluBuilder().sentence(flat({{"Hola", "INTJ"}, {"mundo", "NOUN"}})).doc();
  metrix::Diagnostics diag;
  auto s = metrix::lexical_diversity(doc, {}, &diag);
  EXPECT_EQ(*s.get("LDVOCd"), 0.0);
  EXPECT_EQ(*s.get("LDMLTD"), 2.0);
  EXPECT_EQ(diag.warnings.size(), 2u);
  EXPECT_EQ(s.values.size(), 22u);
}

}  // namespace
