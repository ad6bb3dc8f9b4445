#include <gtest/gtest.h>

#include "support/suites.hpp"

namespace {

void ExpectPassed(const suites::SuiteResult& r, std::size_t min_cases) {
  EXPECT_GE(r.cases, min_cases);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

TEST(OracleSuite, EditDistanceMatchesRecursiveLevenshtein) {
  ExpectPassed(suites::med_oracle(), 200);
}

TEST(OracleSuite, MtldMatchesStepwiseReimplementation) {
  ExpectPassed(suites::mtld_oracle(), 200);
}

TEST(OracleSuite, ReadabilityAndMaasMatchDirectFormulas) {
  ExpectPassed(suites::readability_oracle(), 200);
}

TEST(OracleSuite, VocdMatchesBruteForceFit) {
  ExpectPassed(suites::vocd_oracle(), 200);
}

TEST(OracleSuite, CohesionMatchesPairEnumeration) {
  ExpectPassed(suites::cohesion_oracle(), 200);
}

TEST(InvariantSuite, IncidenceIsPerThousandWords) {
  ExpectPassed(suites::incidence_invariant(), 1);
}

TEST(InvariantSuite, SentenceLengthRatiosSumToOne) {
  ExpectPassed(suites::tssr_invariant(), 200);
}

TEST(InvariantSuite, TypeTokenRatiosInUnitInterval) {
  ExpectPassed(suites::ttr_bounds_invariant(), 200);
}

TEST(InvariantSuite, NormBinsPartitionRatedWords) {
  ExpectPassed(suites::psych_partition_invariant(), 200);
}

TEST(InvariantSuite, EditDistanceIsAMetric) {
  ExpectPassed(suites::med_axioms_invariant(), 200);
}

TEST(InvariantSuite, CosineStaysInRange) {
  ExpectPassed(suites::cosine_bounds_invariant(), 200);
}

TEST(InvariantSuite, MtldStableUnderDuplication) {
  ExpectPassed(suites::mtld_duplication_invariant(), 20);
}

// Different seeds move VOCd by less than 10% on 500-token text.
TEST(InvariantSuite, VocdSeedSensitivityIsSmall) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 10; ++i) {
    auto text = fixtures::zipf_tokens(rng, 500, 400);
    double a = metrix::vocd(text, 1).d, b = metrix::vocd(text, 2).d;
    EXPECT_LT(std::fabs(a - b), 0.1 * a) << a << " vs " << b;
    EXPECT_EQ(a, metrix::vocd(text, 1).d);
  }
}

}  // namespace
