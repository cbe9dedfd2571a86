#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "contlog/codec.hpp"
#include "contlog/experiments.hpp"

namespace contlog {
namespace {

const PrecisionContext kCtx(128);

TEST(EmpiricalFrequency, Examples) {
  EXPECT_EQ(empirical_frequency(Word(Base(3), {1, 1, 1, 1})), (std::vector<double>{1.0, 0.0}));
  EXPECT_EQ(empirical_frequency(Word(Base(3), {1, 2, 1, 2})), (std::vector<double>{0.5, 0.5}));
  const Word half = encode_orbit(mpq_class(1, 2), Base(3), 5, kCtx).word;
  const std::vector<double> f = empirical_frequency(half);
  EXPECT_DOUBLE_EQ(f[0], 0.8);
  EXPECT_DOUBLE_EQ(f[1], 0.2);
  EXPECT_THROW(empirical_frequency(Word(Base(3))), InvalidInput);
}

TEST(EmpiricalFrequency, IsProbabilityVector) {
  const Word w(Base(7), {6, 1, 1, 3, 2, 6, 5, 4, 4, 4, 1});
  const std::vector<double> f = empirical_frequency(w);
  ASSERT_EQ(f.size(), 6u);
  for (double v : f) EXPECT_GE(v, 0.0);
  EXPECT_NEAR(std::accumulate(f.begin(), f.end(), 0.0), 1.0, 1e-15);
}

TEST(Census, ZeroSampleUsesOnlyDigitOne) {
  const std::vector<mpq_class> zero{mpq_class(0)};
  const CensusReport r = census_of(Base(4), zero, 20, kCtx);
  EXPECT_EQ(r.samples, 1u);
  EXPECT_EQ(r.skipped, 0u);
  EXPECT_EQ(r.per_digit_occurrence, (std::vector<double>{1.0, 0.0, 0.0}));
  EXPECT_EQ(r.mean_frequency, (std::vector<double>{1.0, 0.0, 0.0}));
}

TEST(Census, EndpointSampleIsSkippedNotDropped) {
  // 1/2 = log_4 2 has two expansions and cannot be certified.
  const std::vector<mpq_class> points{mpq_class(1, 2), mpq_class(1, 3)};
  const CensusReport r = census_of(Base(4), points, 8, PrecisionContext(64, 256));
  EXPECT_EQ(r.samples, 2u);
  EXPECT_EQ(r.skipped, 1u);
  EXPECT_EQ(r.per_digit_occurrence, (std::vector<double>{1.0, 1.0, 1.0}));
}

TEST(Census, SamplesAreDyadicAndDeterministic) {
  const mpq_class x = census_sample(42, 7);
  EXPECT_EQ(x, census_sample(42, 7));
  EXPECT_NE(x, census_sample(42, 8));
  EXPECT_NE(x, census_sample(43, 7));
  EXPECT_GE(x, 0);
  EXPECT_LT(x, 1);
  const mpz_class den = x.get_den();
  EXPECT_EQ(mpz_popcount(den.get_mpz_t()), 1u);
  EXPECT_LE(mpz_sizeinbase(den.get_mpz_t(), 2), 129u);
}

TEST(Census, IdenticalAcrossThreadCounts) {
  const CensusReport a = occurrence_census(Base(3), 200, 60, 42, kCtx, 1);
  const CensusReport b = occurrence_census(Base(3), 200, 60, 42, kCtx, 3);
  const CensusReport c = occurrence_census(Base(3), 200, 60, 42, kCtx, 8);
  EXPECT_EQ(a.per_digit_occurrence, b.per_digit_occurrence);
  EXPECT_EQ(a.mean_frequency, b.mean_frequency);
  EXPECT_EQ(a.per_digit_occurrence, c.per_digit_occurrence);
  EXPECT_EQ(a.mean_frequency, c.mean_frequency);
  EXPECT_EQ(a.skipped, c.skipped);
  EXPECT_EQ(a.seed, 42u);
  EXPECT_EQ(a.generator, kCensusGenerator);
}

TEST(Census, ReportInvariants) {
  const CensusReport r = occurrence_census(Base(5), 300, 80, 9, kCtx);
  EXPECT_EQ(r.base, 5);
  EXPECT_EQ(r.digits_per_sample, 80u);
  for (double v : r.per_digit_occurrence) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
  EXPECT_NEAR(std::accumulate(r.mean_frequency.begin(), r.mean_frequency.end(), 0.0), 1.0, 1e-9);
}

TEST(Census, RejectsEmptyRuns) {
  EXPECT_THROW(occurrence_census(Base(3), 0, 10, 1, kCtx), InvalidInput);
  EXPECT_THROW(occurrence_census(Base(3), 10, 0, 1, kCtx), InvalidInput);
}

TEST(StructureCheck, BaseThreeLevelOne) {
  const StructureReport r = structure_check(Base(3), 1, kCtx);
  EXPECT_EQ(r.cells, 2u);
  EXPECT_TRUE(r.covers_unit);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.worst_gap, 1e-30);
  EXPECT_LE(r.worst_overlap, 1e-30);
}

TEST(StructureCheck, BaseFourLevelThree) {
  const StructureReport r = structure_check(Base(4), 3, kCtx);
  EXPECT_EQ(r.cells, 27u);
  EXPECT_TRUE(r.order_ok);
  EXPECT_TRUE(r.nesting_ok);
  EXPECT_LE(r.worst_gap, kStructureTolerance);
  EXPECT_LE(r.worst_nesting_excess, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(StructureCheck, LowPrecisionFailsTolerance) {
  // 32-bit endpoints cannot resolve 2^-40 gaps.
  const StructureReport r = structure_check(Base(5), 4, PrecisionContext(32));
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.worst_overlap, kStructureTolerance);
}

TEST(StructureCheck, Limits) {
  EXPECT_THROW(structure_check(Base(3), 21, kCtx), BudgetExceeded);
  EXPECT_THROW(structure_check(Base(65), 1, kCtx), InvalidInput);
  EXPECT_THROW(structure_check(Base(3), 0, kCtx), InvalidInput);
}

}  // namespace
}  // namespace contlog
