#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "contlog/arith.hpp"
#include "contlog/codec.hpp"
#include "test_support.hpp"

namespace contlog {
namespace {

using testing::encloses;
using testing::oracle_slack;
using testing::to_oracle;

const PrecisionContext kCtx(128);

std::vector<int> digits_of(const EncodeResult& r) { return r.word.digits(); }

TEST(BaseAndWord, Validation) {
  EXPECT_THROW(Base(2), InvalidInput);
  const Base b(4);
  EXPECT_THROW(Word(b, {1, 4}), InvalidDigit);
  EXPECT_THROW(Word(b, {0}), InvalidDigit);
  EXPECT_EQ(Word::parse(b, "1, 2,3").digits(), (std::vector<int>{1, 2, 3}));
  EXPECT_TRUE(Word::parse(b, "").empty());
  EXPECT_THROW(Word::parse(b, "1,,2"), InvalidInput);
  EXPECT_THROW(Word::parse(b, "1,x"), InvalidInput);
  EXPECT_EQ(Word(b, {3, 1, 2}).to_string(), "3,1,2");
  EXPECT_LT(Word(b, {1, 3}), Word(b, {2, 1}));
  EXPECT_LT(Word(b, {1}), Word(b, {1, 1}));
}

TEST(BranchMap, Examples) {
  const Base three(3);
  EXPECT_TRUE(branch_map(three, 2, RealInterval::point(1, 128), kCtx).contains(1L));
  EXPECT_TRUE(branch_map(Base(4), 2, RealInterval::point(0, 128), kCtx).contains(mpq_class(1, 2)));
  EXPECT_TRUE(branch_map(Base(4), 1, RealInterval::point(0, 128), kCtx).contains(0L));

  const RealInterval full = branch_map(three, 1, RealInterval::unit(128), kCtx);
  EXPECT_TRUE(full.contains(0L));
  EXPECT_TRUE(encloses(RealInterval::from_bounds(full.hi(), full.hi()), oracle::log_base(3, 2),
                       ldexp(oracle::Real(1), -120)));
  EXPECT_THROW(branch_map(three, 3, RealInterval::unit(128), kCtx), InvalidDigit);
}

TEST(BranchMap, StrictlyContractsAndStaysInCell) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const Base m(3 + i % 10);
    const int d = 1 + static_cast<int>(unit(rng) * m.max_digit());
    const double a = unit(rng);
    const double b = a + (1 - a) * unit(rng) + 1e-9;
    const RealInterval x = RealInterval::from_doubles(a, std::min(b, 1.0));
    if (x.is_point()) continue;
    const RealInterval y = branch_map(m, d, x, kCtx);
    EXPECT_LT(y.width_upper(), x.width_upper());
    const RealInterval cell = RealInterval::from_bounds(log_base(m.value(), RealInterval::point(d, 128), kCtx).lo(),
                                                        log_base(m.value(), RealInterval::point(d + 1, 128), kCtx).hi());
    EXPECT_TRUE(cell.contains(y));
  }
}

TEST(WordInterval, SingleDigitCells) {
  for (int m = 3; m <= 8; ++m) {
    for (int d = 1; d < m; ++d) {
      const RealInterval c = word_interval(Word(Base(m), {d}), kCtx);
      const oracle::Real left = oracle::log_base(m, d);
      const oracle::Real right = oracle::log_base(m, d + 1);
      EXPECT_LE(to_oracle(c.lo()), left + oracle_slack(1));
      EXPECT_GE(to_oracle(c.hi()), right - oracle_slack(1));
      EXPECT_LE(to_oracle(c.hi()) - to_oracle(c.lo()), right - left + ldexp(oracle::Real(1), -120));
    }
  }
}

TEST(WordInterval, AllTopDigitsReachOne) {
  for (int m = 3; m <= 10; ++m) {
    for (std::size_t k = 1; k <= 12; ++k) {
      const RealInterval c = word_interval(Word::repeated(Base(m), m - 1, k), kCtx);
      EXPECT_EQ(compare(c.hi(), 1L), 0) << m << " " << k;
    }
  }
}

TEST(WordInterval, EmptyWordIsUnitInterval) {
  const RealInterval c = word_interval(Word(Base(5)), kCtx);
  EXPECT_EQ(c.lower(), 0.0);
  EXPECT_EQ(c.upper(), 1.0);
}

TEST(Decode, WordOneTwoBaseThree) {
  // [T_1(T_2(0)), T_1(T_2(1))] = [log_3(1 + log_3 2), log_3 2].
  const RealInterval c = decode(Word(Base(3), {1, 2}), kCtx);
  const oracle::Real left("0.44524374814610540617362652399421513648147");
  const oracle::Real right("0.63092975357145743709952711434276085429959");
  const oracle::Real tiny("1e-36");
  EXPECT_TRUE(encloses(RealInterval::from_bounds(c.lo(), c.lo()), left, ldexp(oracle::Real(1), -120)));
  EXPECT_TRUE(encloses(RealInterval::from_bounds(c.hi(), c.hi()), right, ldexp(oracle::Real(1), -120)));
  EXPECT_LE(to_oracle(c.lo()), left + tiny);
  EXPECT_GE(to_oracle(c.hi()), right - tiny);
  EXPECT_TRUE(word_interval(Word(Base(3), {1}), kCtx).contains(c));
}

TEST(WordInterval, PrefixNestingAndMonotoneCoding) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Base m(3 + trial % 8);
    std::uniform_int_distribution<int> digit(1, m.max_digit());
    std::vector<int> a(1 + trial % 9);
    std::vector<int> b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = digit(rng);
      b[i] = digit(rng);
    }
    const Word wa(m, a);
    const Word wb(m, b);
    const int d = digit(rng);
    EXPECT_TRUE(word_interval(wa, kCtx).contains(word_interval(wa.extended(d), kCtx)));
    if (wa != wb) {
      const RealInterval ia = word_interval(wa, kCtx);
      const RealInterval ib = word_interval(wb, kCtx);
      EXPECT_EQ(wa < wb, compare(ia.lo(), ib.lo()) < 0);
    }
  }
}

TEST(WordInterval, MatchesOracleComposition) {
  const Word w(Base(5), {4, 1, 3, 2, 2, 1});
  const RealInterval c = word_interval(w, kCtx);
  const oracle::Real left = oracle::word_value(5, w.digits(), 0);
  const oracle::Real right = oracle::word_value(5, w.digits(), 1);
  EXPECT_TRUE(encloses(RealInterval::from_bounds(c.lo(), c.lo()), left, ldexp(oracle::Real(1), -110)));
  EXPECT_TRUE(encloses(RealInterval::from_bounds(c.hi(), c.hi()), right, ldexp(oracle::Real(1), -110)));
  EXPECT_LE(to_oracle(c.lo()), left);
  EXPECT_GE(to_oracle(c.hi()), right);
}

TEST(FixedPoint, Examples) {
  for (int m = 3; m <= 9; ++m) {
    EXPECT_TRUE(fixed_point(Base(m), m - 1, 1e-12, kCtx).contains(1L)) << m;
    EXPECT_TRUE(fixed_point(Base(m), 1, 1e-12, kCtx).contains(0L)) << m;
  }
  const RealInterval p = fixed_point(Base(4), 2, 1e-12, kCtx);
  EXPECT_LE(p.width_upper(), 1e-12);
  // Iterated t <- log_4(2 + t) to 80 digits.
  EXPECT_TRUE(encloses(p, oracle::Real("0.72245377730510352587192262805380939223299411363606263105256964677079"),
                       oracle::Real("1e-60")));
  EXPECT_NEAR(p.lower(), 0.7225, 1e-4);
}

TEST(FixedPoint, UnreachableToleranceExhaustsPrecision) {
  EXPECT_THROW(fixed_point(Base(4), 2, 1e-30, PrecisionContext(32, 64)), PrecisionExhausted);
  EXPECT_THROW(fixed_point(Base(4), 2, 0.0, kCtx), InvalidInput);
}

TEST(Encode, ZeroIsAllOnes) {
  EXPECT_EQ(digits_of(encode_orbit(0, Base(3), 5, kCtx)), (std::vector<int>{1, 1, 1, 1, 1}));
  EXPECT_EQ(digits_of(encode_subdivide(0, Base(3), 5, kCtx)), (std::vector<int>{1, 1, 1, 1, 1}));
}

TEST(Encode, OneIsAllTopDigits) {
  for (int m = 3; m <= 7; ++m) {
    const EncodeResult r = encode_orbit(1, Base(m), 9, kCtx);
    EXPECT_EQ(r.word, Word::repeated(Base(m), m - 1, 9));
    EXPECT_TRUE(r.certified);
    EXPECT_EQ(encode_subdivide(1, Base(m), 9, kCtx).word, r.word);
  }
}

TEST(Encode, OneHalfBaseThree) {
  const std::vector<int> expected{1, 2, 1, 1, 1};
  const EncodeResult orbit = encode_orbit(mpq_class(1, 2), Base(3), 5, kCtx);
  EXPECT_TRUE(orbit.certified);
  EXPECT_EQ(orbit.bits_used, 128u);
  EXPECT_EQ(digits_of(orbit), expected);
  EXPECT_EQ(digits_of(encode_subdivide(mpq_class(1, 2), Base(3), 5, kCtx)), expected);
  EXPECT_EQ(oracle::orbit_digits(3, oracle::Real(1) / 2, 5), expected);
}

TEST(Encode, OneThirdBaseFourAgrees) {
  const std::vector<int> expected{1, 2, 1, 1, 3, 1, 1, 1};
  EXPECT_EQ(digits_of(encode_orbit(mpq_class(1, 3), Base(4), 8, kCtx)), expected);
  EXPECT_EQ(digits_of(encode_subdivide(mpq_class(1, 3), Base(4), 8, kCtx)), expected);
}

TEST(Encode, EscalatesPrecisionForLongExpansions) {
  // Each base-3 digit consumes roughly 0.7 bits, so 200 digits cannot be
  // certified at 64 or 128 bits.
  const EncodeResult r = encode_orbit(mpq_class(2, 7), Base(3), 200, PrecisionContext(64, 4096));
  EXPECT_GT(r.bits_used, 128u);
  EXPECT_EQ(r.word.digits(), oracle::orbit_digits(3, oracle::Real(2) / 7, 200));
  EXPECT_EQ(encode_subdivide(mpq_class(2, 7), Base(3), 200, PrecisionContext(64, 4096)).word, r.word);
}

TEST(Encode, CylinderEndpointIsReportedAmbiguous) {
  // 1/2 = log_4 2 is the left end of the digit-2 cell: two expansions exist.
  const PrecisionContext ctx(64, 512);
  try {
    encode_orbit(mpq_class(1, 2), Base(4), 4, ctx);
    FAIL() << "expected PrecisionExhausted";
  } catch (const EncodeExhausted& e) {
    EXPECT_FALSE(e.partial().certified);
    EXPECT_TRUE(e.partial().word.empty());
    EXPECT_EQ(e.partial().bits_used, 512u);
  }
  EXPECT_THROW(encode_subdivide(mpq_class(1, 2), Base(4), 4, ctx), PrecisionExhausted);
}

TEST(Encode, RejectsBadArguments) {
  EXPECT_THROW(encode_orbit(mpq_class(3, 2), Base(3), 4, kCtx), InvalidInput);
  EXPECT_THROW(encode_orbit(mpq_class(-1, 2), Base(3), 4, kCtx), InvalidInput);
  EXPECT_THROW(encode_subdivide(mpq_class(1, 5), Base(3), 0, kCtx), InvalidInput);
}

TEST(EncodeProperty, RoundTripAndDualAgreement) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<unsigned long> bits;
  for (int i = 0; i < 100; ++i) {
    const Base m(3 + i % 8);
    mpq_class x(bits(rng) >> 12, 1UL << 52);
    x.canonicalize();
    const EncodeResult orbit = encode_orbit(x, m, 40, kCtx);
    const EncodeResult split = encode_subdivide(x, m, 40, kCtx);
    ASSERT_EQ(orbit.word, split.word) << x.get_str() << " base " << m.value();
    const RealInterval c = decode(orbit.word, kCtx);
    EXPECT_TRUE(c.contains(x));
    EXPECT_LE(c.width_upper(), 2 * std::pow(1 / std::log(m.value()), 40));
    EXPECT_EQ(orbit.word.digits(), oracle::orbit_digits(m.value(), to_oracle(x), 40));
  }
}

}  // namespace
}  // namespace contlog
