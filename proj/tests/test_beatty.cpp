#include <gtest/gtest.h>

#include <random>
#include <set>

#include "beatty_lab/beatty.hpp"
#include "real_oracle.hpp"

using namespace beatty_lab;

namespace {

Natural N(std::uint64_t v) { return Natural{v}; }

void expect_flags(const ConditionVector& cv, std::array<bool, 6> want) {
  EXPECT_EQ(cv.flags(), want) << "n=" << cv.n;
}

void expect_matches_real_definitions(const Natural& n) {
  const oracle::RealFlags real = oracle::evaluate(n.mpz());
  const ConditionVector cv = condition_vector(n);
  ASSERT_EQ(cmp(cv.p.mpz(), real.p), 0) << n;
  ASSERT_EQ(cmp(cv.q.mpz(), real.q), 0) << n;
  ASSERT_EQ(cv.a, real.a) << n;
  ASSERT_EQ(cv.b, real.b) << n;
  ASSERT_EQ(cv.c, real.c) << n;
  ASSERT_EQ(cv.d, real.d) << n;
  ASSERT_EQ(cv.e, real.e) << n;
  ASSERT_EQ(cv.f, real.f) << n;
}

}  // namespace

TEST(BeattySqrt2, Examples) {
  EXPECT_EQ(beatty_sqrt2(N(0)), N(0));
  EXPECT_EQ(beatty_sqrt2(N(3)), N(4));
  EXPECT_EQ(beatty_sqrt2(N(10)), N(14));
}

TEST(BeattyInvSqrt2, Examples) {
  EXPECT_EQ(beatty_inv_sqrt2(N(0)), N(0));
  EXPECT_EQ(beatty_inv_sqrt2(N(2)), N(1));
  EXPECT_EQ(beatty_inv_sqrt2(N(10)), N(7));
}

TEST(BeattySqrt2, StrictlyIncreasingWithGapsOneOrTwo) {
  std::uint64_t prev = 0;
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
    const auto v = static_cast<std::uint64_t>(beatty_sqrt2<u128>(n));
    const auto diff = v - prev;
    ASSERT_TRUE(diff == 1 || diff == 2) << n;
    prev = v;
  }
}

TEST(ConditionVector, UnanimousTrueAtTwo) {
  const auto cv = condition_vector(N(2));
  EXPECT_EQ(cv.p, N(2));
  EXPECT_EQ(cv.q, N(1));
  expect_flags(cv, {true, true, true, true, true, true});
}

TEST(ConditionVector, UnanimousFalseAtFour) {
  const auto cv = condition_vector(N(4));
  EXPECT_EQ(cv.p, N(5));
  EXPECT_EQ(cv.q, N(2));
  expect_flags(cv, {false, false, false, false, false, false});
}

TEST(ConditionVector, OneIsOutsideTheEquivalence) {
  const auto cv = condition_vector(N(1));
  EXPECT_EQ(cv.p, N(1));
  EXPECT_EQ(cv.q, N(0));
  EXPECT_TRUE(cv.d);
  EXPECT_FALSE(cv.b);
  expect_flags(cv, {false, false, false, true, false, false});
  EXPECT_FALSE(cv.unanimous());
}

TEST(ConditionVector, ZeroIsEvaluable) {
  expect_flags(condition_vector(N(0)), {true, true, true, true, true, true});
}

TEST(ConditionVector, SigmaIsDisplayOnly) {
  const auto plain = condition_vector(N(169));
  const auto shown = condition_vector(N(169), true);
  EXPECT_FALSE(plain.sigma_decimal.has_value());
  ASSERT_TRUE(shown.sigma_decimal.has_value());
  EXPECT_EQ(*shown.sigma_decimal, "0.501046020526");
  EXPECT_EQ(plain.flags(), shown.flags());
}

TEST(ConditionVector, FastPathsAgreeWithNatural) {
  for (std::uint64_t n = 0; n < fast_path_limit<std::uint64_t>; ++n) {
    const auto big = evaluate_conditions(N(n));
    const auto w64 = evaluate_conditions<std::uint64_t>(n);
    const auto w128 = evaluate_conditions<u128>(n);
    ASSERT_EQ(big.flags(), w64.flags()) << n;
    ASSERT_EQ(big.flags(), w128.flags()) << n;
    ASSERT_EQ(big.p, N(w64.p));
    ASSERT_EQ(big.q, N(static_cast<std::uint64_t>(w128.q)));
  }
  // Near the top of the 128-bit range.
  const std::uint64_t top = fast_path_limit<u128>;
  for (std::uint64_t n = top - 2000; n < top; ++n) {
    const auto big = evaluate_conditions(N(n));
    const auto w128 = evaluate_conditions<u128>(n);
    ASSERT_EQ(big.flags(), w128.flags()) << n;
    ASSERT_EQ(big.p, N(static_cast<std::uint64_t>(w128.p))) << n;
  }
}

TEST(ConditionVector, ReductionsMatchRealDefinitionsSmall) {
  for (std::uint64_t n = 0; n <= 3000; ++n) expect_matches_real_definitions(N(n));
}

TEST(ConditionVector, ReductionsMatchRealDefinitionsRandom) {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::uint64_t> dist(0, 1'000'000);
  for (int i = 0; i < 10'000; ++i) expect_matches_real_definitions(N(dist(rng)));
}

TEST(ConditionVector, ReductionsMatchRealDefinitionsHuge) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    mpz_class v{0};
    for (int k = 0; k < 3; ++k) v = (v << 64) + mpz_class(static_cast<unsigned long>(rng()));
    expect_matches_real_definitions(Natural::from_mpz(v));
  }
}

TEST(ConditionVector, ParityAndResidueInvariants) {
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    const auto cv = evaluate_conditions<u128>(n);
    const u128 odd = 2 * cv.q + 1;
    ASSERT_NE(2 * u128{n} * n, odd * odd) << n;
    const u128 residue = cv.p - 2 * cv.q;
    ASSERT_TRUE(residue == 0 || residue == 1) << n;
    ASSERT_EQ(cv.a, residue == 0) << n;
    ASSERT_EQ(cv.b, cv.c) << n;
  }
}

TEST(CheckEquivalence, Examples) {
  const auto sweep = check_equivalence(N(2), N(10'000));
  EXPECT_TRUE(sweep.holds());
  EXPECT_EQ(sweep.checked_count, 9'999U);

  const auto one = check_equivalence(N(1), N(1));
  ASSERT_EQ(one.counterexamples.size(), 1U);
  EXPECT_EQ(one.counterexamples[0].n, N(1));
  EXPECT_NE(one.counterexamples[0].d, one.counterexamples[0].b);

  const auto two = check_equivalence(N(2), N(2));
  EXPECT_TRUE(two.holds());
  EXPECT_EQ(two.checked_count, 1U);
}

TEST(CheckEquivalence, RejectsInvertedRange) {
  EXPECT_THROW(check_equivalence(N(5), N(4)), std::invalid_argument);
}

TEST(CheckEquivalence, CounterexamplesDifferInAtLeastTwoFlags) {
  for (const auto& cv : check_equivalence(N(0), N(50)).counterexamples) {
    int trues = 0;
    for (bool f : cv.flags()) trues += f ? 1 : 0;
    EXPECT_GT(trues, 0);
    EXPECT_LT(trues, 6);
  }
}

TEST(CheckEquivalence, IndependentOfPartitioning) {
  const auto serial = check_equivalence(N(0), N(20'000), 1);
  for (unsigned jobs : {2U, 3U, 8U}) {
    const auto parallel = check_equivalence(N(0), N(20'000), jobs);
    ASSERT_EQ(parallel.checked_count, serial.checked_count);
    ASSERT_EQ(parallel.counterexamples.size(), serial.counterexamples.size());
    for (std::size_t i = 0; i < serial.counterexamples.size(); ++i) {
      EXPECT_EQ(parallel.counterexamples[i].n, serial.counterexamples[i].n);
      EXPECT_EQ(parallel.counterexamples[i].flags(), serial.counterexamples[i].flags());
    }
  }
  ASSERT_EQ(serial.counterexamples.size(), 1U);
  EXPECT_EQ(serial.counterexamples[0].n, N(1));
}

TEST(CheckEquivalence, BeyondTheFastPath) {
  const Natural lo = N(fast_path_limit<u128>) - N(50);
  const auto report = check_equivalence(lo, lo + N(100), 2);
  EXPECT_TRUE(report.holds());
  EXPECT_EQ(report.checked_count, 101U);

  const Natural huge = Natural::from_decimal("123456789012345678901234567890");
  EXPECT_TRUE(check_equivalence(huge, huge + N(200)).holds());
}

TEST(Eq1Residue, Examples) {
  EXPECT_EQ(eq1_residue(N(2), N(2)), N(0));
  EXPECT_EQ(eq1_residue(N(4), N(2)), N(1));
  EXPECT_EQ(eq1_residue(N(0), N(2)), N(0));
}

TEST(Eq1Residue, OnlyModulusTwo) {
  for (std::uint64_t m : {0, 1, 3, 10}) {
    try {
      eq1_residue(N(5), N(m));
      FAIL() << "accepted modulus " << m;
    } catch (const std::invalid_argument& e) {
      EXPECT_STREQ(e.what(), "unsupported modulus");
    }
  }
}

TEST(Eq1Residue, InRangeForLargeIndices) {
  Natural n = Natural::from_decimal("98765432109876543210987654321");
  for (int i = 0; i < 500; ++i, n += N(1)) {
    const Natural r = eq1_residue(n, N(2));
    ASSERT_TRUE(r == N(0) || r == N(1));
    ASSERT_EQ(r == N(0), condition_vector(n).a);
  }
}

TEST(RationalValue, LowestTerms) {
  const RationalValue x{N(14), N(4)};
  EXPECT_EQ(x.numerator(), N(7));
  EXPECT_EQ(x.denominator(), N(2));
  EXPECT_EQ(x, RationalValue::parse("7/2"));
  EXPECT_EQ(RationalValue::parse("0/9"), (RationalValue{N(0), N(1)}));
  EXPECT_EQ(RationalValue::parse("5").to_string(), "5");
  EXPECT_THROW((RationalValue{N(1), N(0)}), std::invalid_argument);
  EXPECT_THROW(RationalValue::parse("-1/2"), std::invalid_argument);
  EXPECT_THROW(RationalValue::parse("1/"), std::invalid_argument);
}

TEST(Lemma1, Examples) {
  EXPECT_TRUE(lemma1_holds(RationalValue::parse("0")));
  EXPECT_TRUE(lemma1_holds(RationalValue::parse("1")));
  EXPECT_TRUE(lemma1_holds(RationalValue::parse("7/2")));
}

// Cross-check against a fixed-point evaluation of
// sqrt(x^2 + x + 1/2) - x - 1/2 for x = a/b, scaled by 2^F.
TEST(Lemma1, RandomRationalsAgreeWithFixedPoint) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::uint64_t> num(0, 1'000'000'000);
  std::uniform_int_distribution<std::uint64_t> den(1, 1'000'000'000);
  constexpr std::size_t F = 200;
  for (int i = 0; i < 10'000; ++i) {
    const RationalValue x{N(num(rng)), N(den(rng))};
    ASSERT_TRUE(lemma1_holds(x)) << x.to_string();

    const mpz_class& a = x.numerator().mpz();
    const mpz_class& b = x.denominator().mpz();
    // sqrt(x^2+x+1/2) * 2^F = sqrt((2a^2 + 2ab + b^2) / (2 b^2)) * 2^F
    mpz_class rad = (2 * a * a + 2 * a * b + b * b) << (2 * F);
    rad /= 2 * b * b;
    const mpz_class root = oracle::gmp_sqrt(rad);
    const mpz_class x_fx = (a << F) / b;
    const mpz_class half = oracle::pow2(F - 1);
    ASSERT_GT(root - x_fx, half) << x.to_string();
  }
}

TEST(ComplementPartner, Examples) {
  EXPECT_EQ(complement_partner(N(1)), N(3));
  EXPECT_EQ(complement_partner(N(2)), N(6));
  EXPECT_EQ(complement_partner(N(5)), N(17));
  EXPECT_THROW(complement_partner(N(0)), std::invalid_argument);
}

TEST(Complementarity, SmallLimits) {
  const auto ten = complementarity_check(N(10));
  EXPECT_TRUE(ten.covered);
  EXPECT_EQ(ten.beatty_terms, 7U);
  EXPECT_EQ(ten.partner_terms, 3U);

  std::set<std::uint64_t> partner;
  for (std::uint64_t n = 1; complement_partner(N(n)) <= N(10); ++n) partner.insert(complement_partner(N(n)).to_u64());
  EXPECT_EQ(partner, (std::set<std::uint64_t>{3, 6, 10}));

  const auto one = complementarity_check(N(1));
  EXPECT_TRUE(one.covered);
  EXPECT_EQ(one.beatty_terms, 1U);
  EXPECT_EQ(one.partner_terms, 0U);

  EXPECT_THROW(complementarity_check(N(0)), std::invalid_argument);
}

TEST(Complementarity, EveryLimitUpTo2000) {
  for (std::uint64_t lim = 1; lim <= 2000; ++lim) {
    const auto r = complementarity_check(N(lim));
    ASSERT_TRUE(r.covered) << lim;
    ASSERT_EQ(r.beatty_terms + r.partner_terms, lim);
  }
}

TEST(Complementarity, IndependentOfPartitioning) {
  const auto serial = complementarity_check(N(200'000), 1);
  const auto parallel = complementarity_check(N(200'000), 5);
  EXPECT_TRUE(serial.covered);
  EXPECT_EQ(serial.covered, parallel.covered);
  EXPECT_EQ(serial.beatty_terms, parallel.beatty_terms);
  EXPECT_EQ(serial.partner_terms, parallel.partner_terms);
}
