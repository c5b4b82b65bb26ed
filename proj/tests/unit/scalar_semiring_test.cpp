#include "supcalc/error.hpp"
#include "supcalc/semiring.hpp"

#include <gtest/gtest.h>

using namespace supcalc;

TEST(Scalar, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1/"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Scalar, PrintsCanonically) {
  EXPECT_EQ(Scalar(Rational(6, 4)).to_string(), "3/2");
  EXPECT_EQ(Scalar(Rational(-2)).to_string(), "-2");
  EXPECT_EQ(Scalar(true).to_string(), "1");
  EXPECT_EQ(Scalar(0.5).to_string(), "0.5");
}

TEST(Scalar, FloatEqualityUsesTolerance) {
  EXPECT_EQ(Scalar(0.1 + 0.2), Scalar(0.3));
  EXPECT_NE(Scalar(0.3), Scalar(0.3001));
}

TEST(Semiring, ParsesNames) {
  EXPECT_EQ(parse_semiring_kind("qnn"), SemiringKind::NonNegRational);
  EXPECT_EQ(parse_semiring_kind("q"), SemiringKind::Rational);
  EXPECT_EQ(parse_semiring_kind("bool"), SemiringKind::Boolean);
  EXPECT_EQ(parse_semiring_kind("f64"), SemiringKind::Float);
  EXPECT_FALSE(parse_semiring_kind("reals").has_value());
}

TEST(Semiring, LiteralsOutsideTheCarrierAreRejected) {
  EXPECT_THROW(semiring(SemiringKind::NonNegRational).from_literal("-1"), ScalarDomainError);
  EXPECT_THROW(semiring(SemiringKind::Boolean).from_literal("1/2"), ScalarDomainError);
  EXPECT_EQ(semiring(SemiringKind::Rational).from_literal("-1/2"), Scalar(Rational(-1, 2)));
  EXPECT_EQ(semiring(SemiringKind::Boolean).from_literal("1"), Scalar(true));
  EXPECT_EQ(semiring(SemiringKind::Float).from_literal("1/4"), Scalar(0.25));
}

TEST(Semiring, BooleanArithmeticIsOrAnd) {
  const auto& b = semiring(SemiringKind::Boolean);
  EXPECT_EQ(b.add(Scalar(true), Scalar(true)), Scalar(true));
  EXPECT_EQ(b.mul(Scalar(true), Scalar(false)), Scalar(false));
  EXPECT_EQ(b.zero(), Scalar(false));
  EXPECT_EQ(b.one(), Scalar(true));
}

TEST(Semiring, WeightPairsMustSumToOne) {
  const auto& s = default_semiring();
  auto w = make_weight_pair(s, s.from_literal("1/4"), s.from_literal("3/4"));
  EXPECT_EQ(w.p(), s.from_literal("1/4"));
  EXPECT_THROW(make_weight_pair(s, s.from_literal("1/2"), s.from_literal("1/4")), WeightError);
  const auto& b = semiring(SemiringKind::Boolean);
  EXPECT_NO_THROW(make_weight_pair(b, Scalar(true), Scalar(true)));
  EXPECT_THROW(make_weight_pair(b, Scalar(false), Scalar(false)), WeightError);
}

// Semiring axioms over the literal pool, exhaustively.
TEST(Semiring, AxiomsHoldOnThePool) {
  for (auto kind : {SemiringKind::NonNegRational, SemiringKind::Rational, SemiringKind::Boolean, SemiringKind::Float}) {
    const auto& s = semiring(kind);
    std::vector<Scalar> pool;
    for (const char* lit : {"0", "1", "1/2", "3/4", "2", "3"}) {
      try {
        pool.push_back(s.from_literal(lit));
      } catch (const ScalarDomainError&) {
      }
    }
    for (const auto& a : pool) {
      EXPECT_EQ(s.add(a, s.zero()), a);
      EXPECT_EQ(s.mul(a, s.one()), a);
      EXPECT_EQ(s.mul(a, s.zero()), s.zero());
      for (const auto& b : pool) {
        EXPECT_EQ(s.add(a, b), s.add(b, a));
        EXPECT_EQ(s.mul(a, b), s.mul(b, a));
        for (const auto& c : pool) {
          EXPECT_EQ(s.add(s.add(a, b), c), s.add(a, s.add(b, c)));
          EXPECT_EQ(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)));
          EXPECT_EQ(s.mul(a, s.add(b, c)), s.add(s.mul(a, b), s.mul(a, c)));
        }
      }
    }
  }
}
