#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lattisym/errors.hpp"
#include "lattisym/field.hpp"
#include "lattisym/rational.hpp"
#include "support/oracles.hpp"

using lattisym::FieldElement;
using lattisym::Rational;
using F = FieldElement;

namespace {

double as_double(const F& x) {
  return x.p().get_d() + x.q().get_d() * std::sqrt(2.0) + x.r().get_d() * std::sqrt(3.0) +
         x.s().get_d() * std::sqrt(6.0);
}

}  // namespace

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(lattisym::parse_rational("7"), Rational(7));
  EXPECT_EQ(lattisym::parse_rational("-3/16"), Rational(-3, 16));
  EXPECT_EQ(lattisym::parse_rational("1.25"), Rational(5, 4));
  EXPECT_EQ(lattisym::parse_rational("6/4"), Rational(3, 2));
  EXPECT_THROW(lattisym::parse_rational("1/0"), lattisym::Error);
  EXPECT_THROW(lattisym::parse_rational("abc"), lattisym::ParseError);
}

TEST(Rational, SquareRoots) {
  EXPECT_EQ(*lattisym::rational_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(lattisym::rational_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(lattisym::rational_sqrt(Rational(-4)).has_value());
}

TEST(FieldElement, ProductTable) {
  const F s2 = F::sqrt2(), s3 = F::sqrt3(), s6 = F::sqrt6();
  EXPECT_EQ(s2 * s2, F(2));
  EXPECT_EQ(s3 * s3, F(3));
  EXPECT_EQ(s6 * s6, F(6));
  EXPECT_EQ(s2 * s3, s6);
  EXPECT_EQ(s2 * s6, F(2) * s3);
  EXPECT_EQ(s3 * s6, F(3) * s2);
}

TEST(FieldElement, ArithmeticAgreesWithDoubles) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const F a = oracle::random_field(rng), b = oracle::random_field(rng);
    const double x = as_double(a), y = as_double(b);
    EXPECT_NEAR(as_double(a + b), x + y, 1e-9);
    EXPECT_NEAR(as_double(a - b), x - y, 1e-9);
    EXPECT_NEAR(as_double(a * b), x * y, 1e-9 * (1 + std::abs(x * y)));
    EXPECT_NEAR(a.to_double(), x, 1e-9);
  }
}

TEST(FieldElement, InverseIsExact) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    const F a = oracle::random_field(rng);
    if (a.is_zero()) continue;
    EXPECT_EQ(a * a.inverse(), F(1));
    EXPECT_EQ((a / a), F(1));
  }
  EXPECT_THROW(F(0).inverse(), lattisym::DivisionByZero);
}

TEST(FieldElement, FieldAxioms) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 100; ++k) {
    const F a = oracle::random_field(rng), b = oracle::random_field(rng), c = oracle::random_field(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, F(0));
  }
}

TEST(FieldElement, SignNearCancellation) {
  // 99*99 = 9801 and 70*70*2 = 9800.
  const F close = F(99) - F(70) * F::sqrt2();
  EXPECT_EQ(close.sign(), 1);
  EXPECT_EQ((-close).sign(), -1);
  // 5 + 2*sqrt6 = (sqrt2 + sqrt3)^2.
  const F sum = F::sqrt2() + F::sqrt3();
  EXPECT_EQ((sum * sum - F(5) - F(2) * F::sqrt6()).sign(), 0);
  // sqrt2 + sqrt3 - sqrt6 - 1/2 is about -0.0003.
  const F tiny = F::sqrt2() + F::sqrt3() - F::sqrt6() - F(Rational(1, 2));
  EXPECT_EQ(tiny.sign(), as_double(tiny) < 0 ? -1 : 1);
  // 485 - 198*sqrt6 is about 2.1e-3; a large pair near cancellation.
  const F pell = F(485) - F(198) * F::sqrt6();
  EXPECT_EQ(pell.sign(), 1);
}

TEST(FieldElement, SignMatchesDoubleAwayFromZero) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 500; ++k) {
    const F a = oracle::random_field(rng);
    const double x = as_double(a);
    if (std::abs(x) < 1e-6) continue;
    EXPECT_EQ(a.sign(), x > 0 ? 1 : -1) << a.to_string();
  }
}

TEST(FieldElement, SquareRoots) {
  EXPECT_EQ(*F(Rational(3, 4)).sqrt(), F(Rational(1, 2)) * F::sqrt3());
  EXPECT_EQ(*F(Rational(2, 3)).sqrt(), F(Rational(1, 3)) * F::sqrt6());
  EXPECT_EQ(*(F(5) + F(2) * F::sqrt6()).sqrt(), F::sqrt2() + F::sqrt3());
  EXPECT_FALSE(F(5).sqrt().has_value());
  EXPECT_FALSE(F(-1).sqrt().has_value());
  std::mt19937_64 rng(15);
  for (int k = 0; k < 100; ++k) {
    const F a = abs(oracle::random_field(rng, 4));
    const auto root = (a * a).sqrt();
    ASSERT_TRUE(root.has_value());
    EXPECT_EQ(*root, a);
  }
}

TEST(FieldElement, ParseForms) {
  EXPECT_EQ(F::parse("1/2*sqrt3"), F(Rational(1, 2)) * F::sqrt3());
  EXPECT_EQ(F::parse("sqrt(2)"), F::sqrt2());
  EXPECT_EQ(F::parse("sqrt6/4"), F(Rational(1, 4)) * F::sqrt6());
  EXPECT_EQ(F::parse("4*sqrt3 + 7"), F(7) + F(4) * F::sqrt3());
  EXPECT_EQ(F::parse("-sqrt2 - 3/5"), -F::sqrt2() - F(Rational(3, 5)));
  EXPECT_EQ(F::parse("0"), F(0));
  EXPECT_THROW(F::parse("sqrt5"), lattisym::ParseError);
  EXPECT_THROW(F::parse("1 +"), lattisym::ParseError);
  EXPECT_THROW(F::parse(""), lattisym::ParseError);
}

TEST(FieldElement, TextRoundTrip) {
  std::mt19937_64 rng(16);
  for (int k = 0; k < 200; ++k) {
    const F a = oracle::random_field(rng);
    EXPECT_EQ(F::parse(a.to_string()), a) << a.to_string();
  }
  EXPECT_EQ(F(0).to_string(), "0");
}

TEST(FieldElement, Ordering) {
  EXPECT_TRUE(F::sqrt2() < F(Rational(3, 2)));
  EXPECT_TRUE(F::sqrt3() > F::sqrt2());
  EXPECT_EQ(abs(F(-3)), F(3));
}
