#include <gtest/gtest.h>

#include <stdexcept>

#include "legendre/algebra/rational.hpp"

using legendre::algebra::Rational;

TEST(Rational, NormalizesSign) {
  const Rational r(3, -6);
  EXPECT_EQ(r.to_string(), "-1/2");
  EXPECT_EQ(r.sign(), -1);
  EXPECT_EQ(r.denominator(), 2);
}

TEST(Rational, ParseRoundTrip) {
  for (const char* text : {"0", "7", "-3/4", "22/7"}) {
    EXPECT_EQ(Rational::parse(text).to_string(), text);
  }
  EXPECT_EQ(Rational::parse("4/8"), Rational(1, 2));
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW((void)(Rational(1) / Rational(0)), std::domain_error);
  EXPECT_THROW((void)Rational(0).inverse(), std::domain_error);
}

TEST(Rational, ArithmeticMatchesHandComputation) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_EQ(Rational(-5, 7).abs(), Rational(5, 7));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
}
