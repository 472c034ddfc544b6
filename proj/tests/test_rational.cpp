#include <gtest/gtest.h>

#include <random>

#include "rook_orbits/rational.hpp"

using rook_orbits::Rational;

TEST(Rational, ReducedWithPositiveDenominator) {
  Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational(0, 5).str(), "0/1");
  EXPECT_EQ(Rational(7).str(), "7/1");
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0/1", "-3/2", "12/7", "5/1"}) EXPECT_EQ(Rational::parse(s).str(), s);
  EXPECT_EQ(Rational::parse("4"), Rational(4));
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  for (int k = 0; k < 500; ++k) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ(Rational::parse(a.str()), a);
  }
}

TEST(Rational, HelpersAndBignum) {
  EXPECT_EQ(rook_orbits::factorial(5), Rational(120));
  EXPECT_EQ(rook_orbits::pow(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_EQ(rook_orbits::abs(Rational(-5, 2)), Rational(5, 2));
  Rational big = rook_orbits::pow(Rational(10), 40) + Rational(1);
  EXPECT_EQ(big.str(), "10000000000000000000000000000000000000001/1");
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_EQ(Rational(-9, 3).to_long(), -3);
}
