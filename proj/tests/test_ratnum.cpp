#include "zonal/ratnum.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace zonal;

TEST(Ratnum, MakeRationalCanonicalizes) {
  EXPECT_EQ(to_string(make_rational(2, 2)), "1");
  EXPECT_EQ(to_string(make_rational(2, -4)), "-1/2");
  EXPECT_EQ(to_fraction_string(make_rational(6, 3)), "2/1");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Ratnum, ParseRational) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-0.25"), make_rational(-1, 4));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("1.5"), make_rational(3, 2));
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(Ratnum, PochhammerHandValues) {
  EXPECT_EQ(pochhammer(make_rational(1, 2), 3), make_rational(15, 8));
  EXPECT_EQ(pochhammer(Rational(5), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(-2), 3), Rational(0));
  EXPECT_THROW(pochhammer(Rational(1), -1), std::domain_error);
}

TEST(Ratnum, GammaRatioHandValues) {
  // Gamma(5/2) / Gamma(1/2) = (1/2)(3/2)
  EXPECT_EQ(gamma_ratio(make_rational(5, 2), make_rational(1, 2)), make_rational(3, 4));
  const int k = 2;
  EXPECT_EQ(gamma_ratio(Rational(k + 3), Rational(k + 1)), Rational(12));
  EXPECT_EQ(gamma_ratio(Rational(4), Rational(4)), Rational(1));
  EXPECT_THROW(gamma_ratio(Rational(1), Rational(3)), std::domain_error);
  EXPECT_THROW(gamma_ratio(make_rational(1, 2), Rational(0)), std::domain_error);
  EXPECT_THROW(gamma_ratio(Rational(2), Rational(0)), std::domain_error);
}

TEST(Ratnum, FactorialBinomial) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(10), Rational(3628800));
  EXPECT_EQ(binomial(10, 3), Rational(120));
  EXPECT_EQ(binomial(4, 5), Rational(0));
  EXPECT_EQ(binomial(4, -1), Rational(0));
  EXPECT_THROW(factorial(-1), std::domain_error);
}

TEST(Ratnum, PowersAndRoots) {
  EXPECT_EQ(rpow(make_rational(2, 3), 3), make_rational(8, 27));
  EXPECT_EQ(rpow(make_rational(2, 3), -2), make_rational(9, 4));
  EXPECT_THROW(rpow(Rational(0), -1), std::domain_error);
  EXPECT_EQ(*exact_sqrt(make_rational(9, 16)), make_rational(3, 4));
  EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Rational(-4)).has_value());
  EXPECT_EQ(sign_pow(3), -1);
  EXPECT_EQ(sign_pow(4), 1);
}

TEST(Ratnum, PochhammerSplitProperty) {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9), len(0, 6);
  for (int t = 0; t < 200; ++t) {
    Rational a = make_rational(num(gen), den(gen));
    int i = len(gen), j = len(gen);
    EXPECT_EQ(pochhammer(a, i + j), pochhammer(a, i) * pochhammer(a + i, j));
  }
}

TEST(Ratnum, GammaRatioMatchesFactorialsOnIntegers) {
  for (int a = 1; a <= 12; ++a)
    for (int b = 1; b <= a; ++b) EXPECT_EQ(gamma_ratio(Rational(a), Rational(b)), factorial(a - 1) / factorial(b - 1));
}

// Rational arithmetic against integer cross-multiplication.
TEST(Ratnum, RandomOperationsMatchCrossMultiplication) {
  std::mt19937_64 gen(42);
  std::uniform_int_distribution<long> num(-10000, 10000), den(1, 10000);
  for (int t = 0; t < 10000; ++t) {
    const long p1 = num(gen), q1 = den(gen), p2 = num(gen), q2 = den(gen);
    const Rational a = make_rational(p1, q1), b = make_rational(p2, q2);
    EXPECT_EQ(a + b, make_rational(p1 * q2 + p2 * q1, q1 * q2));
    EXPECT_EQ(a - b, make_rational(p1 * q2 - p2 * q1, q1 * q2));
    EXPECT_EQ(a * b, make_rational(p1 * p2, q1 * q2));
    if (p2 != 0) {
      EXPECT_EQ(a / b, make_rational(p1 * q2 * (p2 < 0 ? -1 : 1), q1 * (p2 < 0 ? -p2 : p2)));
    }
    EXPECT_EQ(a < b, p1 * q2 < p2 * q1);
  }
}
