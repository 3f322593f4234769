#include "zonal/poisson.hpp"
#include "zonal/reproducing.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace zonal;

TEST(Poisson, SeriesMatchesClosedForm) {
  std::vector<double> x{0.3, -0.2, 0.1}, y{0.5, 0.4, -0.7};
  EXPECT_NEAR(poisson::series(x, y, 200), poisson::closed(x, y), 1e-12);
  std::vector<double> x4{0.1, 0.2, 0.0, -0.3, 0.2}, y4{0.6, -0.1, 0.5, 0.2, 0.3};
  EXPECT_NEAR(poisson::series(x4, y4, 200), poisson::closed(x4, y4), 1e-12);
}

TEST(Poisson, PartialSumErrorDecays) {
  std::vector<double> x{0.5, 0.0, 0.0}, y{0.6, 0.8, 0.0};
  double prev = 1e9;
  for (int t : {5, 10, 20, 40, 80}) {
    const double err = std::abs(poisson::series(x, y, t) - poisson::closed(x, y));
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_THROW(poisson::series({1.0, 0.0}, {1.0, 0.0}, 10), std::domain_error);
}

TEST(Poisson, OperatorForm) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> r(0.0, 0.9), w(-1.0, 1.0);
  for (int i = 0; i < 100; ++i)
    for (double lam : {0.5, 1.0, 1.5}) {
      auto c = poisson::operator_check(r(gen), w(gen), lam);
      EXPECT_NEAR(c.operator_side, c.closed_side, 1e-12);
    }
}

TEST(Poisson, BPowerSumDerivativeMatchesDifference) {
  const double w = 0.3, e = -1.5;
  auto f = poisson::BPowerSum::power(w, e);
  auto df = f.derivative();
  for (double r : {0.1, 0.4, 0.7}) {
    const double h = 1e-6;
    EXPECT_NEAR(df.eval(r), (f.eval(r + h) - f.eval(r - h)) / (2 * h), 1e-7);
  }
}

TEST(Reproducing, CompiledPolynomialMatchesExactEvaluation) {
  RadialExpr p = RadialExpr::coordinate(3, 0, Group::x, 0) * RadialExpr::coordinate(3, 0, Group::x, 1) * Rational(3) +
                 RadialExpr::norm_power(3, 0, Group::x, 2);
  CompiledPoly c(p);
  std::vector<double> pt{0.5, -2.0, 1.5};
  EXPECT_NEAR(c(pt), eval_float(p, pt, {}), 1e-12);
  EXPECT_THROW(CompiledPoly(RadialExpr::dot(2, 2)), std::invalid_argument);
}

TEST(Reproducing, MonteCarloReproducesHarmonic) {
  // P = x0 x1 in R^3 (harmonic, degree 2); P(y) at y = (3/5, 4/5, 0) is 12/25
  RadialExpr P = RadialExpr::coordinate(3, 0, Group::x, 0) * RadialExpr::coordinate(3, 0, Group::x, 1);
  McEstimate e = reproducing_mc(2, 2, P, {0.6, 0.8, 0.0}, 200000, 9);
  EXPECT_DOUBLE_EQ(e.target, 0.48);
  EXPECT_LT(std::abs(e.estimate - e.target), 5 * e.std_error);
  // orthogonality: a degree-1 harmonic integrates to zero against Z_2
  RadialExpr L = RadialExpr::coordinate(3, 0, Group::x, 0);
  McEstimate o = reproducing_mc(2, 2, L, {0.6, 0.8, 0.0}, 200000, 10);
  EXPECT_LT(std::abs(o.estimate), 5 * o.std_error);
}

TEST(Reproducing, DeterministicForSeed) {
  RadialExpr P = RadialExpr::coordinate(3, 0, Group::x, 2);
  auto a = reproducing_mc(2, 1, P, {0.0, 0.0, 1.0}, 1000, 77);
  auto b = reproducing_mc(2, 1, P, {0.0, 0.0, 1.0}, 1000, 77);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_THROW(reproducing_mc(2, 1, P, {1.0, 1.0, 0.0}, 1000, 1), std::domain_error);
}
