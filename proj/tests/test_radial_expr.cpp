#include "zonal/radial_expr.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace zonal;

namespace {

RadialExpr X(int n, int i) { return RadialExpr::coordinate(n, 0, Group::x, i); }
RadialExpr R(int n, int p) { return RadialExpr::norm_power(n, 0, Group::x, p); }

/// Random sums of monomials times |x|^p, |y|^q with small exponents.
RadialExpr random_expr(std::mt19937& gen, int nx, int ny, int terms = 3) {
  std::uniform_int_distribution<int> e(0, 2), p(-3, 3), c(-5, 5), d(1, 4);
  RadialExpr out(nx, ny);
  for (int t = 0; t < terms; ++t) {
    RadialExpr term = RadialExpr::constant(nx, ny, make_rational(c(gen), d(gen)));
    for (int i = 0; i < nx; ++i) term = term * pow(RadialExpr::coordinate(nx, ny, Group::x, i), e(gen));
    for (int i = 0; i < ny; ++i) term = term * pow(RadialExpr::coordinate(nx, ny, Group::y, i), e(gen));
    term = term * RadialExpr::norm_power(nx, ny, Group::x, p(gen));
    if (ny) term = term * RadialExpr::norm_power(nx, ny, Group::y, p(gen));
    out += term;
  }
  return out;
}

std::vector<Rational> random_point(std::mt19937& gen, int n) {
  std::uniform_int_distribution<int> c(-6, 6), d(1, 5);
  std::vector<Rational> v;
  for (int i = 0; i < n; ++i) v.push_back(make_rational(c(gen), d(gen)));
  if (v[0] == 0) v[0] = 1;  // keep away from the origin
  return v;
}

std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& r : v) out.push_back(r.get_d());
  return out;
}

}  // namespace

TEST(RadialExpr, PartialOfInverseNorm) {
  // d/dx1 |x|^-1 = -x1 |x|^-3
  EXPECT_EQ(partial(R(3, -1), Group::x, 1), -(X(3, 1) * R(3, -3)));
}

TEST(RadialExpr, QuadricFoldsIntoRadialPower) {
  RadialExpr q = X(3, 0) * X(3, 0) + X(3, 1) * X(3, 1) + X(3, 2) * X(3, 2);
  EXPECT_EQ(q, R(3, 2));
  EXPECT_EQ(q * R(3, -2), RadialExpr::constant(3, 0, 1));
}

TEST(RadialExpr, FundamentalSolutionIsHarmonic) {
  for (int N = 3; N <= 7; ++N) EXPECT_TRUE(laplacian(R(N, 2 - N), Group::x).is_zero()) << N;
  EXPECT_FALSE(laplacian(R(4, -1), Group::x).is_zero());
}

TEST(RadialExpr, LaplacianHandValues) {
  // Delta |x|^2 = 2N; Delta (x0 x1) = 0; Delta x0^2 = 2
  EXPECT_EQ(laplacian(R(5, 2), Group::x), RadialExpr::constant(5, 0, 10));
  EXPECT_TRUE(laplacian(X(3, 0) * X(3, 1), Group::x).is_zero());
  EXPECT_EQ(laplacian(X(3, 0) * X(3, 0), Group::x), RadialExpr::constant(3, 0, 2));
  // Delta (<x,y> |x|^-2) = -4 <x,y> |x|^-4 in R^4
  RadialExpr s = RadialExpr::dot(4, 4);
  RadialExpr rx = RadialExpr::norm_power(4, 4, Group::x, -2);
  EXPECT_EQ(laplacian(s * rx, Group::x), s * rx * rx * Rational(-4));
}

TEST(RadialExpr, DirectionalDerivative) {
  RadialExpr s = RadialExpr::dot(3, 3);
  EXPECT_EQ(dir_deriv(s), RadialExpr::norm_power(3, 3, Group::y, 2));
  EXPECT_EQ(dir_deriv(RadialExpr::norm_power(3, 3, Group::x, 2)), s * Rational(2));
}

TEST(RadialExpr, DerivationRuleOnRandomPairs) {
  std::mt19937 gen(1);
  for (int t = 0; t < 1000; ++t) {
    const int nx = 2 + t % 3, ny = t % 2 ? nx : 0;
    RadialExpr f = random_expr(gen, nx, ny, 2), g = random_expr(gen, nx, ny, 2);
    const int i = t % nx;
    EXPECT_EQ(partial(f * g, Group::x, i), partial(f, Group::x, i) * g + f * partial(g, Group::x, i));
  }
}

TEST(RadialExpr, LaplacianProductRule) {
  std::mt19937 gen(2);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 3;
    RadialExpr f = random_expr(gen, n, 0, 2), g = random_expr(gen, n, 0, 2);
    RadialExpr grad = RadialExpr(n, 0);
    for (int i = 0; i < n; ++i) grad += partial(f, Group::x, i) * partial(g, Group::x, i);
    EXPECT_EQ(laplacian(f * g, Group::x), laplacian(f, Group::x) * g + f * laplacian(g, Group::x) + grad * Rational(2));
  }
}

TEST(RadialExpr, PartialMatchesCentralDifference) {
  std::mt19937 gen(3);
  for (int t = 0; t < 50; ++t) {
    RadialExpr f = random_expr(gen, 3, 0, 3);
    auto pt = to_double(random_point(gen, 3));
    for (int i = 0; i < 3; ++i) {
      const double h = 1e-5;
      auto a = pt, b = pt;
      a[i] += h;
      b[i] -= h;
      const double fd = (eval_float(f, a, {}) - eval_float(f, b, {})) / (2 * h);
      const double exact = eval_float(partial(f, Group::x, i), pt, {});
      EXPECT_NEAR(fd, exact, 1e-5 * (1 + std::abs(exact)));
    }
  }
}

TEST(RadialExpr, CanonicalizationIsIdempotent) {
  std::mt19937 gen(4);
  for (int t = 0; t < 200; ++t) {
    RadialExpr f = random_expr(gen, 3, 3, 4), g = random_expr(gen, 3, 3, 4);
    EXPECT_EQ(RadialExpr::from_terms(3, 3, f.terms()), f);
    EXPECT_EQ((f + g) - g, f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(RadialExpr, KelvinIsInvolutive) {
  std::mt19937 gen(5);
  for (int t = 0; t < 200; ++t) {
    RadialExpr f = random_expr(gen, 2 + t % 4, 0, 3);
    EXPECT_EQ(kelvin(kelvin(f)), f);
  }
}

TEST(RadialExpr, KelvinPreservesHarmonicity) {
  for (int n = 2; n <= 5; ++n) {
    std::vector<RadialExpr> harmonic{X(n, 0), X(n, 0) * X(n, 1), X(n, 0) * X(n, 0) - X(n, 1) * X(n, 1),
                                     pow(X(n, 0), 3) - X(n, 0) * X(n, 1) * X(n, 1) * Rational(3)};
    for (const auto& h : harmonic) {
      ASSERT_TRUE(laplacian(h, Group::x).is_zero());
      EXPECT_TRUE(laplacian(kelvin(h), Group::x).is_zero());
    }
  }
}

TEST(RadialExpr, HomogeneousDegree) {
  EXPECT_EQ(homogeneous_degree(X(3, 0) * R(3, -3), Group::x), -2);
  EXPECT_FALSE(homogeneous_degree(X(3, 0) + R(3, 2), Group::x).has_value());
  EXPECT_EQ(homogeneous_degree(RadialExpr::dot(3, 3), Group::y), 1);
}

TEST(RadialExpr, ExactEvaluationMatchesFloat) {
  std::mt19937 gen(6);
  for (int t = 0; t < 300; ++t) {
    RadialExpr f = random_expr(gen, 3, 3, 3);
    auto x = random_point(gen, 3), y = random_point(gen, 3);
    Rational qx = 0, qy = 0;
    for (auto& v : x) qx += v * v;
    for (auto& v : y) qy += v * v;
    const double exact = to_double(eval_exact(f, x, y), qx, qy);
    const double flt = eval_float(f, to_double(x), to_double(y));
    EXPECT_NEAR(exact, flt, 1e-9 * (1 + std::abs(flt)));
  }
}

TEST(RadialExpr, ExactEvaluationAtRationalNorm) {
  // |(3/5, 4/5)| = 1, |(0, 2)| = 2
  RadialExpr f = RadialExpr::norm_power(2, 2, Group::x, 1) * RadialExpr::norm_power(2, 2, Group::y, 3);
  std::vector<Rational> x{make_rational(3, 5), make_rational(4, 5)}, y{Rational(0), Rational(2)};
  ExtendedValue v = eval_exact(f, x, y);
  EXPECT_EQ(v, (ExtendedValue{Rational(8), Rational(0), Rational(0), Rational(0)}));
  std::vector<Rational> irr{Rational(1), Rational(1)};
  ExtendedValue w = eval_exact(RadialExpr::norm_power(2, 2, Group::x, 1), irr, y);
  EXPECT_EQ(w.b, Rational(1));
  EXPECT_EQ(w.a, Rational(0));
}

TEST(RadialExpr, SpecializeAndEmbed) {
  RadialExpr s = RadialExpr::dot(3, 3);
  std::vector<Rational> e0{Rational(1), Rational(0), Rational(0)};
  RadialExpr sx = specialize(s * RadialExpr::norm_power(3, 3, Group::y, 2), Group::y, e0);
  EXPECT_EQ(sx, X(3, 0));
  EXPECT_EQ(embed(X(2, 1), 4, 0), X(4, 1));
  EXPECT_THROW(embed(R(2, -2), 3, 0), std::invalid_argument);
}

TEST(RadialExpr, Text) {
  EXPECT_EQ(to_string(RadialExpr(2, 0)), "0");
  EXPECT_EQ(to_string(X(2, 0) * Rational(3) - X(2, 1) * Rational(2)), "-2*x1 + 3*x0");
  // mixed radial powers share one common power
  EXPECT_EQ(to_string(X(2, 0) - R(2, -2)), "-|x|^-2 + x0*x1^2*|x|^-2 + x0^3*|x|^-2");
}

TEST(RadialExpr, RejectsBadInput) {
  EXPECT_THROW(partial(X(2, 0), Group::x, 2), std::out_of_range);
  EXPECT_THROW(pow(X(2, 0), -1), std::domain_error);
  EXPECT_THROW(X(2, 0) + X(3, 0), std::invalid_argument);
  EXPECT_THROW(dir_deriv(X(2, 0)), std::invalid_argument);
}
