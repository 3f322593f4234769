#include "zonal/clifford.hpp"
#include "zonal/gegenbauer.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace zonal;

namespace {

Multivector<Rational> blade(int n, Blade b, const Rational& c = 1) {
  Multivector<Rational> a(n);
  a.add(b, c);
  return a;
}

Multivector<Rational> random_mv(std::mt19937& gen, int n) {
  std::uniform_int_distribution<int> c(-4, 4), d(1, 3);
  Multivector<Rational> a(n);
  for (Blade b = 0; b < (Blade(1) << n); ++b)
    if (gen() % 2) a.add(b, make_rational(c(gen), d(gen)));
  return a;
}

RadialExpr X(int nx, int i) { return RadialExpr::coordinate(nx, 0, Group::x, i); }

}  // namespace

TEST(Clifford, GeneratorRelations) {
  const int n = 3;
  const Blade e1 = 1, e2 = 2;
  EXPECT_EQ(mv_mul(blade(n, e1), blade(n, e1)), blade(n, 0, -1));
  EXPECT_EQ(mv_mul(blade(n, e1 | e2), blade(n, e1 | e2)), blade(n, 0, -1));
  EXPECT_EQ(mv_mul(blade(n, e1), blade(n, e2)), mv_scale(mv_mul(blade(n, e2), blade(n, e1)), -1));
  EXPECT_EQ(grade(e1 | e2 | 4), 3);
  EXPECT_EQ(blade_indices(e1 | 4), (std::vector<int>{1, 3}));
}

TEST(Clifford, ProductIsAssociative) {
  std::mt19937 gen(21);
  for (int t = 0; t < 100; ++t) {
    auto a = random_mv(gen, 4), b = random_mv(gen, 4), c = random_mv(gen, 4);
    EXPECT_EQ(mv_mul(mv_mul(a, b), c), mv_mul(a, mv_mul(b, c)));
  }
}

TEST(Clifford, ConjugationReversesProducts) {
  std::mt19937 gen(22);
  for (int t = 0; t < 100; ++t) {
    auto a = random_mv(gen, 4), b = random_mv(gen, 4);
    EXPECT_EQ(conjugate(mv_mul(a, b)), mv_mul(conjugate(b), conjugate(a)));
    EXPECT_EQ(conjugate(conjugate(a)), a);
  }
}

TEST(Clifford, ParavectorNormAndInverse) {
  auto x = paravector({Rational(1), Rational(2), make_rational(-1, 2), Rational(3)});
  const Rational q = 1 + 4 + make_rational(1, 4) + 9;
  EXPECT_EQ(mv_mul(x, conjugate(x)), blade(3, 0, q));
  auto inv = mv_scale(conjugate(x), 1 / q);
  EXPECT_EQ(mv_mul(x, inv), blade(3, 0, 1));
}

TEST(Clifford, CauchyRiemannOnParavector) {
  // x = x0 + x1 e1 + x2 e2 + x3 e3: Dbar x = 1 - 3, D x = 1 + 3
  auto x = paravector_field(4, 0, Group::x);
  auto dbar = cr_operators(x, CrOperator::Dbar);
  auto d = cr_operators(x, CrOperator::D);
  Multivector<RadialExpr> m2(3), p4(3);
  m2.add(0, RadialExpr::constant(4, 0, -2));
  p4.add(0, RadialExpr::constant(4, 0, 4));
  EXPECT_EQ(dbar, m2);
  EXPECT_EQ(d, p4);
}

TEST(Clifford, DiracSquaresToMinusLaplacian) {
  Multivector<RadialExpr> f(3);
  RadialExpr g = pow(X(4, 1), 3) * X(4, 2) + X(4, 3) * X(4, 3) * X(4, 0);
  f.add(0, g);
  f.add(1 | 4, X(4, 1) * X(4, 2) * X(4, 3));
  auto dd = cr_operators(cr_operators(f, CrOperator::Dirac), CrOperator::Dirac);
  // Dirac acts on x_1..x_n only
  Multivector<RadialExpr> lap(3);
  for (const auto& [b, c] : f.comps()) {
    RadialExpr l = partial(partial(c, Group::x, 1), Group::x, 1) + partial(partial(c, Group::x, 2), Group::x, 2) +
                   partial(partial(c, Group::x, 3), Group::x, 3);
    lap.add(b, -l);
  }
  EXPECT_EQ(dd, lap);
  // D Dbar = d0^2 - Dirac^2 = full Laplacian
  EXPECT_EQ(cr_operators(cr_operators(f, CrOperator::Dbar), CrOperator::D), mv_laplacian(f));
}

TEST(Clifford, RealPartOfPowerMatchesBinomial) {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 5; ++k) {
      const int d = n + 1;
      auto x = paravector_field(d, d, Group::x), y = paravector_field(d, d, Group::y);
      auto p = mv_power(mv_mul(x, conjugate(y)), k, RadialExpr::constant(d, d, 1));
      EXPECT_EQ(real_part(p, RadialExpr(d, d)), xyc_power_real<RadialExpr>(d, k));
    }
}

TEST(Clifford, RealPartIsHalfZonalInThePlane) {
  for (int k = 1; k <= 6; ++k)
    EXPECT_EQ(xyc_power_real<RadialExpr>(2, k) * Rational(2), zonal_direct<RadialExpr>(1, k));
}

TEST(Clifford, PairRecurrenceMatchesBinomial) {
  auto pr = xyc_pair<RadialExpr>(3);
  for (int k = 0; k <= 6; ++k) {
    auto [A, B] = pr.power(k, RadialExpr::constant(3, 3, 1));
    EXPECT_EQ(A, xyc_power_real<RadialExpr>(3, k));
    EXPECT_EQ(B, xyc_spherical_derivative<RadialExpr>(3, k));
  }
  EXPECT_TRUE(xyc_spherical_derivative<RadialExpr>(3, 0).is_zero());
}

TEST(Clifford, MonogenicityOfLaplacianOfPowers) {
  for (int k = 0; k <= 5; ++k) {
    auto r = monogenicity_check(k, 3);
    EXPECT_TRUE(r.dbar_vanishes) << k;
    if (k >= 3) {
      EXPECT_FALSE(r.d_vanishes) << k;
    }
  }
  EXPECT_THROW(monogenicity_check(2, 2), std::domain_error);
}

TEST(Clifford, RejectsBadInput) {
  EXPECT_THROW(mv_add(Multivector<Rational>(2), Multivector<Rational>(3)), std::invalid_argument);
  EXPECT_THROW(blade(2, 4), std::invalid_argument);
  Multivector<RadialExpr> short_field(3);
  short_field.add(0, X(3, 0));  // R_3 fields need four coordinates
  EXPECT_THROW(cr_operators(short_field, CrOperator::D), std::invalid_argument);
}
