#include "zonal/routes.hpp"

#include <gtest/gtest.h>

using namespace zonal;

namespace {
RadialExpr S(int d) { return RadialExpr::dot(d, d); }
RadialExpr QQ(int d) { return RadialExpr::norm_power(d, d, Group::x, 2) * RadialExpr::norm_power(d, d, Group::y, 2); }

template <class E>
void expect_holds(const RouteResult<E>& r) {
  EXPECT_TRUE(r.holds()) << to_string(r.defect());
}
}  // namespace

TEST(Routes, LadderHandValues) {
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(ladder_route<RadialExpr>(n, 0).value, RadialExpr::constant(n + 1, n + 1, 1));
    EXPECT_EQ(ladder_route<RadialExpr>(n, 1).value, S(n + 1) * Rational(1 - n));
  }
  EXPECT_EQ(ladder_route<RadialExpr>(2, 2).value, S(3) * S(3) * Rational(3) - QQ(3));
  EXPECT_THROW(ladder_route<RadialExpr>(1, 2), std::domain_error);
}

TEST(Routes, LadderBothEngines) {
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k) {
      auto a = ladder_route<RadialExpr>(n, k);
      auto b = ladder_route<InvariantExpr>(n, k);
      expect_holds(a);
      expect_holds(b);
      EXPECT_EQ(to_radial(b.value), a.value);
    }
}

TEST(Routes, LaplacianRoutesSmall) {
  for (Parity p : {Parity::odd, Parity::even})
    for (int k = 0; k <= 3; ++k) {
      expect_holds(laplacian_route<RadialExpr>(p, 1, k));
      expect_holds(laplacian_route_fixed_y<RadialExpr>(p, 1, k));
      expect_holds(laplacian_route<InvariantExpr>(p, 2, k));
    }
  EXPECT_EQ(laplacian_route_dim(Parity::odd, 2), 7);
  EXPECT_EQ(laplacian_route_dim(Parity::even, 2), 6);
}

TEST(Routes, IteratedRoutes) {
  for (const Rational& lam : {make_rational(1, 2), Rational(1), make_rational(3, 2)})
    for (int k = 0; k <= 3; ++k) {
      expect_holds(iterated_route<InvariantExpr>(1, lam, k));
      expect_holds(iterated_route<InvariantExpr>(2, lam, k));
      expect_holds(iterated_route_fixed_y<InvariantExpr>(2, lam, k));
    }
  EXPECT_THROW(iterated_route<InvariantExpr>(1, make_rational(1, 3), 0), std::domain_error);
}

TEST(Routes, CliffordRoute) {
  for (int k = 0; k <= 3; ++k) {
    expect_holds(clifford_route<RadialExpr>(1, k));
    expect_holds(clifford_route<InvariantExpr>(2, k));
  }
  for (int k = 1; k <= 3; ++k) expect_holds(clifford_route<RadialExpr>(0, k));
  EXPECT_THROW(clifford_route<RadialExpr>(0, 0), std::domain_error);
}

TEST(Routes, CliffordAtUnitPole) {
  for (int k = 0; k <= 6; ++k) {
    PoleCheck pc = clifford_at_pole<InvariantExpr>(1, k);
    EXPECT_TRUE(pc.holds());
    EXPECT_EQ(pc.prefactor, make_rational(-2 * (k + 2), k + 1));
  }
}

TEST(Routes, KelvinPlanarReference) {
  for (int k = 1; k <= 5; ++k) {
    auto r = kelvin_route<RadialExpr>(1, k);
    expect_holds(r);
    EXPECT_EQ(r.value, xyc_power_real<RadialExpr>(2, k));
  }
}

TEST(Routes, KelvinInFourDimensionsByHand) {
  // Delta (<x,y> |x|^-2) = -4 <x,y> |x|^-4 and K maps it to -4 <x,y> = -Z_1
  auto r = kelvin_route<RadialExpr>(3, 1);
  EXPECT_EQ(r.value, S(4) * Rational(-4));
  EXPECT_EQ(r.value, r.target * Rational(-1));
  EXPECT_EQ(r.prefactor, make_rational(-1, 2));
  EXPECT_FALSE(r.holds());
}

TEST(Routes, KelvinObservedConstant) {
  for (int n : {3, 5})
    for (int k = 1; k <= 4; ++k) {
      auto r = kelvin_route<InvariantExpr>(n, k);
      EXPECT_EQ(r.value, r.target * coeff::kelvin_constant_corrected(n, k));
    }
  EXPECT_THROW(kelvin_route<RadialExpr>(2, 1), std::domain_error);
  EXPECT_THROW(kelvin_route<RadialExpr>(3, 0), std::domain_error);
}

TEST(Routes, EtaRelation) {
  for (int k = 1; k <= 5; ++k) expect_holds(eta_relation<InvariantExpr>(0, k));
  for (int m = 1; m <= 2; ++m)
    for (int k = 1; k <= 4; ++k) {
      auto r = eta_relation<InvariantExpr>(m, k);
      EXPECT_EQ(r.value, r.target * coeff::eta_corrected(m, k));
      PoleCheck pc = eta_at_pole<InvariantExpr>(m, k);
      EXPECT_EQ(pc.value, pc.target * coeff::eta_fixed_y_corrected(m, k));
    }
}

TEST(Routes, RunRouteDispatch) {
  RouteSpec spec;
  spec.route = Route::direct;
  spec.n = 3;
  spec.k = 1;
  EXPECT_EQ(run_route<RadialExpr>(spec).value, S(4) * Rational(4));
  spec.route = Route::laplacian_even;
  spec.m = 1;
  expect_holds(run_route<RadialExpr>(spec));
  EXPECT_EQ(parse_route("clifford"), Route::clifford);
  EXPECT_STREQ(route_name(Route::laplacian_odd), "laplacian_odd");
  EXPECT_THROW(parse_route("bogus"), std::invalid_argument);
}
