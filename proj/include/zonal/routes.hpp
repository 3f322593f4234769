#pragma once

// Independent constructions of the zonal harmonic Z_k in R^(n+1). Each route returns
// what it computed, the prefactor it predicts, and the directly expanded target, so a
// caller checks value == prefactor * target exactly. Everything is templated on the
// expression engine (RadialExpr or InvariantExpr).

#include "zonal/clifford.hpp"
#include "zonal/coefficients.hpp"
#include "zonal/gegenbauer.hpp"
#include "zonal/invariant_expr.hpp"
#include "zonal/radial_expr.hpp"

#include <stdexcept>
#include <string>

namespace zonal {

enum class Route { direct, ladder, laplacian_odd, laplacian_even, clifford, kelvin };

inline const char* route_name(Route r) {
  switch (r) {
    case Route::direct: return "direct";
    case Route::ladder: return "ladder";
    case Route::laplacian_odd: return "laplacian_odd";
    case Route::laplacian_even: return "laplacian_even";
    case Route::clifford: return "clifford";
    case Route::kelvin: return "kelvin";
  }
  return "?";
}

inline Route parse_route(const std::string& s) {
  for (Route r : {Route::direct, Route::ladder, Route::laplacian_odd, Route::laplacian_even, Route::clifford,
                  Route::kelvin})
    if (s == route_name(r)) return r;
  throw std::invalid_argument("unknown route: " + s);
}

struct RouteSpec {
  Route route = Route::direct;
  int n = 2;  // ambient R^(n+1)
  int k = 0;
  int m = 0;
};

enum class Parity { odd, even };

template <class E>
struct RouteResult {
  E value;
  Rational prefactor;
  E target;

  bool holds() const { return value == target * prefactor; }
  E defect() const { return value - target * prefactor; }
};

template <class E>
E delta_yx_power(E f, int m) {
  for (int i = 0; i < m; ++i) f = laplacian(laplacian(f, Group::x), Group::y);
  return f;
}

/// (K <y, grad_x> K)^k [1] in R^(n+1).
template <class E = RadialExpr>
RouteResult<E> ladder_route(int n, int k) {
  if (n < 2) throw std::domain_error("ladder route needs n >= 2");
  if (k < 0) throw std::domain_error("ladder route needs k >= 0");
  E f = ExprFactory<E>::constant(n + 1, 1);
  for (int i = 0; i < k; ++i) f = kelvin(dir_deriv(kelvin(f, Group::x)), Group::x);
  return {f, coeff::ladder(n, k), zonal_direct<E>(n, k)};
}

/// Ambient dimension of the Laplacian routes: R^(2m+3) (odd) or R^(2m+2) (even).
inline int laplacian_route_dim(Parity p, int m) { return p == Parity::odd ? 2 * m + 3 : 2 * m + 2; }

/// (Delta_y Delta_x)^m applied to the R^3 (odd) or R^2 (even) zonal formula of degree
/// k + 2m, written over the target dimension's variables.
template <class E = RadialExpr>
RouteResult<E> laplacian_route(Parity p, int m, int k) {
  if (m < 0 || k < 0) throw std::domain_error("laplacian route needs m >= 0, k >= 0");
  const int dim = laplacian_route_dim(p, m);
  const int seed_n = p == Parity::odd ? 2 : 1;
  E seed = zonal_formula<E>(seed_n, k + 2 * m, dim);
  E value = delta_yx_power(seed, m);
  Rational pre = p == Parity::odd ? coeff::beta_tilde(m, k) : coeff::beta_hat(m, k);
  return {value, pre, zonal_direct<E>(dim - 1, k)};
}

/// Only Delta_x^m acts. The value is rescaled by |y|^(-2m), which is what holding y on
/// the unit sphere amounts to.
template <class E = RadialExpr>
RouteResult<E> laplacian_route_fixed_y(Parity p, int m, int k) {
  if (m < 0 || k < 0) throw std::domain_error("laplacian route needs m >= 0, k >= 0");
  const int dim = laplacian_route_dim(p, m);
  const int seed_n = p == Parity::odd ? 2 : 1;
  E seed = zonal_formula<E>(seed_n, k + 2 * m, dim);
  E value = laplacian_power(seed, Group::x, m) * ExprFactory<E>::norm_power(dim, Group::y, -2 * m);
  Rational pre = p == Parity::odd ? coeff::fixed_y_odd(m, k) : (m == 0 ? Rational(1) : coeff::fixed_y_even(m, k));
  return {value, pre, zonal_direct<E>(dim - 1, k)};
}

/// (Delta_y Delta_x)^m [(|x||y|)^(k+2m) C^lambda_{k+2m}(w)] in R^(2(lambda+m)+2),
/// against beta * (|x||y|)^k C^{lambda+m}_k(w).
template <class E = RadialExpr>
RouteResult<E> iterated_route(int m, const Rational& lambda, int k) {
  Rational N = 2 * (lambda + m) + 2;
  if (!is_integer(N)) throw std::domain_error("iterated route needs an integral dimension");
  const int dim = int(N.get_num().get_si());
  E value = delta_yx_power(gegenbauer_zonal_form<E>(k + 2 * m, lambda, dim), m);
  return {value, coeff::beta(m, lambda, k), gegenbauer_zonal_form<E>(k, lambda + m, dim)};
}

/// Same with only Delta_x^m acting, rescaled by |y|^(-2m).
template <class E = RadialExpr>
RouteResult<E> iterated_route_fixed_y(int m, const Rational& lambda, int k) {
  Rational N = 2 * (lambda + m) + 2;
  if (!is_integer(N)) throw std::domain_error("iterated route needs an integral dimension");
  const int dim = int(N.get_num().get_si());
  E value = laplacian_power(gegenbauer_zonal_form<E>(k + 2 * m, lambda, dim), Group::x, m) *
            ExprFactory<E>::norm_power(dim, Group::y, -2 * m);
  return {value, coeff::fixed_y_general(m, lambda), gegenbauer_zonal_form<E>(k, lambda + m, dim)};
}

/// (Delta_y Delta_x)^m [((x y^c)^(k+2m))_0] in R^(2m+2), predicted (1/2) betaHat Z_k.
template <class E = RadialExpr>
RouteResult<E> clifford_route(int m, int k) {
  if (m < 0 || k < 0) throw std::domain_error("clifford route needs m >= 0, k >= 0");
  if (m == 0 && k == 0) throw std::domain_error("clifford route at m = 0 needs k >= 1 (Z_0 = 1, real part 1)");
  const int dim = 2 * m + 2;
  E value = delta_yx_power(xyc_power_real<E>(dim, k + 2 * m), m);
  return {value, coeff::beta_hat(m, k) / 2, zonal_direct<E>(dim - 1, k)};
}

/// K[Delta_x^m ((x y^-1)^-k)_0] in R^(n+1) for odd n = 2m + 1. The input
/// ((x y^-1)^-k)_0 equals ((x y^c)^k)_0 |x|^(-2k).
template <class E = RadialExpr>
E kelvin_route_input(int n, int k) {
  return xyc_power_real<E>(n + 1, k) * ExprFactory<E>::norm_power(n + 1, Group::x, -2 * k);
}

template <class E = RadialExpr>
RouteResult<E> kelvin_route(int n, int k) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("kelvin route needs odd n (integer Laplacian power)");
  if (k < 1) throw std::domain_error("kelvin route needs k >= 1");
  const int m = (n - 1) / 2;
  E value = kelvin(laplacian_power(kelvin_route_input<E>(n, k), Group::x, m), Group::x);
  return {value, coeff::kelvin_constant(n, k), zonal_direct<E>(n, k)};
}

/// (Delta_y Delta_x)^m [((x y^c)^(k+2m))_0] against eta * K[Delta_x^m ((x y^-1)^-k)_0]
/// in R^(2m+2). Here the target is the Kelvin side and the prefactor is eta.
template <class E = RadialExpr>
RouteResult<E> eta_relation(int m, int k) {
  if (m < 0 || k < 1) throw std::domain_error("eta relation needs m >= 0, k >= 1");
  const int n = 2 * m + 1;
  E lhs = delta_yx_power(xyc_power_real<E>(n + 1, k + 2 * m), m);
  E rhs = kelvin(laplacian_power(kelvin_route_input<E>(n, k), Group::x, m), Group::x);
  return {lhs, coeff::eta(m, k), rhs};
}

// Pole specializations (y = e_0), returned as functions of x alone.

struct PoleCheck {
  RadialExpr value;
  Rational prefactor;
  RadialExpr target;
  bool holds() const { return value == target * prefactor; }
};

/// Delta_x^m ((x^(k+2m))_0) against fixed-y betaHat / 2 times Z_k(x, e_0) in R^(2m+2).
template <class E = RadialExpr>
PoleCheck clifford_at_pole(int m, int k) {
  const int dim = 2 * m + 2;
  RadialExpr value = at_unit_pole(laplacian_power(xyc_power_real<E>(dim, k + 2 * m), Group::x, m));
  Rational pre = (m == 0 ? Rational(1) : coeff::fixed_y_even(m, k)) / 2;
  return {value, pre, at_unit_pole(zonal_direct<E>(dim - 1, k))};
}

/// Delta_x^m ((x^(k+2m))_0) against fixed-y eta times K[Delta_x^m (x^-k)_0].
template <class E = RadialExpr>
PoleCheck eta_at_pole(int m, int k) {
  const int n = 2 * m + 1;
  RadialExpr value = at_unit_pole(laplacian_power(xyc_power_real<E>(n + 1, k + 2 * m), Group::x, m));
  RadialExpr target = at_unit_pole(kelvin(laplacian_power(kelvin_route_input<E>(n, k), Group::x, m), Group::x));
  return {value, coeff::eta_fixed_y(m, k), target};
}

template <class E = RadialExpr>
RouteResult<E> run_route(const RouteSpec& spec) {
  switch (spec.route) {
    case Route::direct: {
      E z = zonal_direct<E>(spec.n, spec.k);
      return {z, Rational(1), z};
    }
    case Route::ladder: return ladder_route<E>(spec.n, spec.k);
    case Route::laplacian_odd: return laplacian_route<E>(Parity::odd, spec.m, spec.k);
    case Route::laplacian_even: return laplacian_route<E>(Parity::even, spec.m, spec.k);
    case Route::clifford: return clifford_route<E>(spec.m, spec.k);
    case Route::kelvin: return kelvin_route<E>(spec.n, spec.k);
  }
  throw std::invalid_argument("unknown route");
}

}  // namespace zonal
