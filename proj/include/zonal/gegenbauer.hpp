#pragma once

// Exact Gegenbauer and Chebyshev polynomials as coefficient vectors, and their lift
// to zonal harmonics Z_k(x, y) = ((k + lambda)/lambda) C_k^lambda(w) (|x||y|)^k.

#include "zonal/invariant_expr.hpp"
#include "zonal/ratnum.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zonal {

/// Coefficients of t^0 .. t^d.
using CoeffVec = std::vector<Rational>;

struct GegenbauerPoly {
  int degree = 0;
  Rational lambda;  // 0 marks the Chebyshev T_k family
  CoeffVec coeffs;

  bool is_chebyshev() const { return lambda == 0; }
};

// --- coefficient-vector arithmetic -------------------------------------------------

inline CoeffVec trim(CoeffVec v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

inline CoeffVec add(const CoeffVec& a, const CoeffVec& b) {
  CoeffVec out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return trim(std::move(out));
}

inline CoeffVec scale(const CoeffVec& a, const Rational& c) {
  CoeffVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
  return trim(std::move(out));
}

inline CoeffVec sub(const CoeffVec& a, const CoeffVec& b) { return add(a, scale(b, -1)); }

inline CoeffVec times_t(const CoeffVec& a) {
  if (a.empty()) return {};
  CoeffVec out(a.size() + 1);
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

/// (1 - t^2) * a
inline CoeffVec times_one_minus_t2(const CoeffVec& a) { return sub(a, times_t(times_t(a))); }

inline CoeffVec derivative(const CoeffVec& a) {
  if (a.size() <= 1) return {};
  CoeffVec out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * long(i);
  return trim(std::move(out));
}

inline bool equal(const CoeffVec& a, const CoeffVec& b) { return trim(a) == trim(b); }

// --- constructors ------------------------------------------------------------------

/// C_k^lambda from the explicit sum over j of
/// (-1)^j Gamma(k-j+lambda) / (Gamma(lambda) j! (k-2j)!) (2t)^(k-2j).
inline GegenbauerPoly gegenbauer(int k, const Rational& lambda) {
  if (k < 0) throw std::domain_error("gegenbauer: negative degree");
  if (lambda == 0) throw std::domain_error("gegenbauer: lambda = 0 is the Chebyshev family, use chebyshev_T");
  if (lambda <= Rational(-1, 2)) throw std::domain_error("gegenbauer: lambda must exceed -1/2");
  GegenbauerPoly p{k, lambda, CoeffVec(static_cast<std::size_t>(k) + 1)};
  for (int j = 0; 2 * j <= k; ++j) {
    Rational c = gamma_ratio(Rational(k - j) + lambda, lambda) / (factorial(j) * factorial(k - 2 * j));
    c *= rpow(Rational(2), k - 2 * j);
    if (j % 2) c = -c;
    p.coeffs[static_cast<std::size_t>(k - 2 * j)] = c;
  }
  return p;
}

/// Empty (zero) polynomial for negative degree; identities use C_{-1} = C_{-2} = 0.
inline CoeffVec gegenbauer_coeffs(int k, const Rational& lambda) {
  if (k < 0) return {};
  return gegenbauer(k, lambda).coeffs;
}

/// T_k by T_{j+1} = 2t T_j - T_{j-1}.
inline GegenbauerPoly chebyshev_T(int k) {
  if (k < 0) throw std::domain_error("chebyshev_T: negative degree");
  CoeffVec prev{1}, cur{0, 1};
  if (k == 0) return {0, 0, prev};
  for (int j = 1; j < k; ++j) {
    CoeffVec next = sub(scale(times_t(cur), 2), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.resize(static_cast<std::size_t>(k) + 1);
  return {k, 0, cur};
}

/// Three-term recurrence in the degree for |t| <= 1, Horner on the coefficients otherwise.
inline double eval_float(const GegenbauerPoly& p, double t) {
  if (std::abs(t) > 1) {
    double v = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) v = v * t + it->get_d();
    return v;
  }
  const double lam = p.lambda.get_d();
  if (p.degree == 0) return 1.0;
  double prev = 1.0;
  double cur = p.is_chebyshev() ? t : 2 * lam * t;
  for (int j = 1; j < p.degree; ++j) {
    double next = p.is_chebyshev() ? 2 * t * cur - prev
                                   : (2 * (j + lam) * t * cur - (j + 2 * lam - 1) * prev) / (j + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// C_k^lambda(t) in double precision without building the coefficient vector.
inline double gegenbauer_value(int k, double lambda, double t) {
  if (k == 0) return 1.0;
  double prev = 1.0, cur = 2 * lambda * t;
  for (int j = 1; j < k; ++j) {
    double next = (2 * (j + lambda) * t * cur - (j + 2 * lambda - 1) * prev) / (j + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

inline double chebyshev_value(int k, double t) {
  if (k == 0) return 1.0;
  double prev = 1.0, cur = t;
  for (int j = 1; j < k; ++j) {
    double next = 2 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// lambda = (n - 1)/2 for R^(n+1).
inline Rational zonal_order(int n) { return make_rational(n - 1, 2); }

/// Numeric Z_k in R^(n+1) from w and r = |x||y|.
inline double zonal_value(int n, int k, double w, double r) {
  if (k == 0) return 1.0;
  if (n == 1) return 2 * chebyshev_value(k, w) * std::pow(r, k);
  double lam = (n - 1) / 2.0;
  return (k + lam) / lam * gegenbauer_value(k, lam, w) * std::pow(r, k);
}

// --- identity suite ----------------------------------------------------------------
// Each returns (lhs, rhs) coefficient vectors of one identity at the given parameters.

struct IdentitySides {
  CoeffVec lhs, rhs;
  bool holds() const { return equal(lhs, rhs); }
};

/// d/dt C_k^lambda = 2 lambda C_{k-1}^{lambda+1}
inline IdentitySides identity_derivative(int k, const Rational& lam) {
  return {derivative(gegenbauer_coeffs(k, lam)), scale(gegenbauer_coeffs(k - 1, lam + 1), 2 * lam)};
}

/// t C_{k-1}^{lambda+1} = k/(2(k+lambda)) C_k^{lambda+1} + (k+2lambda)/(2(k+lambda)) C_{k-2}^{lambda+1}
inline IdentitySides identity_recursion(int k, const Rational& lam) {
  Rational den = 2 * (Rational(k) + lam);
  return {times_t(gegenbauer_coeffs(k - 1, lam + 1)),
          add(scale(gegenbauer_coeffs(k, lam + 1), Rational(k) / den),
              scale(gegenbauer_coeffs(k - 2, lam + 1), (Rational(k) + 2 * lam) / den))};
}

/// 4 lambda (l+lambda+1)(1-t^2) C_l^{lambda+1} = (l+2lambda)(l+2lambda+1) C_l^lambda - (l+1)(l+2) C_{l+2}^lambda
inline IdentitySides identity_one_minus_t2(int l, const Rational& lam) {
  Rational lhs_c = 4 * lam * (Rational(l) + lam + 1);
  return {scale(times_one_minus_t2(gegenbauer_coeffs(l, lam + 1)), lhs_c),
          sub(scale(gegenbauer_coeffs(l, lam), (Rational(l) + 2 * lam) * (Rational(l) + 2 * lam + 1)),
              scale(gegenbauer_coeffs(l + 2, lam), Rational((l + 1) * (l + 2))))};
}

/// ((lambda+m)/lambda) C_m^lambda = C_m^{lambda+1} - C_{m-2}^{lambda+1}
inline IdentitySides identity_order_raise(int m, const Rational& lam) {
  return {scale(gegenbauer_coeffs(m, lam), (lam + m) / lam),
          sub(gegenbauer_coeffs(m, lam + 1), gegenbauer_coeffs(m - 2, lam + 1))};
}

/// 2 lambda t C_{k-1}^{lambda+1} - k C_k^lambda = 2 lambda C_{k-2}^{lambda+1}
inline IdentitySides identity_euler(int k, const Rational& lam) {
  return {sub(scale(times_t(gegenbauer_coeffs(k - 1, lam + 1)), 2 * lam), scale(gegenbauer_coeffs(k, lam), Rational(k))),
          scale(gegenbauer_coeffs(k - 2, lam + 1), 2 * lam)};
}

/// 2 T_k = C_k^1 - C_{k-2}^1 (k >= 2; k = 1 also holds with C_{-1} = 0; k = 0 reads 2 = 1 and is excluded)
inline IdentitySides identity_chebyshev(int k) {
  return {scale(chebyshev_T(k).coeffs, 2), sub(gegenbauer_coeffs(k, 1), gegenbauer_coeffs(k - 2, 1))};
}

/// Expansion C_{k+2m}^lambda = sum_j alpha_j C_{k+2(m-j)}^{lambda+m}, obtained by applying
/// C_d^mu = mu/(mu+d) (C_d^{mu+1} - C_{d-2}^{mu+1}) m times. Returns alpha_0..alpha_m.
inline std::vector<Rational> telescope_coefficients(const Rational& lam, int k, int m) {
  if (lam <= 0) throw std::domain_error("telescoping needs lambda > 0");
  // weights[j] multiplies C_{k+2m-2j}^{lam+step}
  std::vector<Rational> weights{Rational(1)};
  for (int step = 0; step < m; ++step) {
    Rational mu = lam + step;
    std::vector<Rational> next(weights.size() + 1);
    for (std::size_t j = 0; j < weights.size(); ++j) {
      int d = k + 2 * m - 2 * int(j);
      Rational f = mu / (mu + d);
      next[j] += weights[j] * f;
      next[j + 1] -= weights[j] * f;
    }
    weights = std::move(next);
  }
  return weights;
}

/// The same telescoping for 2 T_{k+2m}, starting from 2 T_d = C_d^1 - C_{d-2}^1 (m >= 1).
inline std::vector<Rational> telescope_chebyshev_coefficients(int k, int m) {
  if (m < 1) throw std::domain_error("Chebyshev telescoping needs m >= 1");
  std::vector<Rational> weights{Rational(1), Rational(-1)};
  for (int step = 1; step < m; ++step) {
    Rational mu(step);
    std::vector<Rational> next(weights.size() + 1);
    for (std::size_t j = 0; j < weights.size(); ++j) {
      int d = k + 2 * m - 2 * int(j);
      Rational f = mu / (mu + d);
      next[j] += weights[j] * f;
      next[j + 1] -= weights[j] * f;
    }
    weights = std::move(next);
  }
  return weights;
}

// --- lift to zonal harmonics ---------------------------------------------------------

/// sum_i coeffs[i] t^i evaluated at t = w with w^i (|x||y|)^deg = <x,y>^i (|x|^2|y|^2)^((deg-i)/2).
/// Only parity-matched coefficients may be nonzero, so no radial atoms remain.
template <class E>
E lift_in_w(const CoeffVec& coeffs, int deg, int dim) {
  using F = ExprFactory<E>;
  E out = F::constant(dim, 0);
  const E s = F::dot(dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    int rest = deg - int(i);
    if (rest < 0 || rest % 2) throw std::invalid_argument("lift_in_w: coefficient parity mismatch");
    out += pow(s, int(i)) * F::norm_power(dim, Group::x, rest) * F::norm_power(dim, Group::y, rest) * coeffs[i];
  }
  return out;
}

/// The R^(n+1) zonal formula in w and |x||y| written over R^dim variables. With
/// dim = n + 1 this is Z_k itself; other dims give the seeds of the Laplacian routes.
template <class E = RadialExpr>
E zonal_formula(int n, int k, int dim) {
  if (n < 1 || k < 0) throw std::domain_error("zonal formula needs n >= 1, k >= 0");
  if (k == 0) return ExprFactory<E>::constant(dim, 1);
  if (n == 1) return lift_in_w<E>(scale(chebyshev_T(k).coeffs, 2), k, dim);
  const Rational lam = zonal_order(n);
  return lift_in_w<E>(scale(gegenbauer(k, lam).coeffs, (Rational(k) + lam) / lam), k, dim);
}

/// Z_k in R^(n+1) as a polynomial; n = 1 uses 2 T_k for k >= 1 and Z_0 = 1.
template <class E = RadialExpr>
E zonal_direct(int n, int k) {
  return zonal_formula<E>(n, k, n + 1);
}

/// (|x||y|)^k C_k^lambda(w) in R^dim for any order lambda (not necessarily harmonic there).
template <class E = RadialExpr>
E gegenbauer_zonal_form(int k, const Rational& lam, int dim) {
  return lift_in_w<E>(gegenbauer(k, lam).coeffs, k, dim);
}

}  // namespace zonal
