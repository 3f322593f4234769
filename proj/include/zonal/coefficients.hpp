#pragma once

// Closed-form prefactors relating the zonal-harmonic constructions. Every Gamma
// factor is an integer-shift ratio, so all values are exact rationals.
//
// Conventions: alpha(m, lambda, k) is the last coefficient of the m-fold order-raising
// expansion of C^lambda_{k+2m}; c(N, j, l, k) is the eigenvalue of Delta^j on
// |x|^{2l} H_k in R^N; beta = alpha * c^2 is the factor picked up by
// (Delta_y Delta_x)^m on (|x||y|)^{k+2m} C^lambda_{k+2m}(w) in R^{2(lambda+m)+2}.

#include "zonal/ratnum.hpp"

#include <optional>
#include <stdexcept>

namespace zonal::coeff {

namespace detail {
inline void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}
}  // namespace detail

inline Rational alpha(int m, const Rational& lambda, int k) {
  detail::require(m >= 0 && k >= 0, "alpha needs m >= 0, k >= 0");
  detail::require(lambda > 0, "alpha needs lambda > 0");
  Rational v = gamma_ratio(lambda + m, lambda) * gamma_ratio(lambda + k + m + 1, lambda) /
               gamma_ratio(lambda + k + 2 * m + 1, lambda);
  return sign_pow(m) * v;
}

/// Chebyshev analogue: 2 T_{k+2m} = sum_j alpha_hat_j C^m_{k+2(m-j)}, last coefficient.
inline Rational alpha_hat(int m, int k) {
  detail::require(m >= 1 && k >= 0, "alpha_hat needs m >= 1, k >= 0");
  return sign_pow(m) * factorial(m - 1) * gamma_ratio(Rational(k + m + 1), Rational(1)) /
         gamma_ratio(Rational(k + 2 * m), Rational(1));
}

/// Delta^j (|x|^{2l} H_k) = c |x|^{2l-2j} H_k in R^N. N may be any positive integer.
inline Rational c(int N, int j, int l, int k) {
  detail::require(N >= 1 && j >= 0 && l >= 0 && k >= 0, "c needs N >= 1 and j, l, k >= 0");
  if (j > l) return 0;
  const Rational half_n = make_rational(N, 2);
  return rpow(Rational(4), j) * gamma_ratio(Rational(l + 1), Rational(l - j + 1)) *
         gamma_ratio(Rational(k + l) + half_n, Rational(k + l - j) + half_n);
}

/// alpha_m^{m,lambda} * (c^{2(lambda+m)+2}_{m,m,k})^2; lambda must make the dimension integral.
inline Rational beta(int m, const Rational& lambda, int k) {
  Rational N = 2 * (lambda + m) + 2;
  detail::require(is_integer(N), "beta needs 2(lambda + m) + 2 to be an integer dimension");
  Rational cc = c(int(N.get_num().get_si()), m, m, k);
  return alpha(m, lambda, k) * cc * cc;
}

/// The closed form printed alongside beta, with a factor Gamma(m-1)^2. It has a pole at
/// m = 1 (returns nullopt) and differs from the composition for m >= 2.
inline std::optional<Rational> beta_printed(int m, const Rational& lambda, int k) {
  detail::require(m >= 0 && k >= 0 && lambda > 0, "beta_printed domain");
  if (m <= 1) return std::nullopt;
  Rational g = factorial(m - 2);
  return sign_pow(m) * rpow(Rational(4), 2 * m) * g * g * gamma_ratio(lambda + m, lambda) *
         gamma_ratio(lambda + k + 2 * m + 1, lambda + k + m + 1);
}

/// (Delta_y Delta_x)^m Z^{1/2}_{k+2m} = betaTilde * Z_k in R^{2m+3}, from the composition.
inline Rational beta_tilde(int m, int k) {
  detail::require(m >= 0 && k >= 0, "betaTilde needs m >= 0, k >= 0");
  if (m == 0) return 1;
  return Rational(2 * k + 4 * m + 1) * (2 * m + 1) / (2 * k + 2 * m + 1) * beta(m, Rational(1, 2), k);
}

/// The printed closed form for betaTilde, kept for comparison with the composition.
inline Rational beta_tilde_printed(int m, int k) {
  detail::require(m >= 0 && k >= 0, "betaTilde needs m >= 0, k >= 0");
  Rational num = factorial(m) * factorial(2 * m + 1) * factorial(k + m) * factorial(2 * k + 4 * m);
  Rational den = Rational(2 * (k + 2 * m)) * (2 * k + 2 * m + 1) * (2 * k + 2 * m + 1) * factorial(k + 2 * m) *
                 factorial(2 * k + 2 * m);
  if (den == 0) throw std::domain_error("betaTilde printed form has a zero denominator at k = m = 0");
  return sign_pow(m) * num / den;
}

/// (Delta_y Delta_x)^m Z^0_{k+2m} = betaHat * Z_k in R^{2m+2}, from the composition.
inline Rational beta_hat(int m, int k) {
  detail::require(m >= 0 && k >= 0, "betaHat needs m >= 0, k >= 0");
  if (m == 0) return 1;
  Rational cc = c(2 * m + 2, m, m, k);
  return alpha_hat(m, k) * cc * cc * m / (k + m);
}

/// The printed closed form for betaHat.
inline Rational beta_hat_printed(int m, int k) {
  detail::require(m >= 0 && k >= 0 && k + m > 0, "betaHat printed form needs k + m > 0");
  Rational f = factorial(m);
  return sign_pow(m) * rpow(Rational(4), 2 * m) * (k + 2 * m) * f * f * f * factorial(k + 2 * m) /
         (Rational(k + m) * factorial(k + m));
}

inline Rational eta(int m, int k) {
  detail::require(m >= 0 && k >= 1, "eta needs m >= 0, k >= 1");
  Rational f = factorial(m);
  return rpow(Rational(4), 2 * m) * (k + 2 * m) * f * f * f * factorial(k + 2 * m) /
         (Rational(k) * factorial(2 * m) * factorial(k + m));
}

/// eta when y is fixed on the unit sphere and only Delta_x acts.
inline Rational eta_fixed_y(int m, int k) {
  detail::require(m >= 0 && k >= 1, "eta needs m >= 0, k >= 1");
  Rational f = factorial(m);
  return rpow(Rational(4), m) * (k + 2 * m) * f * f / (Rational(k) * factorial(2 * m));
}

// Prefactors with only Delta_x^m acting (y held fixed on the unit sphere).

inline Rational fixed_y_general(int m, const Rational& lambda) {
  detail::require(m >= 0 && lambda > 0, "fixed-y prefactor needs m >= 0, lambda > 0");
  return sign_pow(m) * rpow(Rational(4), m) * gamma_ratio(lambda + m, lambda) * factorial(m);
}

inline Rational fixed_y_odd(int m, int k) {
  detail::require(m >= 0 && k >= 0, "fixed-y prefactor needs m, k >= 0");
  return sign_pow(m) * make_rational(2 * k + 4 * m + 1, 2 * k + 2 * m + 1) * factorial(2 * m + 1);
}

inline Rational fixed_y_even(int m, int k) {
  detail::require(m >= 0 && k >= 0 && k + m > 0, "fixed-y prefactor needs k + m > 0");
  Rational f = factorial(m);
  return sign_pow(m) * rpow(Rational(4), m) * make_rational(k + 2 * m, k + m) * f * f;
}

/// K[Delta_x^m ((x y^-1)^-k)_0] = kelvin_constant * Z_k in R^{n+1}, n = 2m + 1.
inline Rational kelvin_constant(int n, int k) {
  detail::require(n >= 1 && n % 2 == 1, "kelvin constant needs odd n");
  detail::require(k >= 1, "kelvin constant needs k >= 1");
  const int m = (n - 1) / 2;
  return sign_pow(m) * factorial(n - 1) * make_rational(k, 2 * k + n - 1);
}

/// The constant that K[Delta_x^m ((x y^-1)^-k)_0] actually carries, (-1)^m 4^m (m!)^2 k / (2(k+m)).
/// It is kelvin_constant times 4^m (m!)^2 / (2m)!, so the two agree only for n = 1.
inline Rational kelvin_constant_corrected(int n, int k) {
  detail::require(n >= 1 && n % 2 == 1, "kelvin constant needs odd n");
  detail::require(k >= 1, "kelvin constant needs k >= 1");
  const int m = (n - 1) / 2;
  Rational f = factorial(m);
  return sign_pow(m) * rpow(Rational(4), m) * f * f * make_rational(k, 2 * (k + m));
}

/// betaHat / (2 kelvin_constant_corrected) = 4^m (k+2m) m! (k+2m)! / (k (k+m)!).
inline Rational eta_corrected(int m, int k) {
  detail::require(m >= 0 && k >= 1, "eta needs m >= 0, k >= 1");
  return rpow(Rational(4), m) * (k + 2 * m) * factorial(m) * factorial(k + 2 * m) / (Rational(k) * factorial(k + m));
}

/// Fixed-y version: (fixed-y betaHat) / (2 kelvin_constant_corrected) = (k + 2m)/k.
inline Rational eta_fixed_y_corrected(int m, int k) {
  detail::require(m >= 0 && k >= 1, "eta needs m >= 0, k >= 1");
  return make_rational(k + 2 * m, k);
}

/// Ladder factor: (K <y, grad_x> K)^k [1] = ladder * Z_k with lambda = (n - 1)/2.
inline Rational ladder(int n, int k) {
  detail::require(n >= 2 && k >= 0, "ladder needs n >= 2, k >= 0");
  Rational lam = make_rational(n - 1, 2);
  return sign_pow(k) * factorial(k) * lam / (lam + k);
}

}  // namespace zonal::coeff
