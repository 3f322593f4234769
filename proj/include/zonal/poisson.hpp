#pragma once

// The extended Poisson kernel of the unit ball in R^N, N = n + 1:
//   P(x, y) = (1 - |x|^2|y|^2) / (1 - 2<x,y> + |x|^2|y|^2)^(N/2) = sum_k Z_k(x, y),
// and the operator form (1 + (r/lambda) d/dr)(1 - 2rw + r^2)^(-lambda).

#include "zonal/gegenbauer.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace zonal::poisson {

namespace detail {
inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("poisson: dimension mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}
}  // namespace detail

inline double closed(const std::vector<double>& x, const std::vector<double>& y) {
  const double N = double(x.size());
  const double s = detail::dot(x, y);
  const double r2 = detail::dot(x, x) * detail::dot(y, y);
  const double den = 1 - 2 * s + r2;
  if (den <= 0) throw std::domain_error("poisson kernel pole");
  return (1 - r2) / std::pow(den, N / 2);
}

/// Partial sum Z_0 + ... + Z_{terms-1}. Convergence needs |x||y| < 1.
inline double series(const std::vector<double>& x, const std::vector<double>& y, int terms) {
  const int n = int(x.size()) - 1;
  if (n < 1) throw std::invalid_argument("poisson series needs dimension >= 2");
  const double s = detail::dot(x, y);
  const double r = std::sqrt(detail::dot(x, x) * detail::dot(y, y));
  if (r >= 1) throw std::domain_error("poisson series diverges for |x||y| >= 1");
  if (r == 0) return terms > 0 ? 1.0 : 0.0;
  const double w = s / r;
  double sum = 0;
  for (int k = 0; k < terms; ++k) sum += zonal_value(n, k, w, r);
  return sum;
}

/// sum_e p_e(r) B^e with B = 1 - 2rw + r^2; p_e are polynomials in r (coefficient vectors)
/// and exponents e are kept symbolically as doubles.
class BPowerSum {
 public:
  explicit BPowerSum(double w) : w_(w) {}

  static BPowerSum power(double w, double e) {
    BPowerSum f(w);
    f.terms_[e] = {1.0};
    return f;
  }

  /// d/dr via p' B^e + p e B' B^(e-1), B' = 2r - 2w.
  BPowerSum derivative() const {
    BPowerSum out(w_);
    for (const auto& [e, p] : terms_) {
      std::vector<double> dp;
      for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(double(i) * p[i]);
      out.add(e, dp);
      std::vector<double> q(p.size() + 1, 0.0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] += -2 * w_ * e * p[i];
        q[i + 1] += 2 * e * p[i];
      }
      out.add(e - 1, q);
    }
    return out;
  }

  BPowerSum times_r(double c) const {
    BPowerSum out(w_);
    for (const auto& [e, p] : terms_) {
      std::vector<double> q(p.size() + 1, 0.0);
      for (std::size_t i = 0; i < p.size(); ++i) q[i + 1] = c * p[i];
      out.add(e, q);
    }
    return out;
  }

  BPowerSum plus(const BPowerSum& o) const {
    BPowerSum out = *this;
    for (const auto& [e, p] : o.terms_) out.add(e, p);
    return out;
  }

  double eval(double r) const {
    const double B = 1 - 2 * r * w_ + r * r;
    double sum = 0;
    for (const auto& [e, p] : terms_) {
      double v = 0;
      for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * r + *it;
      sum += v * std::pow(B, e);
    }
    return sum;
  }

 private:
  void add(double e, const std::vector<double>& p) {
    auto& dst = terms_[e];
    if (dst.size() < p.size()) dst.resize(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) dst[i] += p[i];
  }

  double w_;
  std::map<double, std::vector<double>> terms_;
};

struct OperatorCheck {
  double operator_side;
  double closed_side;
};

/// (1 + (r/lambda) d/dr)(1 - 2rw + r^2)^(-lambda) against (1 - r^2)/(1 - 2rw + r^2)^(lambda+1).
inline OperatorCheck operator_check(double r, double w, double lambda) {
  if (lambda <= 0) throw std::domain_error("operator check needs lambda > 0");
  const double B = 1 - 2 * r * w + r * r;
  if (B <= 0) throw std::domain_error("poisson kernel pole");
  BPowerSum g = BPowerSum::power(w, -lambda);
  BPowerSum op = g.plus(g.derivative().times_r(1 / lambda));
  return {op.eval(r), (1 - r * r) / std::pow(B, lambda + 1)};
}

/// Partial sums of the Gegenbauer generating function sum_k C_k^lambda(w) r^k.
inline double generating_partial(double r, double w, double lambda, int terms) {
  double sum = 0, rk = 1;
  for (int k = 0; k < terms; ++k, rk *= r) sum += gegenbauer_value(k, lambda, w) * rk;
  return sum;
}

}  // namespace zonal::poisson
