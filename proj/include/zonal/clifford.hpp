#pragma once

// The Clifford algebra R_n with generators e_1..e_n, e_i e_j + e_j e_i = -2 delta_ij.
// Blades are bitmasks (bit i-1 for e_i), coefficients are Rational or RadialExpr.
//
// Powers of the paravector product x y^c are handled twice: by full blade products
// (small n only) and by the pair form, where x y^c = s + v with s = <x, y> and
// v^2 = -(Q_x Q_y - s^2), so (s + v)^k = A_k + B_k v stays in span{1, v}.

#include "zonal/invariant_expr.hpp"
#include "zonal/radial_expr.hpp"
#include "zonal/ratnum.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zonal {

using Blade = std::uint32_t;

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
inline bool coeff_is_zero(const RadialExpr& c) { return c.is_zero(); }

/// Sign of e_A e_B = sign * e_{A xor B}: one factor -1 per transposition needed to
/// sort the generators, and one per shared generator (e_i^2 = -1).
inline int blade_sign(Blade a, Blade b) {
  int swaps = 0;
  for (Blade rest = a >> 1; rest; rest >>= 1) swaps += std::popcount(rest & b);
  swaps += std::popcount(a & b);
  return swaps % 2 ? -1 : 1;
}

inline int grade(Blade a) { return std::popcount(a); }

/// Generator indices (1-based) of a blade, ascending.
inline std::vector<int> blade_indices(Blade a) {
  std::vector<int> out;
  for (int i = 0; a; ++i, a >>= 1)
    if (a & 1) out.push_back(i + 1);
  return out;
}

template <class Coeff>
class Multivector {
 public:
  using Map = std::map<Blade, Coeff>;

  Multivector() = default;
  explicit Multivector(int n) : n_(n) {
    if (n < 0 || n > 20) throw std::invalid_argument("generator count out of range");
  }

  int n() const { return n_; }
  const Map& comps() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  const Coeff* find(Blade b) const {
    auto it = comps_.find(b);
    return it == comps_.end() ? nullptr : &it->second;
  }

  void add(Blade b, const Coeff& c) {
    if (b >> n_) throw std::invalid_argument("blade outside the algebra");
    if (coeff_is_zero(c)) return;
    auto [it, inserted] = comps_.try_emplace(b, c);
    if (!inserted) {
      it->second += c;
      if (coeff_is_zero(it->second)) comps_.erase(it);
    }
  }

  bool operator==(const Multivector& o) const { return n_ == o.n_ && comps_ == o.comps_; }

  void check_same(const Multivector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Multivector generator count mismatch");
  }

 private:
  int n_ = 0;
  Map comps_;
};

template <class C>
Multivector<C> mv_add(const Multivector<C>& a, const Multivector<C>& b) {
  a.check_same(b);
  Multivector<C> out = a;
  for (const auto& [blade, c] : b.comps()) out.add(blade, c);
  return out;
}

template <class C>
Multivector<C> mv_scale(const Multivector<C>& a, const Rational& s) {
  Multivector<C> out(a.n());
  for (const auto& [blade, c] : a.comps()) out.add(blade, c * s);
  return out;
}

template <class C>
Multivector<C> mv_sub(const Multivector<C>& a, const Multivector<C>& b) {
  return mv_add(a, mv_scale(b, Rational(-1)));
}

template <class C>
Multivector<C> mv_mul(const Multivector<C>& a, const Multivector<C>& b) {
  a.check_same(b);
  Multivector<C> out(a.n());
  for (const auto& [ba, ca] : a.comps())
    for (const auto& [bb, cb] : b.comps()) {
      C prod = ca * cb;
      if (blade_sign(ba, bb) < 0) prod = -prod;
      out.add(ba ^ bb, prod);
    }
  return out;
}

/// Multiplies every coefficient by a scalar field (or scalar) c.
template <class C>
Multivector<C> mv_times_coeff(const Multivector<C>& a, const C& c) {
  Multivector<C> out(a.n());
  for (const auto& [blade, v] : a.comps()) out.add(blade, v * c);
  return out;
}

/// Clifford conjugation: e_i -> -e_i extended as an anti-automorphism, so a grade-g
/// blade picks up (-1)^(g(g+1)/2).
template <class C>
Multivector<C> conjugate(const Multivector<C>& a) {
  Multivector<C> out(a.n());
  for (const auto& [blade, c] : a.comps()) {
    int g = grade(blade);
    out.add(blade, (g * (g + 1) / 2) % 2 ? C(-c) : c);
  }
  return out;
}

template <class C>
Multivector<C> mv_power(const Multivector<C>& a, int k, const C& one) {
  if (k < 0) throw std::domain_error("mv_power needs k >= 0");
  Multivector<C> out(a.n());
  out.add(0, one);
  for (int i = 0; i < k; ++i) out = mv_mul(out, a);
  return out;
}

/// Scalar part, or `zero` when absent.
template <class C>
C real_part(const Multivector<C>& a, const C& zero) {
  const C* c = a.find(0);
  return c ? *c : zero;
}

/// Constant paravector x_0 + sum x_i e_i from n + 1 coordinates.
inline Multivector<Rational> paravector(const std::vector<Rational>& coords) {
  if (coords.empty()) throw std::invalid_argument("paravector needs at least one coordinate");
  Multivector<Rational> out(int(coords.size()) - 1);
  for (std::size_t i = 0; i < coords.size(); ++i) out.add(i == 0 ? 0 : Blade(1) << (i - 1), coords[i]);
  return out;
}

/// The identity paravector field x_0 + sum x_i e_i over group g of a RadialExpr space.
inline Multivector<RadialExpr> paravector_field(int nx, int ny, Group g) {
  const int count = g == Group::x ? nx : ny;
  if (count < 1) throw std::invalid_argument("paravector field needs at least one coordinate");
  Multivector<RadialExpr> out(count - 1);
  for (int i = 0; i < count; ++i)
    out.add(i == 0 ? 0 : Blade(1) << (i - 1), RadialExpr::coordinate(nx, ny, g, i));
  return out;
}

// --- pair form for powers of x y^c -------------------------------------------------

/// s + v with v^2 = -b2.
template <class C>
struct ParavectorPower {
  C a;
  C b2;

  /// (A_k, B_k) with (s + v)^k = A_k + B_k v, by (A + B v)(s + v) = (A s - B b2) + (A + B s) v.
  std::pair<C, C> power(int k, const C& one) const {
    if (k < 0) throw std::domain_error("ParavectorPower::power needs k >= 0");
    C A = one, B = one * Rational(0);
    for (int i = 0; i < k; ++i) {
      C nA = A * a - B * b2;
      C nB = A + B * a;
      A = std::move(nA);
      B = std::move(nB);
    }
    return {A, B};
  }
};

template <class E>
ParavectorPower<E> xyc_pair(int dim) {
  using F = ExprFactory<E>;
  E s = F::dot(dim);
  return {s, F::norm_power(dim, Group::x, 2) * F::norm_power(dim, Group::y, 2) - s * s};
}

/// ((x y^c)^k)_0 by the binomial expansion sum_h C(k, 2h) s^(k-2h) (s^2 - Q_x Q_y)^h.
/// Negative k gives ((x y^c)^|k|)_0 (Q_x Q_y)^(-|k|).
template <class E = RadialExpr>
E xyc_power_real(int dim, int k) {
  using F = ExprFactory<E>;
  const int kk = k < 0 ? -k : k;
  const E s = F::dot(dim);
  const E w = s * s - F::norm_power(dim, Group::x, 2) * F::norm_power(dim, Group::y, 2);
  E out = F::constant(dim, 0);
  E wpow = F::constant(dim, 1);
  for (int h = 0; 2 * h <= kk; ++h) {
    out += pow(s, kk - 2 * h) * wpow * binomial(kk, 2 * h);
    wpow = wpow * w;
  }
  if (k < 0) out = out * F::norm_power(dim, Group::x, 2 * k) * F::norm_power(dim, Group::y, 2 * k);
  return out;
}

/// ((x y^c)^k)'_s, the coefficient of v: sum_h C(k, 2h+1) s^(k-1-2h) (s^2 - Q_x Q_y)^h.
/// Zero for k = 0.
template <class E = RadialExpr>
E xyc_spherical_derivative(int dim, int k) {
  if (k < 0) throw std::domain_error("xyc_spherical_derivative needs k >= 0");
  using F = ExprFactory<E>;
  const E s = F::dot(dim);
  const E w = s * s - F::norm_power(dim, Group::x, 2) * F::norm_power(dim, Group::y, 2);
  E out = F::constant(dim, 0);
  E wpow = F::constant(dim, 1);
  for (int h = 0; 2 * h + 1 <= k; ++h) {
    out += pow(s, k - 1 - 2 * h) * wpow * binomial(k, 2 * h + 1);
    wpow = wpow * w;
  }
  return out;
}

// --- Cauchy-Riemann operators ----------------------------------------------------

enum class CrOperator { Dirac, D, Dbar };

inline const char* cr_name(CrOperator w) {
  switch (w) {
    case CrOperator::Dirac: return "Dirac";
    case CrOperator::D: return "D";
    case CrOperator::Dbar: return "Dbar";
  }
  return "?";
}

/// Fields live on x_0..x_n (group x, nx = n + 1). Dirac = sum_i e_i d/dx_i acting from
/// the left; D = d/dx_0 - Dirac, Dbar = d/dx_0 + Dirac.
inline Multivector<RadialExpr> cr_operators(const Multivector<RadialExpr>& f, CrOperator which) {
  const int n = f.n();
  for (const auto& [blade, c] : f.comps())
    if (c.nx() != n + 1) throw std::invalid_argument("cr_operators: field needs n + 1 coordinates in x");
  Multivector<RadialExpr> dirac(n);
  for (int i = 1; i <= n; ++i) {
    const Blade ei = Blade(1) << (i - 1);
    for (const auto& [blade, c] : f.comps()) {
      RadialExpr d = partial(c, Group::x, i);
      if (blade_sign(ei, blade) < 0) d = -d;
      dirac.add(ei ^ blade, d);
    }
  }
  if (which == CrOperator::Dirac) return dirac;
  Multivector<RadialExpr> d0(n);
  for (const auto& [blade, c] : f.comps()) d0.add(blade, partial(c, Group::x, 0));
  return which == CrOperator::D ? mv_sub(d0, dirac) : mv_add(d0, dirac);
}

inline Multivector<RadialExpr> mv_laplacian(const Multivector<RadialExpr>& f, Group g = Group::x) {
  Multivector<RadialExpr> out(f.n());
  for (const auto& [blade, c] : f.comps()) out.add(blade, laplacian(c, g));
  return out;
}

struct MonogenicityResult {
  int n = 0, m = 0, k = 0;
  bool d_vanishes = false;
  bool dbar_vanishes = false;
  Multivector<RadialExpr> d_image, dbar_image;  // kept for witnesses
};

/// Applies Delta^m (m = (n-1)/2) to the paravector power x^k and reports which of
/// D, Dbar annihilates the result.
inline MonogenicityResult monogenicity_check(int k, int n) {
  if (n < 1 || n % 2 == 0) throw std::domain_error("monogenicity_check needs odd n");
  if (k < 0) throw std::domain_error("monogenicity_check needs k >= 0");
  const int nx = n + 1, ny = 0;
  const int m = (n - 1) / 2;
  auto x = paravector_field(nx, ny, Group::x);
  auto f = mv_power(x, k, RadialExpr::constant(nx, ny, 1));
  for (int i = 0; i < m; ++i) f = mv_laplacian(f);
  MonogenicityResult r;
  r.n = n;
  r.m = m;
  r.k = k;
  r.d_image = cr_operators(f, CrOperator::D);
  r.dbar_image = cr_operators(f, CrOperator::Dbar);
  r.d_vanishes = r.d_image.is_zero();
  r.dbar_vanishes = r.dbar_image.is_zero();
  return r;
}

}  // namespace zonal
