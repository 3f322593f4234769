#pragma once

// Exact expressions in two variable groups x = (x_0..x_{nx-1}), y = (y_0..y_{ny-1}):
// finite Q-linear combinations of x^a y^b |x|^px |y|^py with integer radial powers.
//
// Canonical form. Terms are split into four classes by (px mod 2, py mod 2). Inside a
// class every term carries the same radial pair (px, py), so the class reads
// P(x, y) |x|^px |y|^py with P a polynomial. Nonnegative radial powers are folded into
// P until px, py lie in {0, 1}; a negative px (py) is kept only while P is not exactly
// divisible by Q_x = sum x_i^2 (Q_y). Q_x and Q_y are coprime irreducibles and |x|, |y|
// are not rational functions, so two expressions agree as functions on
// (R^nx \ 0) x (R^ny \ 0) iff their canonical term lists are identical.

#include "zonal/ratnum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace zonal {

enum class Group { x, y };

inline const char* group_name(Group g) { return g == Group::x ? "x" : "y"; }

inline constexpr int kMaxVars = 16;

struct TermKey {
  std::array<std::uint8_t, kMaxVars> xexp{};
  std::array<std::uint8_t, kMaxVars> yexp{};
  std::int32_t px = 0;
  std::int32_t py = 0;

  auto& exps(Group g) { return g == Group::x ? xexp : yexp; }
  const auto& exps(Group g) const { return g == Group::x ? xexp : yexp; }
  std::int32_t& radial(Group g) { return g == Group::x ? px : py; }
  std::int32_t radial(Group g) const { return g == Group::x ? px : py; }

  // Lexicographic on (xexp, yexp, px, py).
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

static_assert(sizeof(TermKey) == 40, "TermKey is hashed as five 64-bit words");

struct TermKeyHash {
  std::size_t operator()(const TermKey& k) const noexcept {
    std::uint64_t w[5];
    std::memcpy(w, &k, sizeof w);
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t v : w) {
      v *= 0xbf58476d1ce4e5b9ULL;
      v ^= v >> 31;
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

using Accum = std::unordered_map<TermKey, Rational, TermKeyHash>;

inline void accumulate(Accum& acc, const TermKey& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

inline std::uint8_t bump(std::uint8_t e, int by) {
  int v = int(e) + by;
  if (v < 0 || v > 255) throw std::overflow_error("monomial exponent out of range");
  return static_cast<std::uint8_t>(v);
}

inline int degree(const TermKey& k, Group g, int nvars) {
  int d = 0;
  const auto& e = k.exps(g);
  for (int i = 0; i < nvars; ++i) d += e[i];
  return d;
}

// Monomials of Q^j = (sum_i v_i^2)^j in nvars variables with multinomial weights.
inline std::vector<std::pair<std::array<std::uint8_t, kMaxVars>, Rational>> quadric_power(
    int nvars, int j) {
  std::vector<std::pair<std::array<std::uint8_t, kMaxVars>, Rational>> out;
  if (j == 0) {
    out.push_back({{}, Rational(1)});
    return out;
  }
  if (nvars == 0) return out;
  std::map<std::array<std::uint8_t, kMaxVars>, Rational> cur;
  cur[{}] = 1;
  for (int step = 0; step < j; ++step) {
    std::map<std::array<std::uint8_t, kMaxVars>, Rational> next;
    for (const auto& [e, c] : cur)
      for (int i = 0; i < nvars; ++i) {
        auto f = e;
        f[i] = bump(f[i], 2);
        next[f] += c;
      }
    cur = std::move(next);
  }
  out.assign(cur.begin(), cur.end());
  return out;
}

// Exact division of P by the quadric of group g, or nullopt when it does not divide.
// Writes P = sum_e p_e v0^e with p_e free of v0 and solves P = (v0^2 + R) D top down:
// d_{e-2} = p_e - R d_e, then requires p_1 = R d_1 and p_0 = R d_0.
inline std::optional<Accum> divide_by_quadric(const Accum& poly, Group g, int nvars) {
  if (poly.empty()) return Accum{};
  if (nvars == 0) return std::nullopt;
  std::map<int, Accum> strata;
  for (const auto& [k, c] : poly) {
    TermKey r = k;
    int e = r.exps(g)[0];
    r.exps(g)[0] = 0;
    strata[e].emplace(r, c);
  }
  const int top = strata.rbegin()->first;
  if (top < 2) return std::nullopt;

  auto times_rest = [&](const Accum& d) {
    Accum out;
    out.reserve(d.size() * std::max(1, nvars - 1));
    for (const auto& [k, c] : d)
      for (int i = 1; i < nvars; ++i) {
        TermKey r = k;
        r.exps(g)[i] = bump(r.exps(g)[i], 2);
        accumulate(out, r, c);
      }
    return out;
  };
  auto minus = [](Accum a, const Accum& b) {
    for (const auto& [k, c] : b) accumulate(a, k, -c);
    return a;
  };
  static const Accum kEmpty;
  auto stratum = [&](int e) -> const Accum& {
    auto it = strata.find(e);
    return it == strata.end() ? kEmpty : it->second;
  };

  std::vector<Accum> d(static_cast<std::size_t>(top - 1));
  for (int j = top - 2; j >= 0; --j) {
    if (j + 2 <= top - 2)
      d[j] = minus(stratum(j + 2), times_rest(d[j + 2]));
    else
      d[j] = stratum(j + 2);
  }
  for (int e = 0; e <= 1 && e <= top - 2; ++e)
    if (!minus(stratum(e), times_rest(d[e])).empty()) return std::nullopt;
  if (top - 2 < 1 && !stratum(1).empty()) return std::nullopt;

  Accum quotient;
  for (int j = 0; j <= top - 2; ++j)
    for (const auto& [k, c] : d[j]) {
      TermKey r = k;
      r.exps(g)[0] = static_cast<std::uint8_t>(j);
      quotient.emplace(r, c);
    }
  return quotient;
}

}  // namespace detail

/// Extension-field value a + b sqrt(Qx) + c sqrt(Qy) + d sqrt(Qx Qy) at a rational point.
struct ExtendedValue {
  Rational a, b, c, d;
  bool operator==(const ExtendedValue&) const = default;
};

class RadialExpr {
 public:
  using Term = std::pair<TermKey, Rational>;

  RadialExpr() = default;
  RadialExpr(int nx, int ny) : nx_(nx), ny_(ny) { check_dims(nx, ny); }

  static RadialExpr constant(int nx, int ny, const Rational& c) {
    RadialExpr e(nx, ny);
    if (c != 0) e.terms_.push_back({TermKey{}, c});
    return e;
  }

  static RadialExpr coordinate(int nx, int ny, Group g, int i) {
    RadialExpr e(nx, ny);
    if (i < 0 || i >= e.count(g)) throw std::out_of_range("coordinate index out of range");
    TermKey k;
    k.exps(g)[i] = 1;
    e.terms_.push_back({k, Rational(1)});
    return e;
  }

  /// <x, y>; needs nx == ny.
  static RadialExpr dot(int nx, int ny) {
    if (nx != ny) throw std::invalid_argument("dot product needs nx == ny");
    RadialExpr e(nx, ny);
    for (int i = 0; i < nx; ++i) {
      TermKey k;
      k.xexp[i] = 1;
      k.yexp[i] = 1;
      e.terms_.push_back({k, Rational(1)});
    }
    std::sort(e.terms_.begin(), e.terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    return e;
  }

  /// |x|^p (or |y|^p), canonicalized (even p >= 0 becomes a polynomial).
  static RadialExpr norm_power(int nx, int ny, Group g, int p) {
    detail::Accum acc;
    TermKey k;
    k.radial(g) = p;
    acc.emplace(k, Rational(1));
    return from_accum(nx, ny, std::move(acc));
  }

  static RadialExpr from_terms(int nx, int ny, std::span<const Term> terms) {
    check_dims(nx, ny);
    detail::Accum acc;
    for (const auto& [k, c] : terms) {
      check_key(nx, ny, k);
      detail::accumulate(acc, k, c);
    }
    return from_accum(nx, ny, std::move(acc));
  }

  static RadialExpr from_accum(int nx, int ny, detail::Accum acc) {
    RadialExpr e(nx, ny);
    e.terms_ = canonicalize(nx, ny, std::move(acc));
    return e;
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int count(Group g) const { return g == Group::x ? nx_ : ny_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const RadialExpr& o) const {
    check_same(o);
    return terms_ == o.terms_;
  }

  RadialExpr operator-() const {
    RadialExpr e = *this;
    for (auto& t : e.terms_) t.second = -t.second;
    return e;
  }

  friend RadialExpr operator+(const RadialExpr& a, const RadialExpr& b) {
    a.check_same(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    detail::Accum acc = a.accum();
    for (const auto& [k, c] : b.terms_) detail::accumulate(acc, k, c);
    return from_accum(a.nx_, a.ny_, std::move(acc));
  }
  friend RadialExpr operator-(const RadialExpr& a, const RadialExpr& b) { return a + (-b); }

  friend RadialExpr operator*(const RadialExpr& a, const RadialExpr& b) {
    a.check_same(b);
    detail::Accum acc;
    acc.reserve(a.size() * b.size());
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        TermKey k;
        for (int i = 0; i < kMaxVars; ++i) {
          k.xexp[i] = detail::bump(ka.xexp[i], kb.xexp[i]);
          k.yexp[i] = detail::bump(ka.yexp[i], kb.yexp[i]);
        }
        k.px = ka.px + kb.px;
        k.py = ka.py + kb.py;
        detail::accumulate(acc, k, ca * cb);
      }
    return from_accum(a.nx_, a.ny_, std::move(acc));
  }

  friend RadialExpr operator*(const RadialExpr& a, const Rational& c) {
    if (c == 0) return RadialExpr(a.nx_, a.ny_);
    RadialExpr e = a;
    for (auto& t : e.terms_) t.second *= c;
    return e;
  }
  friend RadialExpr operator*(const Rational& c, const RadialExpr& a) { return a * c; }

  RadialExpr& operator+=(const RadialExpr& o) { return *this = *this + o; }
  RadialExpr& operator-=(const RadialExpr& o) { return *this = *this - o; }
  RadialExpr& operator*=(const RadialExpr& o) { return *this = *this * o; }

  detail::Accum accum() const {
    detail::Accum acc;
    acc.reserve(terms_.size());
    for (const auto& [k, c] : terms_) acc.emplace(k, c);
    return acc;
  }

  void check_same(const RadialExpr& o) const {
    if (nx_ != o.nx_ || ny_ != o.ny_) throw std::invalid_argument("RadialExpr dimension mismatch");
  }

 private:
  static void check_dims(int nx, int ny) {
    if (nx < 0 || ny < 0 || nx > kMaxVars || ny > kMaxVars)
      throw std::invalid_argument("variable count out of range");
  }
  static void check_key(int nx, int ny, const TermKey& k) {
    for (int i = nx; i < kMaxVars; ++i)
      if (k.xexp[i] != 0) throw std::invalid_argument("x exponent beyond nx");
    for (int i = ny; i < kMaxVars; ++i)
      if (k.yexp[i] != 0) throw std::invalid_argument("y exponent beyond ny");
    if ((nx == 0 && k.px != 0) || (ny == 0 && k.py != 0))
      throw std::invalid_argument("radial power on an empty variable group");
  }

  static std::vector<Term> canonicalize(int nx, int ny, detail::Accum acc) {
    std::array<std::vector<Term>, 4> classes;
    for (auto& [k, c] : acc) {
      if (c == 0) continue;
      int slot = (k.px & 1) * 2 + (k.py & 1);
      classes[slot].push_back({k, std::move(c)});
    }
    std::vector<Term> out;
    for (auto& cls : classes) {
      if (cls.empty()) continue;
      std::int32_t minx = cls.front().first.px, miny = cls.front().first.py;
      for (const auto& t : cls) {
        minx = std::min(minx, t.first.px);
        miny = std::min(miny, t.first.py);
      }
      std::int32_t tx = minx >= 0 ? (minx & 1) : minx;
      std::int32_t ty = miny >= 0 ? (miny & 1) : miny;

      detail::Accum poly;
      bool uniform = true;
      for (const auto& t : cls)
        if (t.first.px != tx || t.first.py != ty) uniform = false;
      if (uniform) {
        poly.reserve(cls.size());
        for (auto& t : cls) {
          TermKey k = t.first;
          k.px = 0;
          k.py = 0;
          poly.emplace(k, std::move(t.second));
        }
      } else {
        std::map<int, decltype(detail::quadric_power(0, 0))> qx, qy;
        auto qpow = [&](auto& cache, int nvars, int j) -> const auto& {
          auto it = cache.find(j);
          if (it == cache.end()) it = cache.emplace(j, detail::quadric_power(nvars, j)).first;
          return it->second;
        };
        for (const auto& t : cls) {
          const auto& ex = qpow(qx, nx, (t.first.px - tx) / 2);
          const auto& ey = qpow(qy, ny, (t.first.py - ty) / 2);
          for (const auto& [ea, ca] : ex)
            for (const auto& [eb, cb] : ey) {
              TermKey k = t.first;
              k.px = 0;
              k.py = 0;
              for (int i = 0; i < nx; ++i) k.xexp[i] = detail::bump(k.xexp[i], ea[i]);
              for (int i = 0; i < ny; ++i) k.yexp[i] = detail::bump(k.yexp[i], eb[i]);
              detail::accumulate(poly, k, t.second * ca * cb);
            }
        }
      }
      while (tx < 0 && !poly.empty()) {
        auto q = detail::divide_by_quadric(poly, Group::x, nx);
        if (!q) break;
        poly = std::move(*q);
        tx += 2;
      }
      while (ty < 0 && !poly.empty()) {
        auto q = detail::divide_by_quadric(poly, Group::y, ny);
        if (!q) break;
        poly = std::move(*q);
        ty += 2;
      }
      for (auto& [k, c] : poly) {
        TermKey key = k;
        key.px = tx;
        key.py = ty;
        out.push_back({key, std::move(c)});
      }
    }
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    return out;
  }

  int nx_ = 0;
  int ny_ = 0;
  std::vector<Term> terms_;
};

inline RadialExpr pow(const RadialExpr& base, int e) {
  if (e < 0) throw std::domain_error("RadialExpr power with negative exponent");
  RadialExpr out = RadialExpr::constant(base.nx(), base.ny(), 1);
  RadialExpr b = base;
  while (e > 0) {
    if (e & 1) out = out * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return out;
}

/// Exact partial derivative along coordinate i of group g.
/// Uses d/dv_i |v|^a = a v_i |v|^(a-2) on the radial factor.
inline RadialExpr partial(const RadialExpr& f, Group g, int i) {
  if (i < 0 || i >= f.count(g)) throw std::out_of_range("partial: index out of range");
  detail::Accum acc;
  for (const auto& [k, c] : f.terms()) {
    int e = k.exps(g)[i];
    if (e > 0) {
      TermKey d = k;
      d.exps(g)[i] = static_cast<std::uint8_t>(e - 1);
      detail::accumulate(acc, d, c * e);
    }
    if (int p = k.radial(g); p != 0) {
      TermKey d = k;
      d.exps(g)[i] = detail::bump(d.exps(g)[i], 1);
      d.radial(g) = p - 2;
      detail::accumulate(acc, d, c * p);
    }
  }
  return RadialExpr::from_accum(f.nx(), f.ny(), std::move(acc));
}

/// Laplacian in group g. Per term m |v|^p with deg m = d:
/// Delta(m |v|^p) = (Delta m) |v|^p + p (2d + p + N - 2) m |v|^(p-2).
inline RadialExpr laplacian(const RadialExpr& f, Group g) {
  const int nvars = f.count(g);
  detail::Accum acc;
  acc.reserve(f.size() * 2);
  for (const auto& [k, c] : f.terms()) {
    const auto& e = k.exps(g);
    for (int i = 0; i < nvars; ++i)
      if (e[i] >= 2) {
        TermKey d = k;
        d.exps(g)[i] = static_cast<std::uint8_t>(e[i] - 2);
        detail::accumulate(acc, d, c * (int(e[i]) * (int(e[i]) - 1)));
      }
    if (int p = k.radial(g); p != 0) {
      int deg = detail::degree(k, g, nvars);
      long factor = long(p) * (2L * deg + p + nvars - 2);
      if (factor != 0) {
        TermKey d = k;
        d.radial(g) = p - 2;
        detail::accumulate(acc, d, c * factor);
      }
    }
  }
  return RadialExpr::from_accum(f.nx(), f.ny(), std::move(acc));
}

inline RadialExpr laplacian_power(RadialExpr f, Group g, int times) {
  for (int i = 0; i < times; ++i) f = laplacian(f, g);
  return f;
}

/// The directional derivative <y, grad_x> = sum_j y_j d/dx_j.
inline RadialExpr dir_deriv(const RadialExpr& f) {
  if (f.nx() != f.ny()) throw std::invalid_argument("dir_deriv needs nx == ny");
  detail::Accum acc;
  for (const auto& [k, c] : f.terms()) {
    for (int j = 0; j < f.nx(); ++j) {
      if (int e = k.xexp[j]; e > 0) {
        TermKey d = k;
        d.xexp[j] = static_cast<std::uint8_t>(e - 1);
        d.yexp[j] = detail::bump(d.yexp[j], 1);
        detail::accumulate(acc, d, c * e);
      }
    }
    if (k.px != 0) {
      for (int j = 0; j < f.nx(); ++j) {
        TermKey d = k;
        d.xexp[j] = detail::bump(d.xexp[j], 1);
        d.yexp[j] = detail::bump(d.yexp[j], 1);
        d.px = k.px - 2;
        detail::accumulate(acc, d, c * k.px);
      }
    }
  }
  return RadialExpr::from_accum(f.nx(), f.ny(), std::move(acc));
}

/// Kelvin inversion |v|^(1-n) f(v / |v|^2) in R^(n+1), n + 1 = variable count of g.
/// A term m |v|^p with deg m = d maps to m |v|^(1 - n - 2d - p).
inline RadialExpr kelvin(const RadialExpr& f, Group g = Group::x) {
  const int nvars = f.count(g);
  if (nvars == 0) throw std::invalid_argument("kelvin on an empty variable group");
  const int n = nvars - 1;
  detail::Accum acc;
  acc.reserve(f.size());
  for (const auto& [k, c] : f.terms()) {
    TermKey d = k;
    d.radial(g) = 1 - n - 2 * detail::degree(k, g, nvars) - k.radial(g);
    detail::accumulate(acc, d, c);
  }
  return RadialExpr::from_accum(f.nx(), f.ny(), std::move(acc));
}

/// Degree d with (monomial degree + radial power) = d on every term; nullopt if mixed or zero.
inline std::optional<int> homogeneous_degree(const RadialExpr& f, Group g) {
  std::optional<int> deg;
  for (const auto& [k, c] : f.terms()) {
    int d = detail::degree(k, g, f.count(g)) + k.radial(g);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

namespace detail {

inline Rational quadric_at(std::span<const Rational> pt) {
  Rational q(0);
  for (const auto& v : pt) q += v * v;
  return q;
}

inline Rational monomial_at(const std::array<std::uint8_t, kMaxVars>& e, std::span<const Rational> pt) {
  Rational v(1);
  for (std::size_t i = 0; i < pt.size(); ++i)
    if (e[i]) v *= rpow(pt[i], e[i]);
  return v;
}

// |v|^p = Q^floor(p/2) * sqrt(Q)^(p mod 2); flags whether the sqrt factor is present.
inline std::pair<Rational, bool> radial_at(const Rational& q, int p) {
  if (p == 0) return {Rational(1), false};
  if (q == 0) {
    if (p < 0) throw std::domain_error("pole at the origin of a negative radial power");
    return {Rational(0), false};
  }
  int half = (p >= 0) ? p / 2 : -((-p + 1) / 2);
  return {rpow(q, half), (p & 1) != 0};
}

}  // namespace detail

/// Exact value at rational points; odd radial powers land in the sqrt components.
inline ExtendedValue eval_exact(const RadialExpr& f, std::span<const Rational> xpt,
                                std::span<const Rational> ypt) {
  if (int(xpt.size()) != f.nx() || int(ypt.size()) != f.ny())
    throw std::invalid_argument("eval_exact: point dimension mismatch");
  const Rational qx = detail::quadric_at(xpt), qy = detail::quadric_at(ypt);
  ExtendedValue v;
  for (const auto& [k, c] : f.terms()) {
    auto [rx, sx] = detail::radial_at(qx, k.px);
    auto [ry, sy] = detail::radial_at(qy, k.py);
    Rational t = c * detail::monomial_at(k.xexp, xpt) * detail::monomial_at(k.yexp, ypt) * rx * ry;
    if (sx && sy) v.d += t;
    else if (sx) v.b += t;
    else if (sy) v.c += t;
    else v.a += t;
  }
  auto rx = exact_sqrt(qx), ry = exact_sqrt(qy);
  if (rx) {
    v.a += v.b * *rx;
    v.c += v.d * *rx;
    v.b = 0;
    v.d = 0;
  }
  if (ry) {
    v.a += v.c * *ry;
    v.b += v.d * *ry;
    v.c = 0;
    v.d = 0;
  }
  if (v.d != 0) {
    if (auto rxy = exact_sqrt(qx * qy)) {
      v.a += v.d * *rxy;
      v.d = 0;
    }
  }
  return v;
}

inline double to_double(const ExtendedValue& v, const Rational& qx, const Rational& qy) {
  double sx = std::sqrt(qx.get_d()), sy = std::sqrt(qy.get_d());
  return v.a.get_d() + v.b.get_d() * sx + v.c.get_d() * sy + v.d.get_d() * sx * sy;
}

inline double eval_float(const RadialExpr& f, std::span<const double> xpt, std::span<const double> ypt) {
  if (int(xpt.size()) != f.nx() || int(ypt.size()) != f.ny())
    throw std::invalid_argument("eval_float: point dimension mismatch");
  double qx = 0, qy = 0;
  for (double v : xpt) qx += v * v;
  for (double v : ypt) qy += v * v;
  const double rx = std::sqrt(qx), ry = std::sqrt(qy);
  double sum = 0;
  for (const auto& [k, c] : f.terms()) {
    if ((k.px < 0 && qx == 0) || (k.py < 0 && qy == 0))
      throw std::domain_error("pole at the origin of a negative radial power");
    double t = c.get_d();
    for (int i = 0; i < f.nx(); ++i)
      if (k.xexp[i]) t *= std::pow(xpt[i], k.xexp[i]);
    for (int i = 0; i < f.ny(); ++i)
      if (k.yexp[i]) t *= std::pow(ypt[i], k.yexp[i]);
    if (k.px) t *= std::pow(rx, k.px);
    if (k.py) t *= std::pow(ry, k.py);
    sum += t;
  }
  return sum;
}

/// Substitutes a rational point for group g; the result has no variables left in g.
/// Odd radial powers need |point| rational.
inline RadialExpr specialize(const RadialExpr& f, Group g, std::span<const Rational> pt) {
  if (int(pt.size()) != f.count(g)) throw std::invalid_argument("specialize: dimension mismatch");
  const Rational q = detail::quadric_at(pt);
  const auto root = exact_sqrt(q);
  detail::Accum acc;
  for (const auto& [k, c] : f.terms()) {
    auto [r, odd] = detail::radial_at(q, k.radial(g));
    if (odd) {
      if (!root) throw std::domain_error("specialize: odd radial power at an irrational norm");
      r *= *root;
    }
    TermKey d = k;
    d.exps(g) = {};
    d.radial(g) = 0;
    detail::accumulate(acc, d, c * r * detail::monomial_at(k.exps(g), pt));
  }
  return g == Group::x ? RadialExpr::from_accum(0, f.ny(), std::move(acc))
                       : RadialExpr::from_accum(f.nx(), 0, std::move(acc));
}

/// Moves an expression into a space with more (or equal) variables per group.
inline RadialExpr embed(const RadialExpr& f, int nx, int ny) {
  if (nx < f.nx() || ny < f.ny()) throw std::invalid_argument("embed: cannot drop variables");
  for (const auto& [k, c] : f.terms())
    if ((k.px != 0 && nx != f.nx()) || (k.py != 0 && ny != f.ny()))
      throw std::invalid_argument("embed: radial powers change meaning with the dimension");
  std::vector<RadialExpr::Term> terms(f.terms().begin(), f.terms().end());
  return RadialExpr::from_terms(nx, ny, terms);
}

/// Human-readable sum, e.g. "3*x0^2*y0^2 - x0^2*|y|^2".
inline std::string to_string(const RadialExpr& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    Rational mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    for (int i = 0; i < f.nx(); ++i)
      if (k.xexp[i]) factors.push_back("x" + std::to_string(i) + (k.xexp[i] > 1 ? "^" + std::to_string(k.xexp[i]) : ""));
    for (int i = 0; i < f.ny(); ++i)
      if (k.yexp[i]) factors.push_back("y" + std::to_string(i) + (k.yexp[i] > 1 ? "^" + std::to_string(k.yexp[i]) : ""));
    if (k.px) factors.push_back("|x|^" + std::to_string(k.px));
    if (k.py) factors.push_back("|y|^" + std::to_string(k.py));
    if (factors.empty() || mag != 1) factors.insert(factors.begin(), to_string(mag));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace zonal
