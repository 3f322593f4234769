#pragma once

// Exact expressions in the rotation invariants of a pair x, y in R^N:
// Laurent polynomials sum c s^a r^b q^c with s = <x, y>, r = |x|, q = |y|,
// a >= 0 and b, c arbitrary integers.
//
// For N >= 2 the functions s, r, q are algebraically independent on the open set
// {|s| < r q}, so the monomial list is a unique representation. The differential
// operators follow from the chain rule with d s / d x_i = y_i and d r / d x_i = x_i / r:
//   Delta_x (s^a r^b)  = a(a-1) s^(a-2) r^b q^2 + b(2a + b + N - 2) s^a r^(b-2)
//   <y, grad_x> s^a r^b = a s^(a-1) r^b q^2 + b s^(a+1) r^(b-2)
//   Kelvin_x   s^a r^b  = s^a r^(2 - N - 2a - b)
// Every expression here expands to a RadialExpr through to_radial, which is injective;
// this engine exists because the monomial expansion grows like C(d + N - 1, N - 1)^2.

#include "zonal/radial_expr.hpp"

#include <array>
#include <cmath>
#include <concepts>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace zonal {

struct InvariantKey {
  int s = 0;  // power of <x, y>
  int r = 0;  // power of |x|
  int q = 0;  // power of |y|
  friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

class InvariantExpr {
 public:
  using Map = std::map<InvariantKey, Rational>;

  InvariantExpr() = default;
  explicit InvariantExpr(int dim) : dim_(dim) {
    if (dim < 2) throw std::invalid_argument("invariant engine needs dimension >= 2");
  }

  static InvariantExpr constant(int dim, const Rational& c) {
    InvariantExpr e(dim);
    e.add_term({0, 0, 0}, c);
    return e;
  }
  static InvariantExpr monomial(int dim, InvariantKey k, const Rational& c = 1) {
    if (k.s < 0) throw std::invalid_argument("negative power of <x,y>");
    InvariantExpr e(dim);
    e.add_term(k, c);
    return e;
  }
  static InvariantExpr dot(int dim) { return monomial(dim, {1, 0, 0}); }
  static InvariantExpr norm_power(int dim, Group g, int p) {
    return monomial(dim, g == Group::x ? InvariantKey{0, p, 0} : InvariantKey{0, 0, p});
  }

  int dim() const { return dim_; }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const InvariantKey& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const InvariantExpr& o) const {
    check_same(o);
    return terms_ == o.terms_;
  }

  InvariantExpr operator-() const {
    InvariantExpr e = *this;
    for (auto& [k, c] : e.terms_) c = -c;
    return e;
  }
  friend InvariantExpr operator+(InvariantExpr a, const InvariantExpr& b) {
    a.check_same(b);
    for (const auto& [k, c] : b.terms_) a.add_term(k, c);
    return a;
  }
  friend InvariantExpr operator-(const InvariantExpr& a, const InvariantExpr& b) { return a + (-b); }
  friend InvariantExpr operator*(const InvariantExpr& a, const InvariantExpr& b) {
    a.check_same(b);
    InvariantExpr e(a.dim_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) e.add_term({ka.s + kb.s, ka.r + kb.r, ka.q + kb.q}, ca * cb);
    return e;
  }
  friend InvariantExpr operator*(InvariantExpr a, const Rational& c) {
    if (c == 0) return InvariantExpr(a.dim_);
    for (auto& [k, v] : a.terms_) v *= c;
    return a;
  }
  friend InvariantExpr operator*(const Rational& c, const InvariantExpr& a) { return a * c; }
  InvariantExpr& operator+=(const InvariantExpr& o) { return *this = *this + o; }
  InvariantExpr& operator-=(const InvariantExpr& o) { return *this = *this - o; }

  void check_same(const InvariantExpr& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("InvariantExpr dimension mismatch");
  }

 private:
  int dim_ = 2;
  Map terms_;
};

inline InvariantExpr pow(const InvariantExpr& base, int e) {
  if (e < 0) throw std::domain_error("InvariantExpr power with negative exponent");
  InvariantExpr out = InvariantExpr::constant(base.dim(), 1);
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

inline InvariantExpr laplacian(const InvariantExpr& f, Group g) {
  const long n = f.dim();
  InvariantExpr out(f.dim());
  for (const auto& [k, c] : f.terms()) {
    const long a = k.s;
    const long b = g == Group::x ? k.r : k.q;
    if (a >= 2) {
      InvariantKey d = k;
      d.s -= 2;
      (g == Group::x ? d.q : d.r) += 2;
      out.add_term(d, c * (a * (a - 1)));
    }
    if (long factor = b * (2 * a + b + n - 2); factor != 0) {
      InvariantKey d = k;
      (g == Group::x ? d.r : d.q) -= 2;
      out.add_term(d, c * factor);
    }
  }
  return out;
}

inline InvariantExpr laplacian_power(InvariantExpr f, Group g, int times) {
  for (int i = 0; i < times; ++i) f = laplacian(f, g);
  return f;
}

inline InvariantExpr dir_deriv(const InvariantExpr& f) {
  InvariantExpr out(f.dim());
  for (const auto& [k, c] : f.terms()) {
    if (k.s > 0) out.add_term({k.s - 1, k.r, k.q + 2}, c * k.s);
    if (k.r != 0) out.add_term({k.s + 1, k.r - 2, k.q}, c * k.r);
  }
  return out;
}

inline InvariantExpr kelvin(const InvariantExpr& f, Group g = Group::x) {
  InvariantExpr out(f.dim());
  for (const auto& [k, c] : f.terms()) {
    InvariantKey d = k;
    if (g == Group::x)
      d.r = 2 - f.dim() - 2 * k.s - k.r;
    else
      d.q = 2 - f.dim() - 2 * k.s - k.q;
    out.add_term(d, c);
  }
  return out;
}

inline std::optional<int> homogeneous_degree(const InvariantExpr& f, Group g) {
  std::optional<int> deg;
  for (const auto& [k, c] : f.terms()) {
    int d = k.s + (g == Group::x ? k.r : k.q);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

/// Expansion into the monomial engine over R^dim x R^dim.
inline RadialExpr to_radial(const InvariantExpr& f) {
  const int n = f.dim();
  RadialExpr out(n, n);
  std::map<int, RadialExpr> dot_powers;
  const RadialExpr dot = RadialExpr::dot(n, n);
  auto dot_pow = [&](int a) -> const RadialExpr& {
    auto it = dot_powers.find(a);
    if (it == dot_powers.end()) it = dot_powers.emplace(a, pow(dot, a)).first;
    return it->second;
  };
  for (const auto& [k, c] : f.terms()) {
    RadialExpr t = dot_pow(k.s) * RadialExpr::norm_power(n, n, Group::x, k.r) *
                   RadialExpr::norm_power(n, n, Group::y, k.q);
    out += t * c;
  }
  return out;
}

/// Restriction to y = e_0 (so <x, y> = x_0 and |y| = 1), as a function of x alone.
inline RadialExpr at_unit_pole(const InvariantExpr& f) {
  const int n = f.dim();
  RadialExpr out(n, 0);
  const RadialExpr x0 = RadialExpr::coordinate(n, 0, Group::x, 0);
  for (const auto& [k, c] : f.terms()) out += pow(x0, k.s) * RadialExpr::norm_power(n, 0, Group::x, k.r) * c;
  return out;
}

inline RadialExpr at_unit_pole(const RadialExpr& f) {
  std::vector<Rational> e0(static_cast<std::size_t>(f.ny()));
  if (!e0.empty()) e0[0] = 1;
  return specialize(f, Group::y, e0);
}

/// Numeric value at an (s, |x|, |y|) triple.
inline double eval_float(const InvariantExpr& f, double s, double rx, double ry) {
  double sum = 0;
  for (const auto& [k, c] : f.terms())
    sum += c.get_d() * std::pow(s, k.s) * std::pow(rx, k.r) * std::pow(ry, k.q);
  return sum;
}

inline std::string to_string(const InvariantExpr& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    Rational mag = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::string body;
    auto put = [&](const char* name, int p) {
      if (p == 0) return;
      if (!body.empty()) body += "*";
      body += name;
      if (p != 1) body += "^" + std::to_string(p);
    };
    put("<x,y>", k.s);
    put("|x|", k.r);
    put("|y|", k.q);
    if (body.empty()) os << to_string(mag);
    else if (mag != 1) os << to_string(mag) << "*" << body;
    else os << body;
  }
  return os.str();
}

/// Uniform construction interface shared by the two engines, so the zonal routes
/// can be written once and instantiated against either.
template <class E>
struct ExprFactory;

template <>
struct ExprFactory<RadialExpr> {
  static RadialExpr constant(int dim, const Rational& c) { return RadialExpr::constant(dim, dim, c); }
  static RadialExpr dot(int dim) { return RadialExpr::dot(dim, dim); }
  static RadialExpr norm_power(int dim, Group g, int p) { return RadialExpr::norm_power(dim, dim, g, p); }
  static int dim(const RadialExpr& e) { return e.nx(); }
  static constexpr const char* name = "monomial";
};

template <>
struct ExprFactory<InvariantExpr> {
  static InvariantExpr constant(int dim, const Rational& c) { return InvariantExpr::constant(dim, c); }
  static InvariantExpr dot(int dim) { return InvariantExpr::dot(dim); }
  static InvariantExpr norm_power(int dim, Group g, int p) { return InvariantExpr::norm_power(dim, g, p); }
  static int dim(const InvariantExpr& e) { return e.dim(); }
  static constexpr const char* name = "invariant";
};

template <class E>
concept ZonalAlgebra = requires(const E& a, const E& b, Rational c) {
  { a + b } -> std::convertible_to<E>;
  { a * b } -> std::convertible_to<E>;
  { a * c } -> std::convertible_to<E>;
  { laplacian(a, Group::x) } -> std::convertible_to<E>;
  { dir_deriv(a) } -> std::convertible_to<E>;
  { kelvin(a, Group::x) } -> std::convertible_to<E>;
  { ExprFactory<E>::dot(2) } -> std::convertible_to<E>;
};

}  // namespace zonal
