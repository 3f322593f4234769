#pragma once

// Exact rational scalars and the integer-shift combinatorial builders
// (factorials, binomials, Pochhammer symbols, Gamma ratios).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zonal {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds p/q in lowest terms.
inline Rational make_rational(long p, long q = 1) {
  if (q == 0) throw std::domain_error("rational with zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Returns the value as a signed 64-bit integer if it is an integer that fits.
inline std::optional<long> as_small_integer(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p()) return std::nullopt;
  return r.get_num().get_si();
}

/// "num/den", or just "num" when the denominator is one.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Always "num/den" (CSV cells and reports use this fixed layout).
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "p", "p/q" or a finite decimal such as "-0.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    Integer den = 1;
    for (std::size_t i = 0; i < frac; ++i) den *= 10;
    if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
    Integer num;
    if (num.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0)
      throw std::invalid_argument("malformed rational literal: " + s);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  r.canonicalize();
  return r;
}

inline Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

/// Binomial coefficient with binomial(n, r) = 0 outside 0 <= r <= n.
inline Rational binomial(long n, long r) {
  if (n < 0) throw std::domain_error("binomial with negative upper index");
  if (r < 0 || r > n) return Rational(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return Rational(b);
}

/// Rising factorial a (a+1) ... (a+j-1); empty product for j = 0.
inline Rational pochhammer(const Rational& a, long j) {
  if (j < 0) throw std::domain_error("pochhammer with negative length");
  Rational acc(1);
  Rational term = a;
  for (long i = 0; i < j; ++i) {
    acc *= term;
    term += 1;
  }
  return acc;
}

/// Gamma(a) / Gamma(b) for a - b a nonnegative integer, as pochhammer(b, a - b).
/// Callers must rearrange negative shifts into a reciprocal first.
inline Rational gamma_ratio(const Rational& a, const Rational& b) {
  Rational shift = a - b;
  auto steps = as_small_integer(shift);
  if (!steps || *steps < 0)
    throw std::domain_error("gamma_ratio needs a - b to be a nonnegative integer, got " +
                            to_string(shift));
  // A pole of Gamma(b) at a nonpositive integer has no finite rational ratio.
  if (*steps > 0 && is_integer(b) && b <= 0)
    throw std::domain_error("gamma_ratio with b at a pole of Gamma: " + to_string(b));
  return pochhammer(b, *steps);
}

/// Integer power for rationals (negative exponents invert).
inline Rational rpow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return rpow(Rational(1) / base, -e);
  }
  Rational out(1);
  Rational b = base;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

/// sqrt(r) when r is the square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn, sd);
}

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace zonal
