#pragma once

// JSON forms of expressions and multivectors, and stable FNV-1a digests of them.

#include "zonal/clifford.hpp"
#include "zonal/invariant_expr.hpp"
#include "zonal/radial_expr.hpp"
#include "zonal/ratnum.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <string>

namespace zonal {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) { return to_fraction_string(r); }

/// Terms are already in lexicographic (xexp, yexp, px, py) order.
inline Json to_json(const RadialExpr& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms()) {
    Json xe = Json::array(), ye = Json::array();
    for (int i = 0; i < f.nx(); ++i) xe.push_back(int(k.xexp[i]));
    for (int i = 0; i < f.ny(); ++i) ye.push_back(int(k.yexp[i]));
    terms.push_back({{"xexp", xe},
                     {"yexp", ye},
                     {"px", k.px},
                     {"py", k.py},
                     {"num", c.get_num().get_str()},
                     {"den", c.get_den().get_str()}});
  }
  return {{"nx", f.nx()}, {"ny", f.ny()}, {"terms", terms}};
}

inline RadialExpr radial_from_json(const Json& j) {
  const int nx = j.at("nx").get<int>(), ny = j.at("ny").get<int>();
  std::vector<RadialExpr::Term> terms;
  for (const auto& t : j.at("terms")) {
    TermKey k;
    const auto& xe = t.at("xexp");
    const auto& ye = t.at("yexp");
    if (int(xe.size()) != nx || int(ye.size()) != ny) throw std::invalid_argument("exponent vector length mismatch");
    for (int i = 0; i < nx; ++i) k.xexp[i] = static_cast<std::uint8_t>(xe[i].get<int>());
    for (int i = 0; i < ny; ++i) k.yexp[i] = static_cast<std::uint8_t>(ye[i].get<int>());
    k.px = t.at("px").get<int>();
    k.py = t.at("py").get<int>();
    Rational c(Integer(t.at("num").get<std::string>()), Integer(t.at("den").get<std::string>()));
    c.canonicalize();
    terms.emplace_back(k, c);
  }
  return RadialExpr::from_terms(nx, ny, terms);
}

/// Invariant-engine form: {"dim", "terms": [{"s", "r", "q", "num", "den"}]}, keys ascending.
inline Json to_json(const InvariantExpr& f) {
  Json terms = Json::array();
  for (const auto& [k, c] : f.terms())
    terms.push_back({{"s", k.s}, {"r", k.r}, {"q", k.q}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  return {{"dim", f.dim()}, {"terms", terms}};
}

inline Json to_json(const Multivector<RadialExpr>& a) {
  Json comps = Json::array();
  for (const auto& [blade, c] : a.comps()) comps.push_back({{"blade", blade_indices(blade)}, {"coeff", to_json(c)}});
  return {{"n", a.n()}, {"comps", comps}};
}

inline Json to_json(const Multivector<Rational>& a) {
  Json comps = Json::array();
  for (const auto& [blade, c] : a.comps()) comps.push_back({{"blade", blade_indices(blade)}, {"coeff", rational_json(c)}});
  return {{"n", a.n()}, {"comps", comps}};
}

inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <class T>
std::string digest(const T& value) {
  return fnv1a_hex(to_json(value).dump());
}

}  // namespace zonal
