// zonal: expand, evaluate, and verify zonal harmonics over the rationals.
//
// Exit codes: 0 success, 1 a verification cell failed, 2 usage or domain error, 3 I/O error.

#include "zonal/coefficients.hpp"
#include "zonal/invariant_expr.hpp"
#include "zonal/json_io.hpp"
#include "zonal/routes.hpp"
#include "zonal/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace zonal;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(17) << r.get_d();
  return os.str();
}

/// Fills in m from n (or n from m) and enforces the dimension each route lives in.
RouteSpec route_spec(const std::string& route_text, std::optional<int> n, int k, std::optional<int> m) {
  RouteSpec spec;
  try {
    spec.route = parse_route(route_text);
  } catch (const std::exception&) {
    throw UsageError("unknown route '" + route_text + "'");
  }
  spec.k = k;
  if (k < 0) throw UsageError("k must be >= 0");
  auto paired = [&](int offset, const char* rule) {
    // n = 2m + offset
    if (!n && !m) throw UsageError(std::string(route_text) + " needs --n or --m (" + rule + ")");
    if (m && *m < 0) throw UsageError("m must be >= 0");
    if (n && !m) {
      if (*n < offset || (*n - offset) % 2 != 0) throw UsageError(route_text + " requires " + rule);
      m = (*n - offset) / 2;
    }
    if (!n) n = 2 * *m + offset;
    if (*n != 2 * *m + offset) throw UsageError(route_text + " requires " + rule);
    spec.n = *n;
    spec.m = *m;
  };
  switch (spec.route) {
    case Route::direct:
      if (!n || *n < 1) throw UsageError("direct requires n >= 1");
      spec.n = *n;
      break;
    case Route::ladder:
      if (!n || *n < 2) throw UsageError("ladder requires n >= 2");
      spec.n = *n;
      break;
    case Route::laplacian_odd: paired(2, "n = 2m + 2, target R^(2m+3)"); break;
    case Route::laplacian_even: paired(1, "n = 2m + 1, target R^(2m+2)"); break;
    case Route::clifford:
      paired(1, "n = 2m + 1, target R^(2m+2)");
      if (spec.m == 0 && k == 0) throw UsageError("clifford with m = 0 requires k >= 1");
      break;
    case Route::kelvin:
      if (!n || *n < 1 || *n % 2 == 0) throw UsageError("kelvin requires odd n");
      if (k < 1) throw UsageError("kelvin requires k >= 1");
      spec.n = *n;
      spec.m = (*n - 1) / 2;
      break;
  }
  return spec;
}

std::vector<Rational> parse_point(const std::string& text, int dim, const char* name) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception& e) {
      throw UsageError(std::string(name) + ": " + e.what());
    }
  }
  if (int(out.size()) != dim)
    throw UsageError(std::string(name) + " needs " + std::to_string(dim) + " comma-separated coordinates");
  return out;
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.close();
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) row += (i ? "," : "") + csv_field(fields[i]);
  return row + "\r\n";
}

// --- subcommands -------------------------------------------------------------------

struct ExpandArgs {
  std::string route = "direct";
  std::optional<int> n, m;
  int k = 0;
  std::string format = "text";
};

int cmd_expand(const ExpandArgs& a) {
  const RouteSpec spec = route_spec(a.route, a.n, a.k, a.m);
  auto r = run_route<RadialExpr>(spec);
  if (a.format == "json") {
    Json j = {{"route", route_name(spec.route)}, {"n", spec.n}, {"k", spec.k}, {"m", spec.m},
              {"prefactor", to_string(r.prefactor)}, {"equals_prefactor_times_target", r.holds()},
              {"value", to_json(r.value)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << to_string(r.value) << "\n";
    if (spec.route != Route::direct)
      std::cerr << "prefactor " << to_string(r.prefactor) << " against Z_" << spec.k << ": "
                << (r.holds() ? "equal" : "NOT equal") << "\n";
  }
  return 0;
}

struct EvalArgs {
  ExpandArgs route;
  std::string x, y;
};

int cmd_eval(const EvalArgs& a) {
  const RouteSpec spec = route_spec(a.route.route, a.route.n, a.route.k, a.route.m);
  auto r = run_route<RadialExpr>(spec);
  const int dim = r.value.nx();
  auto x = parse_point(a.x, dim, "--x");
  auto y = parse_point(a.y, dim, "--y");
  Rational qx = 0, qy = 0;
  for (const auto& v : x) qx += v * v;
  for (const auto& v : y) qy += v * v;
  ExtendedValue v;
  try {
    v = eval_exact(r.value, x, y);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const bool rational = v.b == 0 && v.c == 0 && v.d == 0;
  const double approx = to_double(v, qx, qy);
  if (a.route.format == "json") {
    Json j = {{"route", route_name(spec.route)}, {"n", spec.n}, {"k", spec.k}, {"m", spec.m},
              {"a", to_string(v.a)}, {"b", to_string(v.b)}, {"c", to_string(v.c)}, {"d", to_string(v.d)},
              {"rational", rational}, {"decimal", approx}};
    std::cout << j.dump(2) << "\n";
  } else if (rational) {
    std::cout << to_string(v.a) << " (" << std::setprecision(17) << approx << ")\n";
  } else {
    // a + b|x| + c|y| + d|x||y|
    std::cout << to_string(v.a) << " + " << to_string(v.b) << "*|x| + " << to_string(v.c) << "*|y| + "
              << to_string(v.d) << "*|x||y| (" << std::setprecision(17) << approx << ")\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  SuiteOptions opts;
  std::string crosscheck = "auto";
  bool json_flag = false;
  std::string json_path;
  bool timings = false;
  bool quiet = false;
};

int cmd_verify(VerifyArgs a) {
  const auto& names = suite_names();
  if (a.suite != "all" && std::find(names.begin(), names.end(), a.suite) == names.end())
    throw UsageError("unknown suite '" + a.suite + "'");
  if (a.crosscheck == "none") a.opts.crosscheck = CrossCheck::none;
  else if (a.crosscheck == "all") a.opts.crosscheck = CrossCheck::all;
  else a.opts.crosscheck = CrossCheck::automatic;
  if (a.opts.samples < 2) throw UsageError("--samples must be >= 2");
  if (a.opts.threads < 0) throw UsageError("--threads must be >= 0");
  SuiteReport report = run_suite(a.suite, a.opts);
  const std::string json = report.to_json(a.timings).dump(2) + "\n";
  const bool json_to_stdout = a.json_flag && (a.json_path.empty() || a.json_path == "-");
  if (a.json_flag) write_text(a.json_path, json);
  std::ostream& log = json_to_stdout ? std::cerr : std::cout;
  if (!a.quiet) {
    for (const auto& c : report.cells)
      if (c.status == "fail") log << "FAIL " << c.params.dump() << "\n";
    log << a.suite << ": " << report.cells.size() << " cells, " << report.count("pass") << " passed, "
        << report.count("fail") << " failed, " << report.findings.size() << " findings\n";
  }
  return report.passed() ? 0 : 1;
}

struct CoeffArgs {
  std::string which;
  std::optional<int> m, k, N, j, l;
  std::optional<std::string> lambda;
  std::string format = "text";
};

int cmd_coeff(const CoeffArgs& a) {
  auto need = [&](const std::optional<int>& v, const char* name) {
    if (!v) throw UsageError(a.which + " needs --" + name);
    return *v;
  };
  auto lam = [&] {
    if (!a.lambda) throw UsageError(a.which + " needs --lambda");
    try {
      return parse_rational(*a.lambda);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--lambda: ") + e.what());
    }
  };
  Json out = {{"coefficient", a.which}};
  std::vector<std::string> notes;
  Rational value;
  std::optional<Rational> printed;
  bool printed_pole = false;
  try {
    if (a.which == "alpha") {
      value = coeff::alpha(need(a.m, "m"), lam(), need(a.k, "k"));
    } else if (a.which == "alpha_hat") {
      value = coeff::alpha_hat(need(a.m, "m"), need(a.k, "k"));
    } else if (a.which == "c") {
      value = coeff::c(need(a.N, "N"), need(a.j, "j"), need(a.l, "l"), need(a.k, "k"));
    } else if (a.which == "beta") {
      const int m = need(a.m, "m"), k = need(a.k, "k");
      const Rational l = lam();
      value = coeff::beta(m, l, k);
      printed = coeff::beta_printed(m, l, k);
      printed_pole = !printed;
      notes.push_back("composed as alpha * c^2 in R^" + to_string(2 * (l + m) + 2) + "; k is the output degree, input degree " +
                      std::to_string(k + 2 * m));
      if (l == 1 && m == 1)
        notes.push_back("with input degree d = " + std::to_string(k + 2) + " this is -16(1 + d) = " +
                        std::to_string(-16 * (k + 3)));
    } else if (a.which == "betaTilde") {
      const int m = need(a.m, "m"), k = need(a.k, "k");
      value = coeff::beta_tilde(m, k);
      printed = coeff::beta_tilde_printed(m, k);
    } else if (a.which == "betaHat") {
      const int m = need(a.m, "m"), k = need(a.k, "k");
      value = coeff::beta_hat(m, k);
      printed = coeff::beta_hat_printed(m, k);
    } else if (a.which == "eta") {
      const int m = need(a.m, "m"), k = need(a.k, "k");
      value = coeff::eta(m, k);
      const Rational observed = coeff::eta_corrected(m, k);
      out["value_holding_exactly"] = to_string(observed);
      if (observed != value) notes.push_back("the exact relation holds with " + to_string(observed) + " instead");
    } else if (a.which == "kelvin") {
      const int n = need(a.N, "N"), k = need(a.k, "k");
      value = coeff::kelvin_constant(n, k);
      const Rational observed = coeff::kelvin_constant_corrected(n, k);
      out["value_holding_exactly"] = to_string(observed);
      if (observed != value) notes.push_back("the exact relation holds with " + to_string(observed) + " instead");
    } else if (a.which == "ladder") {
      value = coeff::ladder(need(a.N, "N"), need(a.k, "k"));
    } else {
      throw UsageError("unknown coefficient '" + a.which + "'");
    }
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  out["value"] = to_string(value);
  out["decimal"] = value.get_d();
  if (printed) out["closed_form"] = to_string(*printed);
  if (printed_pole) out["closed_form"] = "pole";
  if (printed && *printed != value) notes.push_back("the closed form gives " + to_string(*printed) + ", the composition " + to_string(value));
  if (printed_pole) notes.push_back("the closed form with Gamma(m-1)^2 has a pole here");
  out["notes"] = notes;
  if (a.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << to_string(value) << " (" << decimal(value) << ")\n";
    for (const auto& n : notes) std::cout << "note: " << n << "\n";
  }
  return 0;
}

struct TableArgs {
  std::string kind;
  std::optional<int> n, k;
  int kmin = 0, kmax = 6;
  double r = 0.3, w = 0.5;
  int max_terms = 50;
  std::string out;
};

int cmd_table(const TableArgs& a) {
  std::string csv;
  if (a.kind == "zonal_coeffs") {
    const int n = a.n.value_or(2);
    if (n < 1) throw UsageError("zonal_coeffs requires n >= 1");
    csv = csv_row({"n", "k", "dot_power", "x_norm_power", "y_norm_power", "coefficient"});
    const int lo = a.k ? *a.k : a.kmin, hi = a.k ? *a.k : a.kmax;
    for (int k = lo; k <= hi; ++k) {
      if (k < 0) throw UsageError("k must be >= 0");
      InvariantExpr z = zonal_direct<InvariantExpr>(n, k);
      for (const auto& [key, c] : z.terms())
        csv += csv_row({std::to_string(n), std::to_string(k), std::to_string(key.s), std::to_string(key.r),
                        std::to_string(key.q), to_fraction_string(c)});
    }
  } else if (a.kind == "poisson_convergence") {
    const int n = a.n.value_or(2);
    if (n < 1) throw UsageError("poisson_convergence requires n >= 1");
    if (!(a.r >= 0 && a.r < 1)) throw UsageError("poisson_convergence requires 0 <= r < 1");
    if (!(a.w >= -1 && a.w <= 1)) throw UsageError("poisson_convergence requires -1 <= w <= 1");
    if (a.max_terms < 0) throw UsageError("--max-terms must be >= 0");
    const double N = n + 1;
    const double closed = (1 - a.r * a.r) / std::pow(1 - 2 * a.r * a.w + a.r * a.r, N / 2);
    csv = csv_row({"n", "r", "w", "terms", "partial_sum", "closed_form", "abs_error"});
    double sum = 0;
    auto fmt = [](double v) {
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof buf, v);  // shortest round-trip form
      return std::string(buf, res.ptr);
    };
    for (int t = 1; t <= a.max_terms; ++t) {
      sum += zonal_value(n, t - 1, a.w, a.r);
      csv += csv_row({std::to_string(n), fmt(a.r), fmt(a.w), std::to_string(t), fmt(sum), fmt(closed),
                      fmt(std::abs(sum - closed))});
    }
  } else {
    throw UsageError("unknown table '" + a.kind + "'");
  }
  write_text(a.out, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction and verification of zonal harmonics"};
  app.require_subcommand(1);

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Print the canonical term list of a route's output");
  auto add_route_opts = [](CLI::App* c, ExpandArgs& a) {
    c->add_option("--route", a.route, "direct, ladder, laplacian_odd, laplacian_even, clifford, kelvin")
        ->capture_default_str();
    c->add_option("--n", a.n, "ambient space is R^(n+1)");
    c->add_option("--k", a.k, "output degree")->capture_default_str();
    c->add_option("--m", a.m, "number of Laplacians");
    c->add_option("--format", a.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };
  add_route_opts(expand, ex);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a route's output exactly at rational x, y");
  add_route_opts(eval, ev.route);
  eval->add_option("--x", ev.x, "comma-separated rationals, e.g. 1/2,0,3")->required();
  eval->add_option("--y", ev.y)->required();

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run an identity suite; exit 1 if any cell fails");
  verify->add_option("--suite", ver.suite)->capture_default_str();
  verify->add_option("--n", ver.opts.n);
  verify->add_option("--k", ver.opts.k);
  verify->add_option("--m", ver.opts.m);
  verify->add_option("--nmax", ver.opts.nmax);
  verify->add_option("--kmax", ver.opts.kmax);
  verify->add_option("--mmax", ver.opts.mmax);
  verify->add_option("--samples", ver.opts.samples)->capture_default_str();
  verify->add_option("--seed", ver.opts.seed)->capture_default_str();
  verify->add_option("--threads", ver.opts.threads, "0 = available parallelism")->capture_default_str();
  verify->add_option("--crosscheck", ver.crosscheck, "monomial-engine cross-check: auto, none, all")
      ->check(CLI::IsMember({"auto", "none", "all"}))
      ->capture_default_str();
  auto* json_opt = verify->add_option("--json", ver.json_path, "write the report (stdout if no path)")->expected(0, 1);
  verify->add_flag("--timings", ver.timings, "include elapsed_ms per cell (output is then not reproducible)");
  verify->add_flag("--quiet", ver.quiet);

  CoeffArgs co;
  auto* coeff_cmd = app.add_subcommand("coeff", "Print a coefficient as an exact fraction");
  coeff_cmd->add_option("which", co.which, "alpha, alpha_hat, c, beta, betaTilde, betaHat, eta, kelvin, ladder")
      ->required();
  coeff_cmd->add_option("--m", co.m);
  coeff_cmd->add_option("--k", co.k);
  coeff_cmd->add_option("--lambda", co.lambda);
  coeff_cmd->add_option("--N", co.N, "dimension (c), or n for kelvin and ladder");
  coeff_cmd->add_option("--j", co.j);
  coeff_cmd->add_option("--l", co.l);
  coeff_cmd->add_option("--format", co.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Write a CSV table");
  table->add_option("kind", tb.kind, "zonal_coeffs or poisson_convergence")->required();
  table->add_option("--n", tb.n);
  table->add_option("--k", tb.k);
  table->add_option("--kmin", tb.kmin)->capture_default_str();
  table->add_option("--kmax", tb.kmax)->capture_default_str();
  table->add_option("--r", tb.r)->capture_default_str();
  table->add_option("--w", tb.w)->capture_default_str();
  table->add_option("--max-terms", tb.max_terms)->capture_default_str();
  table->add_option("--out", tb.out, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*expand) return cmd_expand(ex);
    if (*eval) return cmd_eval(ev);
    if (*verify) {
      ver.json_flag = json_opt->count() > 0;
      return cmd_verify(ver);
    }
    if (*coeff_cmd) return cmd_coeff(co);
    if (*table) return cmd_table(tb);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
