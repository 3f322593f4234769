#pragma once

// Monte-Carlo check of the reproducing property on the unit sphere S^n in R^(n+1):
//   P(y) = (1/|S^n|) \int P(xi) Z_k(xi, y) d sigma(xi)   for P harmonic of degree k.

#include "zonal/gegenbauer.hpp"
#include "zonal/radial_expr.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace zonal {

/// A polynomial in x alone, flattened for fast double evaluation.
class CompiledPoly {
 public:
  explicit CompiledPoly(const RadialExpr& f) : nx_(f.nx()) {
    if (f.ny() != 0) throw std::invalid_argument("CompiledPoly needs an expression in x alone");
    for (const auto& [k, c] : f.terms()) {
      if (k.px < 0) throw std::invalid_argument("CompiledPoly needs nonnegative radial powers");
      Term t{c.get_d(), {}, k.px};
      for (int i = 0; i < nx_; ++i) {
        t.exps.push_back(k.xexp[i]);
        max_exp_ = std::max<int>(max_exp_, k.xexp[i]);
      }
      terms_.push_back(std::move(t));
    }
  }

  double operator()(const std::vector<double>& x) const {
    std::vector<double> powers(std::size_t(nx_) * (max_exp_ + 1));
    double q = 0;
    for (int i = 0; i < nx_; ++i) {
      double* row = &powers[std::size_t(i) * (max_exp_ + 1)];
      row[0] = 1;
      for (int e = 1; e <= max_exp_; ++e) row[e] = row[e - 1] * x[i];
      q += x[i] * x[i];
    }
    const double norm = std::sqrt(q);
    double sum = 0;
    for (const auto& t : terms_) {
      double v = t.coeff;
      for (int i = 0; i < nx_; ++i) v *= powers[std::size_t(i) * (max_exp_ + 1) + t.exps[i]];
      if (t.px) v *= std::pow(norm, t.px);
      sum += v;
    }
    return sum;
  }

 private:
  struct Term {
    double coeff;
    std::vector<int> exps;
    int px;
  };
  int nx_;
  int max_exp_ = 0;
  std::vector<Term> terms_;
};

struct McEstimate {
  double estimate = 0;
  double target = 0;
  double std_error = 0;  // sample standard deviation / sqrt(samples)
  std::uint64_t seed = 0;
  long samples = 0;

  double relative_error() const { return std::abs(estimate - target) / std::abs(target); }
  double three_sigma_relative() const { return 3 * std_error / std::abs(target); }
};

/// Uniform samples on S^n from normalized standard Gaussian vectors (mt19937_64).
/// test_poly must be a function of x alone in R^(n+1); y must have unit norm.
inline McEstimate reproducing_mc(int n, int k, const RadialExpr& test_poly, const std::vector<double>& y,
                                 long samples, std::uint64_t seed) {
  const int dim = n + 1;
  if (int(y.size()) != dim || test_poly.nx() != dim) throw std::invalid_argument("reproducing_mc: dimension mismatch");
  if (samples < 2) throw std::invalid_argument("reproducing_mc needs at least two samples");
  double yy = 0;
  for (double v : y) yy += v * v;
  if (std::abs(yy - 1) > 1e-12) throw std::domain_error("reproducing_mc needs |y| = 1");
  CompiledPoly P(test_poly);
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  std::vector<double> xi(dim);
  double mean = 0, m2 = 0;
  for (long i = 0; i < samples; ++i) {
    double q = 0;
    for (auto& v : xi) {
      v = normal(gen);
      q += v * v;
    }
    const double inv = 1 / std::sqrt(q);
    double w = 0;
    for (int j = 0; j < dim; ++j) {
      xi[j] *= inv;
      w += xi[j] * y[j];
    }
    const double v = P(xi) * zonal_value(n, k, w, 1.0);
    const double delta = v - mean;  // Welford
    mean += delta / double(i + 1);
    m2 += delta * (v - mean);
  }
  McEstimate out;
  out.estimate = mean;
  out.target = P(y);
  out.std_error = std::sqrt(m2 / double(samples - 1) / double(samples));
  out.seed = seed;
  out.samples = samples;
  return out;
}

}  // namespace zonal
