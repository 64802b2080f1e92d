#include "lejasparse/benchmarks.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace lejasparse {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_size(std::span<const double> y, std::size_t n, const char* name) {
  if (y.size() != n)
    throw std::invalid_argument(std::string(name) + ": expected " +
                                std::to_string(n) + " inputs");
}

// anisotropy weights: the raw pattern 1, 0.5, 0.1, 0.05, ..., 5e-8
// (alternating /2 and /5), scaled by twice its 1-norm
const std::array<double, 16>& meromorphic_weights() {
  static const std::array<double, 16> w = [] {
    std::array<double, 16> w_hat{};
    double v = 1.0;
    for (std::size_t k = 0; k < 16; k += 2) {
      w_hat[k] = v;
      w_hat[k + 1] = 0.5 * v;
      v /= 10.0;
    }
    double norm1 = 0.0;
    for (double x : w_hat) norm1 += x;
    std::array<double, 16> out{};
    for (std::size_t k = 0; k < 16; ++k) out[k] = w_hat[k] / (2.0 * norm1);
    return out;
  }();
  return w;
}

// uniform on [a, b] recast as a truncated normal with matching mean/variance
Distribution uniform_as_truncated_normal(double a, double b) {
  const double mu = 0.5 * (a + b);
  const double sigma = (b - a) / std::sqrt(12.0);
  return Distribution::truncated_normal(mu, sigma, a, b);
}

std::vector<Distribution> borehole_dists() {
  // radius of influence: moments of the original log-normal LN(7.71, 1.0056)
  const double mu_ln = 7.71, sigma_ln = 1.0056;
  const double mu_r = std::exp(mu_ln + 0.5 * sigma_ln * sigma_ln);
  const double var_r = (std::exp(sigma_ln * sigma_ln) - 1.0) *
                       std::exp(2.0 * mu_ln + sigma_ln * sigma_ln);
  return {
      Distribution::truncated_normal(0.1, 0.016182, 0.05, 0.15),       // r_w
      Distribution::truncated_normal(mu_r, std::sqrt(var_r), 100.0, 50000.0),  // r
      uniform_as_truncated_normal(63070.0, 115600.0),                  // T_u
      uniform_as_truncated_normal(990.0, 1110.0),                      // H_u
      uniform_as_truncated_normal(63.1, 116.0),                        // T_l
      uniform_as_truncated_normal(700.0, 820.0),                       // H_l
      uniform_as_truncated_normal(1120.0, 1680.0),                     // L
      uniform_as_truncated_normal(9855.0, 12045.0),                    // K_w
  };
}

std::vector<Distribution> steel_column_dists() {
  return {
      Distribution::truncated_normal(400.0, 35.0, 295.0, 505.0),        // F_s
      Distribution::truncated_normal(500000.0, 50000.0, 350000.0, 650000.0),  // P_d
      Distribution::gumbel(559495.0, 70173.0),                          // P_1
      Distribution::gumbel(559495.0, 70173.0),                          // P_2
      Distribution::truncated_normal(300.0, 3.0, 291.0, 309.0),         // B
      Distribution::truncated_normal(20.0, 2.0, 14.0, 26.0),            // D
      Distribution::truncated_normal(300.0, 5.0, 285.0, 315.0),         // H
      Distribution::truncated_normal(30.0, 10.0, 0.0, 60.0),            // F_0
      Distribution::gumbel(208110.0, 3275.0),                           // E
      Distribution::truncated_normal(7500.0, 7.5, 7470.0, 7530.0),      // L
  };
}

std::vector<Distribution> meromorphic_dists() {
  std::vector<Distribution> d;
  d.reserve(16);
  for (std::size_t n = 0; n < 16; ++n) {
    if (n % 2 == 0)
      d.push_back(Distribution::truncated_normal(0.0, 1.0, 0.0, 3.0));
    else
      d.push_back(Distribution::truncated_normal(0.0, 1.0, -3.0, 0.0));
  }
  return d;
}

}  // namespace

double borehole_eval(std::span<const double> y) {
  require_size(y, 8, "borehole_eval");
  const double r_w = y[0], r = y[1], t_u = y[2], h_u = y[3];
  const double t_l = y[4], h_l = y[5], len = y[6], k_w = y[7];
  if (!(r_w > 0.0 && r > r_w))
    throw std::domain_error("borehole_eval: requires r > r_w > 0");
  if (!(t_u > 0.0 && t_l > 0.0 && len > 0.0 && k_w > 0.0))
    throw std::domain_error("borehole_eval: transmissivities, length and conductivity must be positive");
  const double log_ratio = std::log(r / r_w);
  const double bracket =
      1.0 + t_u / t_l + 2.0 * len * t_u / (log_ratio * r_w * r_w * k_w);
  const double denom = log_ratio * bracket;
  if (denom == 0.0) throw std::domain_error("borehole_eval: zero denominator");
  return 2.0 * kPi * t_u * (h_u - h_l) / denom;
}

double steel_column_eval(std::span<const double> y) {
  require_size(y, 10, "steel_column_eval");
  const double f_s = y[0];
  const double p_total = y[1] + y[2] + y[3];
  const double b = y[4], d = y[5], h = y[6], f0 = y[7], e = y[8], len = y[9];
  if (!(b > 0.0 && d > 0.0 && h > 0.0 && e > 0.0 && len > 0.0))
    throw std::domain_error("steel_column_eval: geometry and modulus must be positive");
  const double e_b = kPi * kPi * e * b * d * h * h / (2.0 * len * len);
  if (e_b == p_total)
    throw std::domain_error("steel_column_eval: load equals the buckling load");
  return f_s - p_total * (1.0 / (2.0 * b * d) + f0 * e_b / (b * d * h * (e_b - p_total)));
}

double meromorphic_eval(std::span<const double> y) {
  require_size(y, 16, "meromorphic_eval");
  const auto& w = meromorphic_weights();
  double dot = 0.0;
  for (std::size_t n = 0; n < 16; ++n) dot += w[n] * y[n];
  const double denom = 1.0 + dot;
  if (std::fabs(denom) < 1e-12)
    throw std::domain_error("meromorphic_eval: vanishing denominator");
  return 1.0 / denom;
}

BenchmarkModel benchmark_spec(std::string_view name) {
  BenchmarkModel model;
  model.name = std::string(name);
  if (name == "borehole") {
    model.dimension = 8;
    model.dists = borehole_dists();
    model.evaluator = [](std::span<const double> y) { return borehole_eval(y); };
  } else if (name == "steel-column") {
    model.dimension = 10;
    model.dists = steel_column_dists();
    model.evaluator = [](std::span<const double> y) { return steel_column_eval(y); };
  } else if (name == "meromorphic") {
    model.dimension = 16;
    model.dists = meromorphic_dists();
    model.evaluator = [](std::span<const double> y) { return meromorphic_eval(y); };
  } else {
    throw std::invalid_argument("unknown benchmark: " + std::string(name));
  }
  return model;
}

}  // namespace lejasparse
