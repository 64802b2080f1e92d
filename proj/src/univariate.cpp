#include "lejasparse/univariate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lejasparse {

namespace {

// 64-point Gauss-Legendre nodes/weights on (-1, 1), computed once by Newton
// iteration on P_64 (symmetric, ~1e-15 accurate).
struct GaussLegendre64 {
  std::array<double, 64> x{};
  std::array<double, 64> w{};

  GaussLegendre64() {
    constexpr int n = 64;
    constexpr double pi = 3.14159265358979323846;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
      double z = std::cos(pi * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (z * p0 - p1) / (z * z - 1.0);
        const double z1 = z;
        z = z1 - p0 / pp;
        if (std::fabs(z - z1) < 1e-15) break;
      }
      x[i] = -z;
      x[n - 1 - i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
      w[n - 1 - i] = w[i];
    }
  }
};

const GaussLegendre64& gl64() {
  static const GaussLegendre64 table;
  return table;
}

}  // namespace

double standard_basis_eval(std::span<const double> nodes, std::size_t j,
                           double y) {
  if (j >= nodes.size())
    throw std::invalid_argument("standard_basis_eval: index out of range");
  double v = 1.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k == j) continue;
    v *= (y - nodes[k]) / (nodes[j] - nodes[k]);
  }
  return v;
}

double hierarchical_basis_eval(std::span<const double> nodes,
                               std::size_t level, double y) {
  if (level >= nodes.size())
    throw std::invalid_argument("hierarchical_basis_eval: level out of range");
  double v = 1.0;
  for (std::size_t k = 0; k < level; ++k)
    v *= (y - nodes[k]) / (nodes[level] - nodes[k]);
  return v;
}

std::vector<double> hierarchical_surpluses(std::span<const double> nodes,
                                           std::span<const double> values) {
  if (nodes.size() != values.size())
    throw std::invalid_argument("hierarchical_surpluses: nodes/values length mismatch");
  const std::size_t m = nodes.size();
  std::vector<double> s(m);
  for (std::size_t i = 0; i < m; ++i) {
    double acc = values[i];
    for (std::size_t k = 0; k < i; ++k)
      acc -= s[k] * hierarchical_basis_eval(nodes, k, nodes[i]);
    s[i] = acc;
  }
  return s;
}

double interpolate_1d(std::span<const double> nodes,
                      std::span<const double> values, double y) {
  const std::vector<double> s = hierarchical_surpluses(nodes, values);
  double acc = 0.0;
  double basis = 1.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) basis = hierarchical_basis_eval(nodes, i, y);
    acc += s[i] * basis;
  }
  return acc;
}

double lebesgue_constant(std::span<const double> nodes,
                         std::size_t probe_count) {
  if (nodes.empty())
    throw std::invalid_argument("lebesgue_constant: empty grid");
  if (nodes.size() == 1) return 1.0;

  std::vector<double> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  const double lo = sorted.front(), hi = sorted.back();

  std::vector<double> probes;
  probes.reserve(probe_count + sorted.size());
  for (std::size_t i = 0; i < probe_count; ++i)
    probes.push_back(lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(probe_count - 1));
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    probes.push_back(0.5 * (sorted[i] + sorted[i + 1]));

  double best = 0.0;
  for (double y : probes) {
    double sum = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      sum += std::fabs(standard_basis_eval(nodes, j, y));
    best = std::max(best, sum);
  }
  return best;
}

double expectation(const Distribution& dist,
                   const std::function<double(double)>& f) {
  const Interval sup = dist.support();
  const GaussLegendre64& gl = gl64();

  double prev = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t panels = 1; panels <= 1024; panels *= 2) {
    double total = 0.0;
    const double h = sup.width() / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
      const double mid = sup.lo + (static_cast<double>(p) + 0.5) * h;
      double acc = 0.0;
      for (int k = 0; k < 64; ++k) {
        const double y = mid + 0.5 * h * gl.x[k];
        acc += gl.w[k] * f(y) * dist.pdf(y);
      }
      total += acc * 0.5 * h;
    }
    if (panels > 1 &&
        std::fabs(total - prev) <= 1e-12 * std::max(1.0, std::fabs(total)))
      return total;
    prev = total;
  }
  throw std::runtime_error(
      "expectation: panel doubling did not converge within 1024 panels for " +
      dist.describe());
}

UnivariateRule::UnivariateRule(std::shared_ptr<LejaSequence> seq)
    : seq_(std::move(seq)) {
  if (!seq_) throw std::invalid_argument("UnivariateRule: null sequence");
}

double UnivariateRule::weight(std::size_t level) {
  while (weights_.size() <= level) {
    const std::size_t i = weights_.size();
    const std::span<const double> nodes = seq_->grid(i);
    weights_.push_back(expectation(
        seq_->dist(), [&](double y) { return hierarchical_basis_eval(nodes, i, y); }));
  }
  return weights_[level];
}

double UnivariateRule::interpolate(std::size_t level,
                                   std::span<const double> values, double y) {
  if (values.size() != level + 1)
    throw std::invalid_argument(
        "UnivariateRule::interpolate: values must hold level+1 entries");
  return interpolate_1d(seq_->grid(level), values, y);
}

void UnivariateRule::ensure_steps(std::size_t level) {
  if (step_.size() > level) return;
  seq_->extend_to(level + 1);
  if (step_.empty()) step_.push_back(1.0);  // level 0 placeholder
  const std::span<const double> nodes = seq_->nodes();
  for (std::size_t i = step_.size(); i <= level; ++i) {
    double r = 1.0;
    for (std::size_t k = 0; k + 1 < i; ++k)
      r *= (nodes[i - 1] - nodes[k]) / (nodes[i] - nodes[k]);
    step_.push_back(r / (nodes[i] - nodes[i - 1]));
  }
}

void UnivariateRule::basis_row(std::size_t max_level, double y,
                               std::span<double> basis) {
  ensure_steps(max_level);
  const std::span<const double> nodes = seq_->nodes();
  basis[0] = 1.0;
  for (std::size_t i = 1; i <= max_level; ++i)
    basis[i] = basis[i - 1] * (y - nodes[i - 1]) * step_[i];
}

}  // namespace lejasparse
