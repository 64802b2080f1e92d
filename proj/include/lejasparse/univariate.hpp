#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "lejasparse/distributions.hpp"
#include "lejasparse/leja.hpp"

namespace lejasparse {

// Standard Lagrange cardinal polynomial l_j on the given grid:
// prod_{k != j} (y - y_k) / (y_j - y_k); identically 1 on a single node.
double standard_basis_eval(std::span<const double> nodes, std::size_t j,
                           double y);

// Hierarchical basis polynomial of the given level: prod_{k < level}
// (y - y_k) / (y_level - y_k); identically 1 at level 0. Factors are folded
// one ratio at a time so wide supports do not overflow the running product.
double hierarchical_basis_eval(std::span<const double> nodes,
                               std::size_t level, double y);

// Coefficients s_i of the hierarchical expansion through (nodes, values):
// s_i = values[i] - sum_{k<i} s_k * l_k(nodes[i]).
std::vector<double> hierarchical_surpluses(std::span<const double> nodes,
                                           std::span<const double> values);

// Value at y of the unique interpolating polynomial through (nodes, values),
// evaluated through the hierarchical form.
double interpolate_1d(std::span<const double> nodes,
                      std::span<const double> values, double y);

// Lower bound on the Lebesgue constant: max of sum_j |l_j| over equispaced
// probes on the node hull plus the midpoints between adjacent nodes.
double lebesgue_constant(std::span<const double> nodes,
                         std::size_t probe_count = 10'000);

// E[f] under dist: int f(y) pdf(y) dy over the effective support, with
// composite 64-point Gauss-Legendre panels. The panel count doubles until
// two successive estimates agree to 1e-12 (relative, floored at 1); throws
// if the cap of 1024 panels is reached without convergence.
double expectation(const Distribution& dist,
                   const std::function<double(double)>& f);

// Per-dimension interpolation rule: a Leja sequence together with cached
// quadrature weights w_i = E[l_i] of the hierarchical basis and the cached
// level-step ratios used for O(max level) basis evaluation.
class UnivariateRule {
 public:
  explicit UnivariateRule(std::shared_ptr<LejaSequence> seq);

  const LejaSequence& sequence() const { return *seq_; }
  LejaSequence& sequence() { return *seq_; }
  const std::shared_ptr<LejaSequence>& sequence_ptr() const { return seq_; }
  const Distribution& dist() const { return seq_->dist(); }

  // Quadrature weight of the hierarchical basis at `level`; computed on
  // demand (extending the sequence if needed) and cached.
  double weight(std::size_t level);
  std::size_t cached_weights() const { return weights_.size(); }

  // Interpolate data given at the level grid Z_level (level+1 values).
  double interpolate(std::size_t level, std::span<const double> values,
                     double y);

  // Fills basis[0..max_level] with the hierarchical basis values at y in
  // O(max_level) using cached step ratios.
  void basis_row(std::size_t max_level, double y, std::span<double> basis);

 private:
  void ensure_steps(std::size_t level);

  std::shared_ptr<LejaSequence> seq_;
  std::vector<double> weights_;
  // step_[i] = prod_{k<i-1} (y_{i-1}-y_k)/(y_i-y_k) / (y_i - y_{i-1}),
  // so that l_i(y) = l_{i-1}(y) * (y - y_{i-1}) * step_[i].
  std::vector<double> step_;
};

}  // namespace lejasparse
