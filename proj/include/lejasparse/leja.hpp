#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lejasparse/distributions.hpp"

namespace lejasparse {

enum class LejaKind { unweighted, symmetric, weighted };

// Nested sequence of Leja interpolation nodes for one dimension. Unweighted
// and symmetric sequences live on [-1, 1]; weighted sequences maximize
// sqrt(pdf(y)) * prod |y - y_k| over the distribution's effective support.
//
// Sequences are append-only: extending never changes existing nodes, so any
// prefix seen by a reader stays valid (levels are grid prefixes under
// m(i) = i + 1). Extension itself is not thread-safe.
class LejaSequence {
 public:
  // First node is the density mode, located with the same search machinery
  // as later nodes (empty distance product).
  static LejaSequence weighted(const Distribution& dist);
  // Explicit initial node; must lie inside the effective support.
  static LejaSequence weighted(const Distribution& dist, double y0);
  static LejaSequence unweighted(double y0 = 1.0);
  static LejaSequence symmetric();
  // Rebuild from stored nodes (deserialization); nodes are kept verbatim.
  static LejaSequence from_nodes(const Distribution& dist, LejaKind kind,
                                 std::vector<double> nodes);

  LejaKind kind() const { return kind_; }
  const Distribution& dist() const { return dist_; }

  std::size_t size() const { return nodes_.size(); }
  double node(std::size_t j) const { return nodes_[j]; }
  std::span<const double> nodes() const { return nodes_; }
  // Log-objective achieved when node j was appended.
  double objective(std::size_t j) const { return objectives_[j]; }

  // Appends one node by solving the 1-D maximization problem.
  void extend();
  void extend_to(std::size_t count);
  // Grid Z_level = first level+1 nodes, extending on demand. The returned
  // span is invalidated by the next extension.
  std::span<const double> grid(std::size_t level);

 private:
  LejaSequence(const Distribution& dist, LejaKind kind);

  double log_objective(double y) const;
  void ensure_candidates();
  void append_node(double y);
  // Grid-scan plus golden-section refinement of the current objective.
  std::pair<double, double> search_max() const;

  Distribution dist_;
  LejaKind kind_;
  bool use_weight_;
  std::vector<double> nodes_;
  std::vector<double> objectives_;

  // candidate grid, equispaced in CDF space; objectives accumulate as nodes
  // are appended so each extension scans in O(grid size)
  std::vector<double> cand_y_;
  std::vector<double> cand_obj_;
};

}  // namespace lejasparse
