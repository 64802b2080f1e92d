#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace lejasparse {

// Vector of per-dimension interpolation levels.
using MultiIndex = std::vector<int>;

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& idx) const noexcept {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (int v : idx) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Duplicate-free collection of multi-indices of a fixed dimension.
// Insertion order is preserved so adaptive-loop traces are reproducible;
// membership tests are O(1) through a hashed lookup.
class MultiIndexSet {
 public:
  explicit MultiIndexSet(std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const MultiIndex& idx) const { return lookup_.contains(idx); }
  // Returns false when the index is already present; throws on a dimension
  // mismatch or negative entry.
  bool insert(const MultiIndex& idx);
  const std::vector<MultiIndex>& members() const { return members_; }

 private:
  std::size_t dim_;
  std::vector<MultiIndex> members_;
  std::unordered_set<MultiIndex, MultiIndexHash> lookup_;
};

// True iff every member's backward neighbors are all members themselves.
bool is_downward_closed(const MultiIndexSet& set);

// The admissible frontier of a downward-closed set: all indices outside the
// set whose backward neighbors lie inside it. Throws when the input is empty
// or not downward-closed.
MultiIndexSet admissible_set(const MultiIndexSet& lambda);

// Total-degree set { i : sum_n i_n <= i_max }, downward-closed by
// construction; cardinality is binomial(dimension + i_max, dimension).
MultiIndexSet isotropic_set(std::size_t dimension, int i_max);

// Incrementally maintained admissible frontier of a growing downward-closed
// set. After each acceptance only the forward neighbors of the accepted
// index are re-examined.
class AdmissibleFrontier {
 public:
  explicit AdmissibleFrontier(const MultiIndexSet& lambda);

  const std::vector<MultiIndex>& indices() const { return frontier_.members(); }
  std::size_t size() const { return frontier_.size(); }

  // Moves `idx` from the frontier into `lambda` and inserts any forward
  // neighbors of `idx` that became admissible.
  void accept(const MultiIndex& idx, MultiIndexSet& lambda);

 private:
  MultiIndexSet frontier_;
};

}  // namespace lejasparse
