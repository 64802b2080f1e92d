#include "lejasparse/multiindex.hpp"

#include <algorithm>
#include <stdexcept>

namespace lejasparse {

namespace {

// all backward neighbors of idx are members of lambda
bool backward_closed_at(const MultiIndexSet& lambda, const MultiIndex& idx) {
  MultiIndex probe = idx;
  for (std::size_t n = 0; n < idx.size(); ++n) {
    if (idx[n] == 0) continue;
    probe[n] -= 1;
    const bool ok = lambda.contains(probe);
    probe[n] += 1;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

MultiIndexSet::MultiIndexSet(std::size_t dimension) : dim_(dimension) {
  if (dimension == 0)
    throw std::invalid_argument("MultiIndexSet: dimension must be >= 1");
}

bool MultiIndexSet::insert(const MultiIndex& idx) {
  if (idx.size() != dim_)
    throw std::invalid_argument("MultiIndexSet::insert: dimension mismatch");
  if (std::any_of(idx.begin(), idx.end(), [](int v) { return v < 0; }))
    throw std::invalid_argument("MultiIndexSet::insert: negative level");
  if (!lookup_.insert(idx).second) return false;
  members_.push_back(idx);
  return true;
}

bool is_downward_closed(const MultiIndexSet& set) {
  for (const MultiIndex& idx : set.members())
    if (!backward_closed_at(set, idx)) return false;
  return true;
}

MultiIndexSet admissible_set(const MultiIndexSet& lambda) {
  if (lambda.empty())
    throw std::invalid_argument("admissible_set: empty input set");
  if (!is_downward_closed(lambda))
    throw std::invalid_argument("admissible_set: input is not downward-closed");

  MultiIndexSet result(lambda.dimension());
  for (const MultiIndex& idx : lambda.members()) {
    MultiIndex fwd = idx;
    for (std::size_t n = 0; n < fwd.size(); ++n) {
      fwd[n] += 1;
      if (!lambda.contains(fwd) && backward_closed_at(lambda, fwd))
        result.insert(fwd);
      fwd[n] -= 1;
    }
  }
  return result;
}

namespace {

void enumerate_total_degree(MultiIndex& idx, std::size_t n, int remaining,
                            MultiIndexSet& out) {
  if (n == idx.size()) {
    out.insert(idx);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    idx[n] = v;
    enumerate_total_degree(idx, n + 1, remaining - v, out);
  }
  idx[n] = 0;
}

}  // namespace

MultiIndexSet isotropic_set(std::size_t dimension, int i_max) {
  if (i_max < 0) throw std::invalid_argument("isotropic_set: i_max must be >= 0");
  MultiIndexSet result(dimension);
  MultiIndex idx(dimension, 0);
  enumerate_total_degree(idx, 0, i_max, result);
  return result;
}

AdmissibleFrontier::AdmissibleFrontier(const MultiIndexSet& lambda)
    : frontier_(admissible_set(lambda)) {}

void AdmissibleFrontier::accept(const MultiIndex& idx, MultiIndexSet& lambda) {
  if (!frontier_.contains(idx))
    throw std::invalid_argument("AdmissibleFrontier::accept: index not admissible");
  lambda.insert(idx);

  MultiIndexSet next(frontier_.dimension());
  for (const MultiIndex& m : frontier_.members())
    if (m != idx) next.insert(m);
  MultiIndex fwd = idx;
  for (std::size_t n = 0; n < fwd.size(); ++n) {
    fwd[n] += 1;
    if (!lambda.contains(fwd) && !next.contains(fwd) &&
        backward_closed_at(lambda, fwd))
      next.insert(fwd);
    fwd[n] -= 1;
  }
  frontier_ = std::move(next);
}

}  // namespace lejasparse
