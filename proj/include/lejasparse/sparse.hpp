#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lejasparse/distributions.hpp"
#include "lejasparse/multiindex.hpp"
#include "lejasparse/types.hpp"
#include "lejasparse/univariate.hpp"

namespace lejasparse {

inline constexpr std::uint64_t kUnlimitedBudget = UINT64_MAX;

struct BuildLogEntry {
  MultiIndex accepted;
  double contribution = 0.0;  // |surplus| of the accepted index
  std::uint64_t cost = 0;     // cumulative evaluations at acceptance time
};

enum class Termination { budget, tolerance };

struct BuildReport {
  std::uint64_t iterations = 0;  // loop passes, including the exiting one
  double final_eta_tot = 0.0;
  Termination reason = Termination::budget;
  std::vector<BuildLogEntry> log;  // one entry per accepted index
};

// Shared per-dimension sequences and weight caches. Node sequences depend
// only on the distributions, so repeated builds over the same inputs reuse
// them (extension is append-only and never changes existing nodes).
struct SequenceWorkspace {
  std::vector<std::shared_ptr<UnivariateRule>> rules;

  static SequenceWorkspace create(std::span<const Distribution> dists);
};

// Immutable sparse hierarchical interpolant sum_i s_i * L_i(y) on a
// downward-closed multi-index set. Safe for concurrent evaluation.
class SparseSurrogate {
 public:
  SparseSurrogate(SparseSurrogate&& other) noexcept;
  SparseSurrogate& operator=(SparseSurrogate&& other) noexcept;

  std::size_t dimension() const { return dists_.size(); }
  const std::vector<Distribution>& dists() const { return dists_; }
  const MultiIndexSet& accepted() const { return accepted_; }
  std::span<const double> surpluses() const { return surpluses_; }
  double surplus(std::size_t k) const { return surpluses_[k]; }
  // Grid node associated with accepted index k (per-dimension Leja nodes).
  const std::vector<double>& node(std::size_t k) const { return nodes_[k]; }
  std::uint64_t eval_count() const { return eval_count_; }
  const std::shared_ptr<UnivariateRule>& rule(std::size_t dim) const {
    return rules_[dim];
  }

  double eval(std::span<const double> y) const;
  // Multivariate hierarchical basis L_i(y), factor-ratio form.
  double basis(const MultiIndex& idx, std::span<const double> y) const;

  // Evaluations that fell outside the product effective support.
  std::uint64_t extrapolation_count() const { return extrapolations_.load(); }

  void save(const std::string& path) const;
  std::string to_json_string() const;
  static SparseSurrogate load(const std::string& path);
  static SparseSurrogate from_json_string(const std::string& text);

 private:
  friend class SparseBuilder;

  SparseSurrogate(std::vector<Distribution> dists,
                  std::vector<std::shared_ptr<UnivariateRule>> rules,
                  std::size_t dimension);

  void push_term(const MultiIndex& idx, std::vector<double> node, double surplus);
  void finalize();

  std::vector<Distribution> dists_;
  std::vector<std::shared_ptr<UnivariateRule>> rules_;
  MultiIndexSet accepted_;
  std::vector<double> surpluses_;
  std::vector<std::vector<double>> nodes_;
  std::uint64_t eval_count_ = 0;

  // evaluation fast path: per-term nonzero (dimension, level) pairs and the
  // per-dimension maximum level
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> nonzero_;
  std::vector<std::size_t> max_level_;
  std::vector<std::size_t> basis_offset_;
  mutable std::atomic<std::uint64_t> extrapolations_{0};
};

// Dimension-adaptive construction: greedily accepts the admissible index of
// largest |surplus| until the evaluation count C = #Lambda + #frontier
// reaches `budget` or the frontier's total contribution drops to
// `tolerance`. The returned surrogate uses the merged set
// Lambda U frontier, whose surpluses are already available.
std::pair<SparseSurrogate, BuildReport> adaptive_build(
    const ModelFn& model, std::span<const Distribution> dists,
    std::uint64_t budget, double tolerance,
    const MultiIndexSet* lambda_init = nullptr,
    SequenceWorkspace* workspace = nullptr);

// Surpluses over a fixed downward-closed set, computed in a linear extension
// of the componentwise order (the input order where valid). The result does
// not depend on the extension chosen.
SparseSurrogate build_on_fixed_set(const ModelFn& model,
                                   std::span<const Distribution> dists,
                                   const MultiIndexSet& lambda,
                                   SequenceWorkspace* workspace = nullptr);

}  // namespace lejasparse
