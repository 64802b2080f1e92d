#include "lejasparse/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace lejasparse {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::shared_ptr<UnivariateRule>> make_rules(
    std::span<const Distribution> dists) {
  std::vector<std::shared_ptr<UnivariateRule>> rules;
  rules.reserve(dists.size());
  for (const Distribution& d : dists)
    rules.push_back(std::make_shared<UnivariateRule>(
        std::make_shared<LejaSequence>(LejaSequence::weighted(d))));
  return rules;
}

json distribution_to_json(const Distribution& d) {
  json j;
  switch (d.kind()) {
    case DistKind::uniform:
      j["type"] = "Uniform";
      j["a"] = d.a();
      j["b"] = d.b();
      break;
    case DistKind::normal:
      j["type"] = "Normal";
      j["mu"] = d.mu();
      j["sigma"] = d.sigma();
      break;
    case DistKind::truncated_normal:
      j["type"] = "TruncatedNormal";
      j["mu"] = d.mu();
      j["sigma"] = d.sigma();
      j["l"] = d.lower();
      j["u"] = d.upper();
      break;
    case DistKind::gumbel:
      j["type"] = "Gumbel";
      j["loc"] = d.location();
      j["scale"] = d.scale();
      break;
  }
  return j;
}

Distribution distribution_from_json_local(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "Uniform")
    return Distribution::uniform(j.at("a").get<double>(), j.at("b").get<double>());
  if (type == "Normal")
    return Distribution::normal(j.at("mu").get<double>(), j.at("sigma").get<double>());
  if (type == "TruncatedNormal")
    return Distribution::truncated_normal(
        j.at("mu").get<double>(), j.at("sigma").get<double>(),
        j.at("l").get<double>(), j.at("u").get<double>());
  if (type == "Gumbel")
    return Distribution::gumbel(j.at("loc").get<double>(), j.at("scale").get<double>());
  throw std::invalid_argument("unknown distribution type: " + type);
}

const char* kind_name(LejaKind k) {
  switch (k) {
    case LejaKind::unweighted: return "unweighted";
    case LejaKind::symmetric: return "symmetric";
    case LejaKind::weighted: return "weighted";
  }
  return "weighted";
}

LejaKind kind_from_name(const std::string& name) {
  if (name == "unweighted") return LejaKind::unweighted;
  if (name == "symmetric") return LejaKind::symmetric;
  if (name == "weighted") return LejaKind::weighted;
  throw std::invalid_argument("unknown sequence kind: " + name);
}

}  // namespace

SequenceWorkspace SequenceWorkspace::create(std::span<const Distribution> dists) {
  return SequenceWorkspace{make_rules(dists)};
}

SparseSurrogate::SparseSurrogate(std::vector<Distribution> dists,
                                 std::vector<std::shared_ptr<UnivariateRule>> rules,
                                 std::size_t dimension)
    : dists_(std::move(dists)),
      rules_(std::move(rules)),
      accepted_(dimension),
      max_level_(dimension, 0) {}

SparseSurrogate::SparseSurrogate(SparseSurrogate&& other) noexcept
    : dists_(std::move(other.dists_)),
      rules_(std::move(other.rules_)),
      accepted_(std::move(other.accepted_)),
      surpluses_(std::move(other.surpluses_)),
      nodes_(std::move(other.nodes_)),
      eval_count_(other.eval_count_),
      nonzero_(std::move(other.nonzero_)),
      max_level_(std::move(other.max_level_)),
      basis_offset_(std::move(other.basis_offset_)),
      extrapolations_(other.extrapolations_.load()) {}

SparseSurrogate& SparseSurrogate::operator=(SparseSurrogate&& other) noexcept {
  if (this != &other) {
    dists_ = std::move(other.dists_);
    rules_ = std::move(other.rules_);
    accepted_ = std::move(other.accepted_);
    surpluses_ = std::move(other.surpluses_);
    nodes_ = std::move(other.nodes_);
    eval_count_ = other.eval_count_;
    nonzero_ = std::move(other.nonzero_);
    max_level_ = std::move(other.max_level_);
    basis_offset_ = std::move(other.basis_offset_);
    extrapolations_.store(other.extrapolations_.load());
  }
  return *this;
}

void SparseSurrogate::push_term(const MultiIndex& idx, std::vector<double> node,
                                double surplus) {
  if (!accepted_.insert(idx))
    throw std::logic_error("SparseSurrogate: duplicate term");
  surpluses_.push_back(surplus);
  nodes_.push_back(std::move(node));
  auto& nz = nonzero_.emplace_back();
  for (std::size_t n = 0; n < idx.size(); ++n) {
    if (idx[n] == 0) continue;
    nz.emplace_back(static_cast<std::uint32_t>(n),
                    static_cast<std::uint32_t>(idx[n]));
    max_level_[n] = std::max(max_level_[n], static_cast<std::size_t>(idx[n]));
  }
}

void SparseSurrogate::finalize() {
  basis_offset_.assign(dimension() + 1, 0);
  for (std::size_t n = 0; n < dimension(); ++n)
    basis_offset_[n + 1] = basis_offset_[n] + max_level_[n] + 1;
  // warm the cached step ratios so concurrent eval never mutates the rules
  std::vector<double> scratch(basis_offset_.back());
  for (std::size_t n = 0; n < dimension(); ++n)
    rules_[n]->basis_row(max_level_[n], dists_[n].support().lo,
                         std::span<double>(scratch).subspan(basis_offset_[n]));
}

double SparseSurrogate::eval(std::span<const double> y) const {
  if (y.size() != dimension())
    throw std::invalid_argument("SparseSurrogate::eval: dimension mismatch");
  for (std::size_t n = 0; n < dimension(); ++n) {
    if (!dists_[n].support().contains(y[n])) {
      extrapolations_.fetch_add(1, std::memory_order_relaxed);
      break;
    }
  }

  std::vector<double> basis(basis_offset_.back());
  for (std::size_t n = 0; n < dimension(); ++n)
    rules_[n]->basis_row(max_level_[n], y[n],
                         std::span<double>(basis).subspan(basis_offset_[n]));

  double acc = 0.0;
  for (std::size_t k = 0; k < surpluses_.size(); ++k) {
    double term = surpluses_[k];
    for (const auto& [n, lev] : nonzero_[k]) term *= basis[basis_offset_[n] + lev];
    acc += term;
  }
  return acc;
}

double SparseSurrogate::basis(const MultiIndex& idx,
                              std::span<const double> y) const {
  if (idx.size() != dimension() || y.size() != dimension())
    throw std::invalid_argument("SparseSurrogate::basis: dimension mismatch");
  double v = 1.0;
  for (std::size_t n = 0; n < dimension(); ++n) {
    auto& seq = rules_[n]->sequence();
    seq.extend_to(static_cast<std::size_t>(idx[n]) + 1);
    v *= hierarchical_basis_eval(seq.nodes(), static_cast<std::size_t>(idx[n]),
                                 y[n]);
  }
  return v;
}

std::string SparseSurrogate::to_json_string() const {
  json j;
  j["format"] = "sparse-leja-surrogate";
  j["version"] = 1;
  j["dimension"] = dimension();
  j["distributions"] = json::array();
  for (const Distribution& d : dists_)
    j["distributions"].push_back(distribution_to_json(d));
  j["sequence_kinds"] = json::array();
  j["nodes_1d"] = json::array();
  for (std::size_t n = 0; n < dimension(); ++n) {
    const auto& seq = rules_[n]->sequence();
    j["sequence_kinds"].push_back(kind_name(seq.kind()));
    json nodes = json::array();
    for (std::size_t i = 0; i <= max_level_[n]; ++i) nodes.push_back(seq.node(i));
    j["nodes_1d"].push_back(std::move(nodes));
  }
  j["indices"] = json::array();
  for (const MultiIndex& idx : accepted_.members()) j["indices"].push_back(idx);
  j["surpluses"] = surpluses_;
  j["eval_count"] = eval_count_;
  return j.dump(2);
}

void SparseSurrogate::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << to_json_string() << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

SparseSurrogate SparseSurrogate::from_json_string(const std::string& text) {
  const json j = json::parse(text);
  if (j.at("format").get<std::string>() != "sparse-leja-surrogate")
    throw std::invalid_argument("not a surrogate file");
  const std::size_t dim = j.at("dimension").get<std::size_t>();

  std::vector<Distribution> dists;
  for (const json& dj : j.at("distributions"))
    dists.push_back(distribution_from_json_local(dj));
  if (dists.size() != dim) throw std::invalid_argument("surrogate file: bad dimension");

  std::vector<std::shared_ptr<UnivariateRule>> rules;
  for (std::size_t n = 0; n < dim; ++n) {
    const LejaKind kind = kind_from_name(j.at("sequence_kinds").at(n).get<std::string>());
    std::vector<double> nodes = j.at("nodes_1d").at(n).get<std::vector<double>>();
    rules.push_back(std::make_shared<UnivariateRule>(std::make_shared<LejaSequence>(
        LejaSequence::from_nodes(dists[n], kind, std::move(nodes)))));
  }

  SparseSurrogate s(std::move(dists), std::move(rules), dim);
  const json& indices = j.at("indices");
  const std::vector<double> surpluses = j.at("surpluses").get<std::vector<double>>();
  if (indices.size() != surpluses.size())
    throw std::invalid_argument("surrogate file: indices/surpluses mismatch");
  for (std::size_t k = 0; k < surpluses.size(); ++k) {
    const MultiIndex idx = indices.at(k).get<MultiIndex>();
    if (idx.size() != dim) throw std::invalid_argument("surrogate file: bad index");
    std::vector<double> node(dim);
    for (std::size_t n = 0; n < dim; ++n)
      node[n] = s.rules_[n]->sequence().grid(static_cast<std::size_t>(idx[n]))[idx[n]];
    s.push_term(idx, std::move(node), surpluses[k]);
  }
  s.eval_count_ = j.at("eval_count").get<std::uint64_t>();
  s.finalize();
  return s;
}

SparseSurrogate SparseSurrogate::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return from_json_string(text);
}

// Growing interpolant used during construction; terms mirror SparseSurrogate
// but support incremental appends and partial evaluation.
class SparseBuilder {
 public:
  SparseBuilder(std::span<const Distribution> dists,
                std::vector<std::shared_ptr<UnivariateRule>> rules)
      : dists_(dists.begin(), dists.end()),
        rules_(std::move(rules)),
        accepted_(dists.size()),
        max_level_(dists.size(), 0) {}

  std::size_t dimension() const { return dists_.size(); }
  MultiIndexSet& accepted() { return accepted_; }

  std::vector<double> grid_node(const MultiIndex& idx) {
    std::vector<double> y(dimension());
    for (std::size_t n = 0; n < dimension(); ++n)
      y[n] = rules_[n]->sequence().grid(static_cast<std::size_t>(idx[n]))[idx[n]];
    return y;
  }

  // interpolant over the accepted terms only
  double eval(std::span<const double> y) {
    std::size_t total = 0;
    for (std::size_t n = 0; n < dimension(); ++n) total += max_level_[n] + 1;
    basis_.resize(total);
    std::size_t off = 0;
    offsets_.resize(dimension());
    for (std::size_t n = 0; n < dimension(); ++n) {
      offsets_[n] = off;
      rules_[n]->basis_row(max_level_[n], y[n],
                           std::span<double>(basis_).subspan(off));
      off += max_level_[n] + 1;
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < surpluses_.size(); ++k) {
      double term = surpluses_[k];
      for (const auto& [n, lev] : nonzero_[k]) term *= basis_[offsets_[n] + lev];
      acc += term;
    }
    return acc;
  }

  // hierarchical surplus of an index whose backward neighbors are accepted
  double compute_surplus(const MultiIndex& idx, const ModelFn& model,
                         std::vector<double>& node_out) {
    node_out = grid_node(idx);
    return model(node_out) - eval(node_out);
  }

  void add_term(const MultiIndex& idx, std::vector<double> node, double surplus) {
    if (!accepted_.contains(idx)) accepted_.insert(idx);
    surpluses_.push_back(surplus);
    nodes_.push_back(std::move(node));
    auto& nz = nonzero_.emplace_back();
    for (std::size_t n = 0; n < idx.size(); ++n) {
      if (idx[n] == 0) continue;
      nz.emplace_back(static_cast<std::uint32_t>(n),
                      static_cast<std::uint32_t>(idx[n]));
      max_level_[n] = std::max(max_level_[n], static_cast<std::size_t>(idx[n]));
    }
    order_.push_back(idx);
  }

  SparseSurrogate finish(std::uint64_t eval_count) {
    SparseSurrogate s(dists_, rules_, dimension());
    for (std::size_t k = 0; k < order_.size(); ++k)
      s.push_term(order_[k], std::move(nodes_[k]), surpluses_[k]);
    s.eval_count_ = eval_count;
    s.finalize();
    return s;
  }

 private:
  std::vector<Distribution> dists_;
  std::vector<std::shared_ptr<UnivariateRule>> rules_;
  MultiIndexSet accepted_;
  std::vector<MultiIndex> order_;
  std::vector<double> surpluses_;
  std::vector<std::vector<double>> nodes_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> nonzero_;
  std::vector<std::size_t> max_level_;
  std::vector<double> basis_;
  std::vector<std::size_t> offsets_;
};

namespace {

// Stable topological order: keeps the input order wherever it is already a
// valid linear extension of the componentwise partial order.
std::vector<MultiIndex> linear_extension(const MultiIndexSet& lambda) {
  const auto& members = lambda.members();
  std::vector<MultiIndex> order;
  order.reserve(members.size());
  MultiIndexSet placed(lambda.dimension());
  std::vector<bool> done(members.size(), false);
  const auto ready = [&](const MultiIndex& idx) {
    MultiIndex probe = idx;
    for (std::size_t n = 0; n < idx.size(); ++n) {
      if (idx[n] == 0) continue;
      probe[n] -= 1;
      const bool ok = placed.contains(probe);
      probe[n] += 1;
      if (!ok) return false;
    }
    return true;
  };
  while (order.size() < members.size()) {
    bool progressed = false;
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (done[k] || !ready(members[k])) continue;
      placed.insert(members[k]);
      order.push_back(members[k]);
      done[k] = true;
      progressed = true;
    }
    if (!progressed)
      throw std::invalid_argument("set is not downward-closed");
  }
  return order;
}

struct PendingTerm {
  std::vector<double> node;
  double surplus = 0.0;
};

}  // namespace

std::pair<SparseSurrogate, BuildReport> adaptive_build(
    const ModelFn& model, std::span<const Distribution> dists,
    std::uint64_t budget, double tolerance, const MultiIndexSet* lambda_init,
    SequenceWorkspace* workspace) {
  if (dists.empty()) throw std::invalid_argument("adaptive_build: no distributions");
  if (budget < 1 && !(tolerance > 0.0))
    throw std::invalid_argument("adaptive_build: need budget >= 1 or tolerance > 0");

  MultiIndexSet origin(dists.size());
  if (lambda_init == nullptr) {
    origin.insert(MultiIndex(dists.size(), 0));
    lambda_init = &origin;
  }
  if (lambda_init->empty() || lambda_init->dimension() != dists.size())
    throw std::invalid_argument("adaptive_build: bad initial index set");
  if (!is_downward_closed(*lambda_init))
    throw std::invalid_argument("adaptive_build: initial set not downward-closed");

  SequenceWorkspace local;
  if (workspace == nullptr) {
    local = SequenceWorkspace::create(dists);
    workspace = &local;
  }

  SparseBuilder builder(dists, workspace->rules);
  std::uint64_t eval_count = 0;

  // surpluses of the initial set, in a linear extension of the partial order
  for (const MultiIndex& idx : linear_extension(*lambda_init)) {
    std::vector<double> node;
    const double s = builder.compute_surplus(idx, model, node);
    builder.add_term(idx, std::move(node), s);
    ++eval_count;
  }

  AdmissibleFrontier frontier(builder.accepted());
  std::unordered_map<MultiIndex, PendingTerm, MultiIndexHash> pending;

  BuildReport report;
  double eta_tot = 0.0;
  while (true) {
    ++report.iterations;
    for (const MultiIndex& idx : frontier.indices()) {
      if (pending.contains(idx)) continue;
      PendingTerm term;
      term.surplus = builder.compute_surplus(idx, model, term.node);
      pending.emplace(idx, std::move(term));
      ++eval_count;
    }

    eta_tot = 0.0;
    for (const MultiIndex& idx : frontier.indices())
      eta_tot += std::fabs(pending.at(idx).surplus);
    const std::uint64_t cost = builder.accepted().size() + frontier.size();

    if (cost >= budget || eta_tot <= tolerance) {
      report.reason = cost >= budget ? Termination::budget : Termination::tolerance;
      break;
    }

    // argmax of |surplus|; ties resolve to the lexicographically smallest index
    const MultiIndex* best = nullptr;
    double best_eta = -1.0;
    for (const MultiIndex& idx : frontier.indices()) {
      const double eta = std::fabs(pending.at(idx).surplus);
      if (eta > best_eta ||
          (eta == best_eta && best != nullptr &&
           std::lexicographical_compare(idx.begin(), idx.end(), best->begin(),
                                        best->end()))) {
        best = &idx;
        best_eta = eta;
      }
    }
    const MultiIndex istar = *best;
    PendingTerm term = std::move(pending.at(istar));
    pending.erase(istar);
    frontier.accept(istar, builder.accepted());
    builder.add_term(istar, std::move(term.node), term.surplus);
    report.log.push_back({istar, best_eta, cost});
  }
  report.final_eta_tot = eta_tot;

  // merge the frontier, whose surpluses are already computed
  for (const MultiIndex& idx : frontier.indices()) {
    PendingTerm& term = pending.at(idx);
    builder.add_term(idx, std::move(term.node), term.surplus);
  }
  return {builder.finish(eval_count), std::move(report)};
}

SparseSurrogate build_on_fixed_set(const ModelFn& model,
                                   std::span<const Distribution> dists,
                                   const MultiIndexSet& lambda,
                                   SequenceWorkspace* workspace) {
  if (dists.empty()) throw std::invalid_argument("build_on_fixed_set: no distributions");
  if (lambda.empty() || lambda.dimension() != dists.size())
    throw std::invalid_argument("build_on_fixed_set: bad index set");

  SequenceWorkspace local;
  if (workspace == nullptr) {
    local = SequenceWorkspace::create(dists);
    workspace = &local;
  }

  SparseBuilder builder(dists, workspace->rules);
  std::uint64_t eval_count = 0;
  for (const MultiIndex& idx : linear_extension(lambda)) {
    std::vector<double> node;
    const double s = builder.compute_surplus(idx, model, node);
    builder.add_term(idx, std::move(node), s);
    ++eval_count;
  }
  return builder.finish(eval_count);
}

}  // namespace lejasparse
