#include "lejasparse/leja.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lejasparse {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Half of the ~2^16 candidates are equispaced in CDF space (dense where the
// density is), half equispaced in the support (covers low-density tails,
// where the weighted objective often peaks).
constexpr std::size_t kHalfCandidates = 32769;  // 2^15 + 1
constexpr double kBracketWidthFactor = 1e-13;
constexpr double kTieRelTolerance = 1e-12;
constexpr double kMinGapFactor = 1e-14;

// Golden-section maximization on [a, b]; returns (argmax, value) of the best
// point actually evaluated.
template <typename F>
std::pair<double, double> golden_max(const F& f, double a, double b,
                                     double tol_width) {
  constexpr double invphi = 0.6180339887498948482;
  constexpr double invphi2 = 0.3819660112501051518;
  double h = b - a;
  double c = a + invphi2 * h;
  double d = a + invphi * h;
  double fc = f(c);
  double fd = f(d);
  while (h > tol_width) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      h = b - a;
      c = a + invphi2 * h;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      h = b - a;
      d = a + invphi * h;
      fd = f(d);
    }
  }
  return fc > fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace

LejaSequence::LejaSequence(const Distribution& dist, LejaKind kind)
    : dist_(dist), kind_(kind), use_weight_(kind == LejaKind::weighted) {}

LejaSequence LejaSequence::weighted(const Distribution& dist) {
  LejaSequence seq(dist, LejaKind::weighted);
  seq.extend();  // mode search with empty distance product
  return seq;
}

LejaSequence LejaSequence::weighted(const Distribution& dist, double y0) {
  if (!dist.support().contains(y0))
    throw std::domain_error("weighted Leja: y0 outside the effective support");
  LejaSequence seq(dist, LejaKind::weighted);
  seq.append_node(y0);
  return seq;
}

LejaSequence LejaSequence::unweighted(double y0) {
  if (!(y0 >= -1.0 && y0 <= 1.0))
    throw std::domain_error("unweighted Leja: y0 must lie in [-1, 1]");
  LejaSequence seq(Distribution::uniform(-1.0, 1.0), LejaKind::unweighted);
  seq.append_node(y0);
  return seq;
}

LejaSequence LejaSequence::symmetric() {
  LejaSequence seq(Distribution::uniform(-1.0, 1.0), LejaKind::symmetric);
  seq.append_node(0.0);
  return seq;
}

LejaSequence LejaSequence::from_nodes(const Distribution& dist, LejaKind kind,
                                      std::vector<double> nodes) {
  if (nodes.empty())
    throw std::invalid_argument("from_nodes: at least one node required");
  const Distribution d = (kind == LejaKind::weighted)
                             ? dist
                             : Distribution::uniform(-1.0, 1.0);
  LejaSequence seq(d, kind);
  for (double y : nodes) seq.append_node(y);
  return seq;
}

double LejaSequence::log_objective(double y) const {
  double f = use_weight_ ? 0.5 * dist_.log_pdf(y) : 0.0;
  for (double yk : nodes_) f += std::log(std::fabs(y - yk));
  return f;
}

void LejaSequence::append_node(double y) {
  objectives_.push_back(log_objective(y));
  nodes_.push_back(y);
  if (!cand_obj_.empty()) {
    for (std::size_t c = 0; c < cand_y_.size(); ++c)
      cand_obj_[c] += std::log(std::fabs(cand_y_[c] - y));
  }
}

void LejaSequence::ensure_candidates() {
  if (!cand_y_.empty()) return;
  const Interval sup = dist_.support();
  const double p_lo = dist_.cdf(sup.lo);
  const double p_hi = dist_.cdf(sup.hi);
  cand_y_.reserve(2 * kHalfCandidates);
  for (std::size_t i = 0; i < kHalfCandidates; ++i) {
    const double t = static_cast<double>(i) / (kHalfCandidates - 1);
    if (i == 0)
      cand_y_.push_back(sup.lo);
    else if (i + 1 == kHalfCandidates)
      cand_y_.push_back(sup.hi);
    else
      cand_y_.push_back(dist_.icdf(p_lo + t * (p_hi - p_lo)));
    cand_y_.push_back(sup.lo + t * sup.width());
  }
  std::sort(cand_y_.begin(), cand_y_.end());
  cand_y_.erase(std::unique(cand_y_.begin(), cand_y_.end()), cand_y_.end());
  cand_obj_.resize(cand_y_.size());
  for (std::size_t i = 0; i < cand_y_.size(); ++i) {
    double f = use_weight_ ? 0.5 * dist_.log_pdf(cand_y_[i]) : 0.0;
    for (double yk : nodes_) f += std::log(std::fabs(cand_y_[i] - yk));
    cand_obj_[i] = f;
  }
}

std::pair<double, double> LejaSequence::search_max() const {
  const std::size_t n = cand_y_.size();
  const auto value = [&](std::size_t i) { return cand_obj_[i]; };

  double best = -kInf;
  for (std::size_t i = 0; i < n; ++i) best = std::max(best, value(i));
  if (!std::isfinite(best))
    throw std::runtime_error(
        "Leja search: no candidate with finite objective (degenerate density)");

  // every local maximum, leftmost point of any plateau
  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    const double fi = value(i);
    if (!std::isfinite(fi)) continue;
    const double fl = i > 0 ? value(i - 1) : -kInf;
    const double fr = i + 1 < n ? value(i + 1) : -kInf;
    if (fi > fl && fi >= fr) peaks.push_back(i);
  }
  if (peaks.empty()) {
    for (std::size_t i = 0; i < n; ++i)
      if (value(i) == best) {
        peaks.push_back(i);
        break;
      }
  }

  const double width = dist_.support().width();
  const double min_gap = kMinGapFactor * width;
  const auto objective = [&](double y) { return log_objective(y); };

  double best_y = 0.0, best_f = -kInf;
  bool found = false;
  std::vector<std::pair<double, double>> refined;
  for (std::size_t i : peaks) {
    const double a = cand_y_[i > 0 ? i - 1 : 0];
    const double b = cand_y_[std::min(i + 1, n - 1)];
    auto [y, f] = golden_max(objective, a, b, kBracketWidthFactor * width);
    // keep the grid point when refinement did not improve on it
    if (f <= cand_obj_[i]) {
      y = cand_y_[i];
      f = cand_obj_[i];
    }
    bool collides = false;
    for (double yk : nodes_)
      if (std::fabs(y - yk) <= min_gap) collides = true;
    if (collides) continue;
    refined.emplace_back(y, f);
    if (f > best_f) best_f = f;
    found = true;
  }
  if (!found)
    throw std::runtime_error(
        "Leja search: every refined candidate collided with an existing node");

  // among near-ties, pick the smallest location
  const double tie_tol = kTieRelTolerance * std::max(1.0, std::fabs(best_f));
  best_y = kInf;
  for (const auto& [y, f] : refined)
    if (f >= best_f - tie_tol && y < best_y) best_y = y;
  return {best_y, log_objective(best_y)};
}

void LejaSequence::extend() {
  if (kind_ == LejaKind::symmetric) {
    const std::size_t j = nodes_.size();
    if (j == 1) {
      append_node(1.0);
      return;
    }
    if (j % 2 == 0) {
      append_node(-nodes_[j - 1]);
      return;
    }
  }
  ensure_candidates();
  auto [y, f] = search_max();
  append_node(y);
}

void LejaSequence::extend_to(std::size_t count) {
  while (nodes_.size() < count) extend();
}

std::span<const double> LejaSequence::grid(std::size_t level) {
  extend_to(level + 1);
  return {nodes_.data(), level + 1};
}

}  // namespace lejasparse
