#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "lejasparse/leja.hpp"

using namespace lejasparse;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

// independent objective for the sampled-optimality check
double weighted_log_objective(const Distribution& dist,
                              std::span<const double> nodes, std::size_t count,
                              double y) {
  double f = 0.5 * dist.log_pdf(y);
  for (std::size_t k = 0; k < count; ++k) f += std::log(std::fabs(y - nodes[k]));
  return f;
}

}  // namespace

TEST_CASE("unweighted sequence on [-1,1] starting at 1") {
  LejaSequence seq = LejaSequence::unweighted(1.0);
  seq.extend_to(4);
  CHECK(seq.node(0) == 1.0);
  CHECK(seq.node(1) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(seq.node(2) == doctest::Approx(0.0).epsilon(1e-6));
  // argmax of |y^3 - y| ties at +-1/sqrt(3); ties resolve to the smaller node
  CHECK(seq.node(3) == doctest::Approx(-kInvSqrt3).epsilon(1e-6));
}

TEST_CASE("unweighted rejects an initial node outside [-1,1]") {
  CHECK_THROWS_AS(LejaSequence::unweighted(1.5), std::domain_error);
  CHECK_THROWS_AS(LejaSequence::unweighted(-2.0), std::domain_error);
}

TEST_CASE("symmetric sequence") {
  LejaSequence seq = LejaSequence::symmetric();
  CHECK(seq.size() == 1);
  CHECK(seq.node(0) == 0.0);
  seq.extend_to(5);
  CHECK(seq.node(1) == 1.0);
  CHECK(seq.node(2) == -1.0);
  CHECK(std::fabs(seq.node(3)) == doctest::Approx(kInvSqrt3).epsilon(1e-6));
  CHECK(seq.node(4) == -seq.node(3));
}

TEST_CASE("weighted sequence for the standard normal") {
  LejaSequence seq = LejaSequence::weighted(Distribution::normal(0, 1));
  // default initial node is the density mode
  CHECK(seq.node(0) == doctest::Approx(0.0).epsilon(1e-6));
  seq.extend();
  // stationarity of log|y| - y^2/4 puts the second node at |y| = sqrt(2)
  CHECK(std::fabs(seq.node(1)) == doctest::Approx(kSqrt2).epsilon(1e-6));
}

TEST_CASE("weighted sequence with constant weight reduces to unweighted") {
  LejaSequence seq = LejaSequence::weighted(Distribution::uniform(-1, 1), 1.0);
  seq.extend_to(3);
  CHECK(seq.node(1) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(seq.node(2) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("weighted nodes stay inside a truncated support") {
  LejaSequence seq =
      LejaSequence::weighted(Distribution::truncated_normal(0, 1, 0, 3));
  seq.extend_to(15);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    CHECK(seq.node(j) >= 0.0);
    CHECK(seq.node(j) <= 3.0);
  }
}

TEST_CASE("weighted initial node outside the support is rejected") {
  CHECK_THROWS_AS(
      LejaSequence::weighted(Distribution::truncated_normal(0, 1, 0, 3), -1.0),
      std::domain_error);
}

TEST_CASE("grids are nested prefixes") {
  LejaSequence seq = LejaSequence::weighted(Distribution::gumbel(0, 1));
  const std::vector<double> z3(seq.grid(3).begin(), seq.grid(3).end());
  for (std::size_t level = 1; level <= 8; ++level) {
    const auto grid = seq.grid(level);
    REQUIRE(grid.size() == level + 1);
    const auto prev = seq.grid(level - 1);
    for (std::size_t k = 0; k < prev.size(); ++k) CHECK(grid[k] == prev[k]);
  }
  // earlier spans are unchanged by later extensions
  for (std::size_t k = 0; k < 4; ++k) CHECK(seq.grid(3)[k] == z3[k]);
}

TEST_CASE("appended nodes beat random probes of the objective") {
  for (const Distribution& dist :
       {Distribution::gumbel(0, 1), Distribution::truncated_normal(0, 1, -3, 0),
        Distribution::normal(0, 1)}) {
    LejaSequence seq = LejaSequence::weighted(dist);
    seq.extend_to(10);
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(dist.support().lo, dist.support().hi);
    for (std::size_t j = 1; j < seq.size(); ++j) {
      const double achieved =
          weighted_log_objective(dist, seq.nodes(), j, seq.node(j));
      double best_probe = -1e300;
      for (int k = 0; k < 10'000; ++k) {
        const double f = weighted_log_objective(dist, seq.nodes(), j, u(rng));
        best_probe = std::max(best_probe, f);
      }
      CHECK(achieved >= best_probe - 1e-8);
    }
  }
}

TEST_CASE("construction is deterministic") {
  const auto build = [] {
    LejaSequence seq = LejaSequence::weighted(Distribution::gumbel(2, 3));
    seq.extend_to(12);
    return std::vector<double>(seq.nodes().begin(), seq.nodes().end());
  };
  const std::vector<double> a = build();
  const std::vector<double> b = build();
  REQUIRE(a.size() == b.size());
  CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

TEST_CASE("nodes are pairwise distinct") {
  LejaSequence seq = LejaSequence::weighted(Distribution::normal(1, 2));
  seq.extend_to(20);
  const double min_gap = 1e-14 * seq.dist().support().width();
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      CHECK(std::fabs(seq.node(i) - seq.node(j)) > min_gap);
}

TEST_CASE("from_nodes preserves stored nodes verbatim") {
  LejaSequence seq = LejaSequence::weighted(Distribution::gumbel(0, 1));
  seq.extend_to(6);
  const std::vector<double> nodes(seq.nodes().begin(), seq.nodes().end());
  const LejaSequence copy =
      LejaSequence::from_nodes(seq.dist(), LejaKind::weighted, nodes);
  REQUIRE(copy.size() == nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) CHECK(copy.node(j) == nodes[j]);
}
