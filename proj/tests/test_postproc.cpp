#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "lejasparse/benchmarks.hpp"
#include "lejasparse/postproc.hpp"
#include "lejasparse/sparse.hpp"

using namespace lejasparse;

namespace {

SequenceWorkspace uniform_workspace_starting_at_one(std::size_t dim) {
  SequenceWorkspace ws;
  for (std::size_t n = 0; n < dim; ++n)
    ws.rules.push_back(std::make_shared<UnivariateRule>(
        std::make_shared<LejaSequence>(
            LejaSequence::weighted(Distribution::uniform(-1, 1), 1.0))));
  return ws;
}

MultiIndexSet levels_1d(int max_level) {
  MultiIndexSet s(1);
  for (int i = 0; i <= max_level; ++i) s.insert({i});
  return s;
}

}  // namespace

TEST_CASE("direct mean of a constant surrogate") {
  const std::vector<Distribution> dists = {Distribution::gumbel(0, 1),
                                           Distribution::uniform(-1, 1)};
  const auto [s, report] = adaptive_build(
      [](std::span<const double>) { return 7.5; }, dists, kUnlimitedBudget, 1e-14);
  const MomentEstimate m = mean_direct(s);
  CHECK(m.value == doctest::Approx(7.5).epsilon(1e-12));
  CHECK(m.method == MomentEstimate::Method::direct_quadrature);
}

TEST_CASE("direct mean of identity and square on the uniform law") {
  const std::vector<Distribution> dists = {Distribution::uniform(-1, 1)};
  SequenceWorkspace ws = uniform_workspace_starting_at_one(1);
  // g(y) = y on nodes (1,-1): mean 0 by symmetry
  const SparseSurrogate lin = build_on_fixed_set(
      [](std::span<const double> y) { return y[0]; }, dists, levels_1d(1), &ws);
  CHECK(mean_direct(lin).value == doctest::Approx(0.0).epsilon(1e-12));
  // g(y) = y^2 on nodes (1,-1,0): surpluses (1,0,-1), weights (1,1/2,2/3)
  const SparseSurrogate sq = build_on_fixed_set(
      [](std::span<const double> y) { return y[0] * y[0]; }, dists, levels_1d(2), &ws);
  CHECK(mean_direct(sq).value == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("direct mean of degree-one models matches the analytic mean") {
  // E[a0 + a1*y1 + a2*y2] = a0 + a1 E[y1] + a2 E[y2]
  const Distribution d1 = Distribution::uniform(2, 5);
  const Distribution d2 = Distribution::truncated_normal(1, 2, -2, 3);
  // truncated normal mean: mu + sigma * (phi(alpha) - phi(beta)) / Z
  const double alpha = (-2.0 - 1.0) / 2.0, beta = (3.0 - 1.0) / 2.0;
  const double phi_a = std::exp(-0.5 * alpha * alpha) / std::sqrt(2 * M_PI);
  const double phi_b = std::exp(-0.5 * beta * beta) / std::sqrt(2 * M_PI);
  const double z = normal_cdf(beta) - normal_cdf(alpha);
  const double mean1 = 3.5;
  const double mean2 = 1.0 + 2.0 * (phi_a - phi_b) / z;

  const std::vector<Distribution> dists = {d1, d2};
  const auto model = [](std::span<const double> y) {
    return 0.75 + 2.0 * y[0] - 3.0 * y[1];
  };
  const auto [s, report] = adaptive_build(model, dists, 12, 0.0);
  CHECK(mean_direct(s).value ==
        doctest::Approx(0.75 + 2.0 * mean1 - 3.0 * mean2).epsilon(1e-10));
}

TEST_CASE("sampled moments of a constant surrogate") {
  const std::vector<Distribution> dists = {Distribution::uniform(0, 1)};
  const auto [s, report] = adaptive_build(
      [](std::span<const double>) { return 2.25; }, dists, kUnlimitedBudget, 1e-14);
  PointStream stream = PointStream::pseudo_random(1, 1);
  CHECK(moment_sampled(s, MomentKind::mean, 0, stream, 500).value ==
        doctest::Approx(2.25).epsilon(1e-15));
  PointStream stream2 = PointStream::pseudo_random(1, 1);
  CHECK(moment_sampled(s, MomentKind::variance, 0, stream2, 500).value ==
        doctest::Approx(0.0).epsilon(1e-12));
  PointStream stream3 = PointStream::pseudo_random(1, 1);
  CHECK(moment_sampled(s, MomentKind::raw, 2, stream3, 500).value ==
        doctest::Approx(2.25 * 2.25).epsilon(1e-12));
}

TEST_CASE("sampled mean is statistically consistent with the direct mean") {
  const BenchmarkModel bench = benchmark_spec("borehole");
  const auto [s, report] = adaptive_build(bench.evaluator, bench.dists, 120, 0.0);
  const double direct = mean_direct(s).value;
  PointStream stream = PointStream::pseudo_random(bench.dimension, 77);
  const std::uint64_t q = 1'000'000;
  const MomentEstimate sampled = moment_sampled(s, MomentKind::mean, 0, stream, q);
  PointStream stream2 = PointStream::pseudo_random(bench.dimension, 77);
  const double var = moment_sampled(s, MomentKind::variance, 0, stream2, q).value;
  const double bound = 4.0 * std::sqrt(var) / std::sqrt(static_cast<double>(q));
  CHECK(std::fabs(sampled.value - direct) <= bound);
}

TEST_CASE("rms cross-validation error") {
  const ModelFn model = [](std::span<const double> y) { return y[0] * y[1]; };
  const ModelFn shifted = [](std::span<const double> y) { return y[0] * y[1] + 0.25; };
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<double>> sample(512, std::vector<double>(2));
  for (auto& p : sample) p = {u(rng), u(rng)};

  CHECK(rms_cv_error(model, model, sample) == 0.0);
  CHECK(rms_cv_error(shifted, model, sample) == doctest::Approx(0.25).epsilon(1e-12));

  // permutation invariance
  const double before = rms_cv_error(shifted, model, sample);
  std::shuffle(sample.begin(), sample.end(), rng);
  CHECK(rms_cv_error(shifted, model, sample) ==
        doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("relative mean error") {
  CHECK(rel_mean_error(3.0, 3.0) == 0.0);
  CHECK(rel_mean_error(1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(rel_mean_error(1.0, 0.0), std::domain_error);
}

TEST_CASE("default cross-validation sample size") {
  CHECK(kDefaultCvSampleSize == 100'000);
}
