#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "lejasparse/benchmarks.hpp"
#include "lejasparse/sampling.hpp"

using namespace lejasparse;

TEST_CASE("borehole spot value") {
  // frozen from a high-precision arithmetic evaluation of the flow formula
  const std::vector<double> y = {0.1, 1000, 100, 1000, 100, 700, 1000, 10000};
  CHECK(borehole_eval(y) == doctest::Approx(93.38764758688048).epsilon(1e-12));
}

TEST_CASE("borehole vanishes when the heads coincide") {
  const std::vector<double> y = {0.08, 900, 80, 750, 90, 750, 1300, 11000};
  CHECK(borehole_eval(y) == 0.0);
}

TEST_CASE("borehole domain errors") {
  CHECK_THROWS_AS(
      borehole_eval(std::vector<double>{1000, 0.1, 100, 1000, 100, 700, 1000, 10000}),
      std::domain_error);  // r <= r_w
  CHECK_THROWS_AS(
      borehole_eval(std::vector<double>{0.1, 1000, -5, 1000, 100, 700, 1000, 10000}),
      std::domain_error);
  CHECK_THROWS_AS(borehole_eval(std::vector<double>{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("borehole monotone in the potentiometric heads") {
  const BenchmarkModel bench = benchmark_spec("borehole");
  std::mt19937_64 rng(42);
  std::vector<double> y(8);
  for (int trial = 0; trial < 100; ++trial) {
    for (std::size_t n = 0; n < 8; ++n) {
      const Interval s = bench.dists[n].support();
      std::uniform_real_distribution<double> u(s.lo, s.hi);
      y[n] = u(rng);
    }
    const double base = borehole_eval(y);
    std::vector<double> up = y;
    up[3] += 1e-3;  // H_u
    CHECK(borehole_eval(up) > base);
    std::vector<double> down = y;
    down[5] += 1e-3;  // H_l
    CHECK(borehole_eval(down) < base);
  }
}

TEST_CASE("steel column spot values") {
  // total load zero leaves only the yield stress
  const std::vector<double> unloaded = {400, 0, 0, 0, 300, 20, 300, 30, 2.1e5, 7500};
  CHECK(steel_column_eval(unloaded) == doctest::Approx(400.0).epsilon(1e-14));
  // frozen from a high-precision arithmetic evaluation
  const std::vector<double> y = {400, 5e5, 5e5, 5e5, 300, 20, 300, 30, 2.1e5, 7500};
  CHECK(steel_column_eval(y) == doctest::Approx(245.56137442208663).epsilon(1e-12));
}

TEST_CASE("steel column singularity guard") {
  // choose E so the buckling load equals the total load exactly
  const double b = 300, d = 20, h = 300, len = 7500;
  const double pt = 3.0e5;
  const double e = pt * 2.0 * len * len / (M_PI * M_PI * b * d * h * h);
  const std::vector<double> y = {400, 1e5, 1e5, 1e5, b, d, h, 30, e, len};
  CHECK_THROWS_AS(steel_column_eval(y), std::domain_error);
}

TEST_CASE("meromorphic spot values") {
  const std::vector<double> zero(16, 0.0);
  CHECK(meromorphic_eval(zero) == 1.0);
  // w . 1 = |w_hat|_1 / (2 |w_hat|_1) = 1/2 for any positive pattern
  const std::vector<double> ones(16, 1.0);
  CHECK(meromorphic_eval(ones) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("meromorphic output bounds over the truncated support") {
  // hard bound: w.y in [-3 * sum(even w), 3 * sum(odd w)] = [-0.5, 1.0],
  // so the output stays within [1/2, 2]
  const BenchmarkModel bench = benchmark_spec("meromorphic");
  PointStream stream = PointStream::pseudo_random(16, 2024);
  std::vector<double> u(16), y(16);
  for (int k = 0; k < 100'000; ++k) {
    stream.next(u);
    for (std::size_t n = 0; n < 16; ++n) y[n] = bench.dists[n].sample(u[n]);
    const double g = meromorphic_eval(y);
    CHECK(g >= 0.5);
    CHECK(g <= 2.0);
  }
}

TEST_CASE("benchmark specs") {
  CHECK_THROWS_AS(benchmark_spec("no-such-model"), std::invalid_argument);

  const BenchmarkModel borehole = benchmark_spec("borehole");
  CHECK(borehole.dimension == 8);
  REQUIRE(borehole.dists.size() == 8);
  for (const Distribution& d : borehole.dists)
    CHECK(d.kind() == DistKind::truncated_normal);
  // r_w row
  CHECK(borehole.dists[0].mu() == 0.1);
  CHECK(borehole.dists[0].sigma() == 0.016182);
  CHECK(borehole.dists[0].lower() == 0.05);
  CHECK(borehole.dists[0].upper() == 0.15);
  // r row carries the log-normal moments
  CHECK(borehole.dists[1].mu() ==
        doctest::Approx(std::exp(7.71 + 0.5 * 1.0056 * 1.0056)).epsilon(1e-14));
  CHECK(borehole.dists[1].sigma() ==
        doctest::Approx(std::sqrt((std::exp(1.0056 * 1.0056) - 1.0) *
                                  std::exp(2 * 7.71 + 1.0056 * 1.0056)))
            .epsilon(1e-14));
  CHECK(borehole.dists[1].lower() == 100.0);
  CHECK(borehole.dists[1].upper() == 50000.0);
  // uniform-to-truncated-normal conversion: T_u row
  CHECK(borehole.dists[2].mu() == doctest::Approx((63070.0 + 115600.0) / 2).epsilon(1e-15));
  CHECK(borehole.dists[2].sigma() ==
        doctest::Approx((115600.0 - 63070.0) / std::sqrt(12.0)).epsilon(1e-15));

  const BenchmarkModel steel = benchmark_spec("steel-column");
  CHECK(steel.dimension == 10);
  REQUIRE(steel.dists.size() == 10);
  int gumbels = 0, truncated = 0;
  for (const Distribution& d : steel.dists) {
    if (d.kind() == DistKind::gumbel) ++gumbels;
    if (d.kind() == DistKind::truncated_normal) ++truncated;
  }
  CHECK(gumbels == 3);
  CHECK(truncated == 7);
  CHECK(steel.dists[2].location() == 559495.0);
  CHECK(steel.dists[2].scale() == 70173.0);
  CHECK(steel.dists[8].location() == 208110.0);
  CHECK(steel.dists[8].scale() == 3275.0);
  CHECK(steel.dists[9].lower() == 7470.0);  // L truncated at mu +- 4 sigma
  CHECK(steel.dists[9].upper() == 7530.0);

  const BenchmarkModel mero = benchmark_spec("meromorphic");
  CHECK(mero.dimension == 16);
  REQUIRE(mero.dists.size() == 16);
  for (std::size_t n = 0; n < 16; ++n) {
    CHECK(mero.dists[n].kind() == DistKind::truncated_normal);
    CHECK(mero.dists[n].mu() == 0.0);
    CHECK(mero.dists[n].sigma() == 1.0);
    if (n % 2 == 0) {
      CHECK(mero.dists[n].lower() == 0.0);
      CHECK(mero.dists[n].upper() == 3.0);
    } else {
      CHECK(mero.dists[n].lower() == -3.0);
      CHECK(mero.dists[n].upper() == 0.0);
    }
  }
}

TEST_CASE("evaluators agree with the named entry points") {
  const BenchmarkModel bench = benchmark_spec("borehole");
  std::vector<double> y(8);
  for (std::size_t n = 0; n < 8; ++n) {
    const Interval s = bench.dists[n].support();
    y[n] = 0.5 * (s.lo + s.hi);
  }
  CHECK(bench.evaluator(y) == borehole_eval(y));
}
