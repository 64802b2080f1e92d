#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "lejasparse/benchmarks.hpp"
#include "lejasparse/distributions.hpp"

using namespace lejasparse;

namespace {

// Test-side integrator, independent of the library's quadrature path:
// composite Simpson with interval doubling.
double integrate_simpson(const std::function<double(double)>& f, double a,
                         double b) {
  double prev = 0.0;
  for (int n = 1 << 12;; n *= 2) {
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    const double val = acc * h / 3.0;
    if (n > (1 << 12) && std::fabs(val - prev) < 1e-13) return val;
    if (n > (1 << 22)) return val;
    prev = val;
  }
}

std::vector<Distribution> all_benchmark_distributions() {
  std::vector<Distribution> all;
  for (const char* name : {"borehole", "steel-column", "meromorphic"})
    for (const Distribution& d : benchmark_spec(name).dists) all.push_back(d);
  return all;
}

}  // namespace

TEST_CASE("pdf spot values") {
  CHECK(Distribution::uniform(-1, 1).pdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(Distribution::truncated_normal(0, 1, 0, 3).pdf(-0.5) == 0.0);
  // standard Gumbel density at the location: exp(-1)
  CHECK(Distribution::gumbel(0, 1).pdf(0.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("cdf spot values") {
  CHECK(Distribution::uniform(-1, 1).cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(Distribution::truncated_normal(0, 1, -3, 3).cdf(0.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(Distribution::gumbel(0, 1).cdf(0.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  // outside the truncation range
  CHECK(Distribution::truncated_normal(0, 1, -3, 3).cdf(-4.0) == 0.0);
  CHECK(Distribution::truncated_normal(0, 1, -3, 3).cdf(4.0) == 1.0);
}

TEST_CASE("icdf spot values") {
  CHECK(Distribution::uniform(0, 2).icdf(0.25) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(Distribution::truncated_normal(0, 1, -3, 3).icdf(0.5) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // Gumbel quantile: loc - scale * log(-log(p))
  CHECK(Distribution::gumbel(0, 1).icdf(std::exp(-1.0)) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(Distribution::gumbel(559495, 70173).icdf(std::exp(-1.0)) ==
        doctest::Approx(559495.0).epsilon(1e-12));
}

TEST_CASE("icdf rejects probabilities outside (0,1)") {
  const Distribution d = Distribution::normal(0, 1);
  CHECK_THROWS_AS(d.icdf(0.0), std::domain_error);
  CHECK_THROWS_AS(d.icdf(1.0), std::domain_error);
  CHECK_THROWS_AS(d.icdf(-0.1), std::domain_error);
  CHECK_THROWS_AS(d.icdf(1.5), std::domain_error);
}

TEST_CASE("effective support") {
  const Interval tn = Distribution::truncated_normal(0, 1, 0, 3).support();
  CHECK(tn.lo == 0.0);
  CHECK(tn.hi == 3.0);

  const Interval u = Distribution::uniform(-1, 1).support();
  CHECK(u.lo == -1.0);
  CHECK(u.hi == 1.0);

  // Gumbel(0,1) tail quantiles at 1e-12 mass: -log(-log(p))
  const Interval g = Distribution::gumbel(0, 1).support();
  CHECK(g.lo == doctest::Approx(-std::log(-std::log(1e-12))).epsilon(1e-12));
  CHECK(g.lo == doctest::Approx(-3.3189390950359561).epsilon(1e-12));
  CHECK(g.hi == doctest::Approx(27.631021115928048).epsilon(1e-9));

  const Distribution n = Distribution::normal(2.0, 3.0);
  CHECK(n.support().lo ==
        doctest::Approx(2.0 + 3.0 * normal_icdf(1e-12)).epsilon(1e-12));
}

TEST_CASE("sample is the inverse-transform map") {
  CHECK(Distribution::uniform(-1, 1).sample(0.75) == doctest::Approx(0.5).epsilon(1e-15));
  // upper truncation bound is approached from below
  const Distribution tn = Distribution::truncated_normal(0, 1, -3, 0);
  CHECK(tn.sample(1.0 - 1e-12) <= 0.0);
  CHECK(tn.sample(1.0 - 1e-12) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(Distribution::gumbel(559495, 70173).sample(std::exp(-1.0)) ==
        doctest::Approx(559495.0).epsilon(1e-12));
}

TEST_CASE("invalid parameters are rejected at construction") {
  CHECK_THROWS_AS(Distribution::uniform(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::uniform(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::normal(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::normal(0, -1), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::truncated_normal(0, 1, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::truncated_normal(0, -1, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::gumbel(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Distribution::gumbel(0, -2), std::invalid_argument);
}

TEST_CASE("normal quantile inverts the CDF to high accuracy") {
  for (double p = 1e-10; p < 1.0; p = p < 0.5 ? p * 3.7 : 1.0 - (1.0 - p) / 3.7) {
    const double z = normal_icdf(p);
    CHECK(normal_cdf(z) == doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("density normalization over the effective support") {
  std::vector<Distribution> dists = all_benchmark_distributions();
  dists.push_back(Distribution::uniform(-1, 1));
  dists.push_back(Distribution::normal(2, 3));
  dists.push_back(Distribution::gumbel(0, 1));
  dists.push_back(Distribution::truncated_normal(0, 1, 0, 3));
  for (const Distribution& d : dists) {
    const Interval s = d.support();
    const double mass =
        integrate_simpson([&](double y) { return d.pdf(y); }, s.lo, s.hi);
    CHECK_MESSAGE(mass == doctest::Approx(1.0).epsilon(1e-10), d.describe());
  }
}

TEST_CASE("quantile round trip") {
  std::vector<Distribution> dists = all_benchmark_distributions();
  dists.push_back(Distribution::uniform(-1, 1));
  dists.push_back(Distribution::normal(0, 1));
  for (const Distribution& d : dists) {
    for (int k = 0; k < 1000; ++k) {
      const double p = 0.001 + (0.999 - 0.001) * (k + 0.5) / 1000.0;
      CHECK(std::fabs(d.cdf(d.icdf(p)) - p) <= 1e-9);
    }
  }
}

TEST_CASE("truncated normal density is the renormalized parent density") {
  const Distribution parent = Distribution::normal(1.5, 2.0);
  const Distribution tn = Distribution::truncated_normal(1.5, 2.0, -1.0, 4.0);
  // renormalization constant from direct numerical integration of the parent
  const double mass =
      integrate_simpson([&](double y) { return parent.pdf(y); }, -1.0, 4.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 4.0);
  for (int k = 0; k < 200; ++k) {
    const double y = u(rng);
    CHECK(tn.pdf(y) == doctest::Approx(parent.pdf(y) / mass).epsilon(1e-12));
  }
}
