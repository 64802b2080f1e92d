#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "lejasparse/distributions.hpp"
#include "lejasparse/types.hpp"

namespace lejasparse {

// Largest dimension covered by the embedded Sobol direction-number table.
inline constexpr std::size_t kMaxSobolDimension = 16;

// Deterministic stream of points in (0,1)^N. Sobol streams follow the
// standard direction-number construction; the all-zero point at index 0 is
// skipped by default (skip = 1). Pseudo-random streams wrap a seeded
// mt19937_64, so draws are reproducible across platforms.
class PointStream {
 public:
  enum class Kind { sobol, pseudo_random };

  static PointStream sobol(std::size_t dimension, std::uint64_t skip = 1);
  static PointStream pseudo_random(std::size_t dimension, std::uint64_t seed);

  std::size_t dimension() const { return dim_; }
  Kind kind() const { return kind_; }
  std::uint64_t cursor() const { return cursor_; }

  // Fills out[0..dimension) with the next point.
  void next(std::span<double> out);

  std::vector<std::vector<double>> take(std::size_t count);

 private:
  PointStream(Kind kind, std::size_t dimension);

  void sobol_seek(std::uint64_t index);

  Kind kind_;
  std::size_t dim_;
  std::uint64_t cursor_ = 0;
  // sobol state
  std::vector<std::uint32_t> direction_;  // dim x 32, row-major per dimension
  std::vector<std::uint32_t> state_;
  // pseudo-random state
  std::mt19937_64 rng_;
};

std::vector<std::vector<double>> sobol_points(std::size_t dimension,
                                              std::size_t count,
                                              std::uint64_t skip = 1);

struct McEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t count = 0;
};

// Sample mean of the model under the product law of `dists`, with points
// drawn from `stream` and mapped through the per-dimension quantiles.
// The running standard error supports tolerance checks downstream.
McEstimate mc_reference_mean(const ModelFn& model,
                             std::span<const Distribution> dists,
                             std::uint64_t count, PointStream& stream);

// Desk-scale default size of the reference sample.
inline constexpr std::uint64_t kDefaultReferenceSize = 10'000'000;

}  // namespace lejasparse
