#include "lejasparse/sampling.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace lejasparse {

namespace {

constexpr int kBits = 32;
constexpr double kScale = 1.0 / 4294967296.0;  // 2^-32

// Joe & Kuo primitive polynomials and initial direction numbers
// (new-joe-kuo-6.21201), dimensions 2..16. Dimension 1 is the van der
// Corput sequence and needs no table entry.
struct SobolRow {
  int degree;
  std::uint32_t poly;           // encoded coefficients a
  std::uint32_t m[6];           // initial m values, m[0..degree)
};

constexpr SobolRow kJoeKuo[15] = {
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
    {5, 4, {1, 1, 5, 5, 5}},
    {5, 7, {1, 1, 7, 11, 19}},
    {5, 11, {1, 1, 5, 1, 1}},
    {5, 13, {1, 1, 1, 3, 11}},
    {5, 14, {1, 3, 5, 5, 31}},
    {6, 1, {1, 3, 3, 9, 7, 49}},
    {6, 13, {1, 1, 1, 15, 21, 21}},
    {6, 16, {1, 3, 1, 13, 27, 49}},
};

std::vector<std::uint32_t> build_direction_table(std::size_t dim) {
  std::vector<std::uint32_t> v(dim * kBits);
  // dimension 1: v_k = 2^(31-k)
  for (int k = 0; k < kBits; ++k) v[k] = 1u << (31 - k);
  for (std::size_t d = 1; d < dim; ++d) {
    const SobolRow& row = kJoeKuo[d - 1];
    const int s = row.degree;
    std::uint32_t* vd = v.data() + d * kBits;
    for (int k = 0; k < s; ++k) vd[k] = row.m[k] << (31 - k);
    for (int k = s; k < kBits; ++k) {
      vd[k] = vd[k - s] ^ (vd[k - s] >> s);
      for (int j = 1; j < s; ++j)
        vd[k] ^= ((row.poly >> (s - 1 - j)) & 1u) * vd[k - j];
    }
  }
  return v;
}

}  // namespace

PointStream::PointStream(Kind kind, std::size_t dimension)
    : kind_(kind), dim_(dimension) {
  if (dimension == 0) throw std::invalid_argument("PointStream: dimension must be >= 1");
}

PointStream PointStream::sobol(std::size_t dimension, std::uint64_t skip) {
  if (dimension > kMaxSobolDimension)
    throw std::invalid_argument(
        "sobol: dimension exceeds the embedded direction-number table (max " +
        std::to_string(kMaxSobolDimension) + ")");
  PointStream s(Kind::sobol, dimension);
  s.direction_ = build_direction_table(dimension);
  s.state_.assign(dimension, 0u);
  s.sobol_seek(skip);
  return s;
}

PointStream PointStream::pseudo_random(std::size_t dimension, std::uint64_t seed) {
  PointStream s(Kind::pseudo_random, dimension);
  s.rng_.seed(seed);
  return s;
}

void PointStream::sobol_seek(std::uint64_t index) {
  // state at index n is the XOR of direction numbers selected by gray(n)
  const std::uint64_t gray = index ^ (index >> 1);
  for (std::size_t d = 0; d < dim_; ++d) {
    std::uint32_t x = 0;
    for (int k = 0; k < kBits; ++k)
      if ((gray >> k) & 1u) x ^= direction_[d * kBits + k];
    state_[d] = x;
  }
  cursor_ = index;
}

void PointStream::next(std::span<double> out) {
  if (out.size() < dim_) throw std::invalid_argument("PointStream::next: output too small");
  if (kind_ == Kind::sobol) {
    for (std::size_t d = 0; d < dim_; ++d) out[d] = state_[d] * kScale;
    // advance: flip the direction number at the lowest zero bit of cursor
    const int c = std::countr_one(cursor_);
    if (c >= kBits)
      throw std::runtime_error("sobol: stream exhausted the 32-bit construction");
    for (std::size_t d = 0; d < dim_; ++d) state_[d] ^= direction_[d * kBits + c];
    ++cursor_;
  } else {
    for (std::size_t d = 0; d < dim_; ++d) {
      // top 53 bits, offset half a lattice step to stay inside (0,1)
      const std::uint64_t u = rng_() >> 11;
      out[d] = (static_cast<double>(u) + 0.5) * 0x1.0p-53;
    }
    ++cursor_;
  }
}

std::vector<std::vector<double>> PointStream::take(std::size_t count) {
  std::vector<std::vector<double>> pts(count, std::vector<double>(dim_));
  for (auto& p : pts) next(p);
  return pts;
}

std::vector<std::vector<double>> sobol_points(std::size_t dimension,
                                              std::size_t count,
                                              std::uint64_t skip) {
  if (count == 0) throw std::invalid_argument("sobol_points: count must be >= 1");
  PointStream s = PointStream::sobol(dimension, skip);
  return s.take(count);
}

McEstimate mc_reference_mean(const ModelFn& model,
                             std::span<const Distribution> dists,
                             std::uint64_t count, PointStream& stream) {
  if (count == 0) throw std::invalid_argument("mc_reference_mean: count must be >= 1");
  if (stream.dimension() != dists.size())
    throw std::invalid_argument("mc_reference_mean: stream/distribution dimension mismatch");

  const std::size_t dim = dists.size();
  std::vector<double> u(dim), y(dim);
  double mean = 0.0, m2 = 0.0;
  for (std::uint64_t k = 1; k <= count; ++k) {
    stream.next(u);
    for (std::size_t d = 0; d < dim; ++d) y[d] = dists[d].sample(u[d]);
    const double v = model(y);
    const double delta = v - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (v - mean);
  }
  McEstimate est;
  est.mean = mean;
  est.count = count;
  est.standard_error =
      count > 1 ? std::sqrt(m2 / static_cast<double>(count - 1) /
                            static_cast<double>(count))
                : 0.0;
  return est;
}

}  // namespace lejasparse
