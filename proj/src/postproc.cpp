#include "lejasparse/postproc.hpp"

#include <cmath>
#include <stdexcept>

namespace lejasparse {

MomentEstimate mean_direct(const SparseSurrogate& surrogate) {
  double acc = 0.0;
  const auto& members = surrogate.accepted().members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    double term = surrogate.surplus(k);
    const MultiIndex& idx = members[k];
    for (std::size_t n = 0; n < idx.size(); ++n)
      term *= surrogate.rule(n)->weight(static_cast<std::size_t>(idx[n]));
    acc += term;
  }
  return {acc, MomentEstimate::Method::direct_quadrature, 0};
}

MomentEstimate moment_sampled(const SparseSurrogate& surrogate, MomentKind phi,
                              int raw_order, PointStream& stream,
                              std::uint64_t sample_size) {
  if (sample_size == 0)
    throw std::invalid_argument("moment_sampled: sample size must be >= 1");
  if (stream.dimension() != surrogate.dimension())
    throw std::invalid_argument("moment_sampled: stream dimension mismatch");
  if (phi == MomentKind::raw && raw_order < 1)
    throw std::invalid_argument("moment_sampled: raw moment order must be >= 1");

  const std::size_t dim = surrogate.dimension();
  std::vector<double> u(dim), y(dim);
  double mean = 0.0, m2 = 0.0;
  for (std::uint64_t k = 1; k <= sample_size; ++k) {
    stream.next(u);
    for (std::size_t n = 0; n < dim; ++n) y[n] = surrogate.dists()[n].sample(u[n]);
    double v = surrogate.eval(y);
    if (phi == MomentKind::raw) {
      double p = v;
      for (int j = 1; j < raw_order; ++j) p *= v;
      v = p;
    }
    const double delta = v - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (v - mean);
  }

  double value = mean;
  if (phi == MomentKind::variance) value = m2 / static_cast<double>(sample_size);
  return {value, MomentEstimate::Method::surrogate_sampling, sample_size};
}

double rms_cv_error(const ModelFn& approximation, const ModelFn& model,
                    const std::vector<std::vector<double>>& sample) {
  if (sample.empty()) throw std::invalid_argument("rms_cv_error: empty sample");
  double acc = 0.0;
  for (const auto& y : sample) {
    const double d = approximation(y) - model(y);
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(sample.size()));
}

double rel_mean_error(double estimate, double reference) {
  if (reference == 0.0)
    throw std::domain_error("rel_mean_error: reference mean is zero");
  return std::fabs(reference - estimate) / std::fabs(reference);
}

}  // namespace lejasparse
