#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "lejasparse/sampling.hpp"
#include "lejasparse/sparse.hpp"

namespace lejasparse {

// Functional applied under the expectation; mean and raw moments are plain
// sample averages, variance is the plug-in central second moment.
enum class MomentKind { mean, variance, raw };

struct MomentEstimate {
  enum class Method { direct_quadrature, surrogate_sampling };

  double value = 0.0;
  Method method = Method::direct_quadrature;
  std::uint64_t sample_size = 0;  // zero for direct quadrature
};

// E[surrogate] by direct quadrature: sum_i s_i * prod_n w_{n, i_n}, with the
// univariate weights taken from (and cached in) the surrogate's rules.
MomentEstimate mean_direct(const SparseSurrogate& surrogate);

// Monte Carlo estimate of E[phi(surrogate)] with inverse-transform sampling
// per dimension. `raw_order` applies to MomentKind::raw only.
MomentEstimate moment_sampled(const SparseSurrogate& surrogate, MomentKind phi,
                              int raw_order, PointStream& stream,
                              std::uint64_t sample_size);

// RMS deviation between an approximation and the model over a sample drawn
// from the joint input density.
double rms_cv_error(const ModelFn& approximation, const ModelFn& model,
                    const std::vector<std::vector<double>>& sample);

// |reference - estimate| / |reference|; reference must be nonzero.
double rel_mean_error(double estimate, double reference);

// Default cross-validation sample size.
inline constexpr std::uint64_t kDefaultCvSampleSize = 100'000;

struct ErrorReport {
  double eps_cv_rms = 0.0;
  double eps_rel_mean = 0.0;
  std::uint64_t cv_sample_size = 0;
  double reference_mean = 0.0;
};

}  // namespace lejasparse
