#pragma once

#include <string>

#include "lejasparse/types.hpp"

namespace lejasparse {

// Closed, finite interval. Used for effective supports, which are the exact
// bounds for bounded laws and tail-clipped bounds for unbounded ones.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(double y) const { return y >= lo && y <= hi; }
};

enum class DistKind { uniform, normal, truncated_normal, gumbel };

// One-dimensional continuous input law, used both as a sampling distribution
// and as the weight function of weighted Leja node sequences.
//
// Parameters are validated once at construction; evaluation assumes a valid
// state. Values are immutable, so all operations are safe to call
// concurrently.
class Distribution {
 public:
  static Distribution uniform(double a, double b);
  static Distribution normal(double mu, double sigma);
  // mu/sigma describe the untruncated parent normal; [lower, upper] is the
  // truncation range.
  static Distribution truncated_normal(double mu, double sigma, double lower,
                                       double upper);
  static Distribution gumbel(double location, double scale);

  DistKind kind() const { return kind_; }

  double pdf(double y) const;
  // log pdf(y); -inf outside the support of truncated laws.
  double log_pdf(double y) const;
  double cdf(double y) const;
  // Inverse CDF. Throws std::domain_error unless 0 < p < 1.
  double icdf(double p) const;
  // Inverse-transform sampling: identical to icdf.
  double sample(double u01) const { return icdf(u01); }

  // Exact bounds for bounded laws; quantiles at tail mass kTailEpsilon per
  // side otherwise.
  Interval support() const { return support_; }

  // Parameter accessors; meaningful only for the matching kind.
  double a() const { return a_; }
  double b() const { return b_; }
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double lower() const { return lower_; }
  double upper() const { return upper_; }
  double location() const { return loc_; }
  double scale() const { return scale_; }

  std::string describe() const;

  bool operator==(const Distribution&) const = default;

 private:
  Distribution() = default;

  DistKind kind_ = DistKind::uniform;
  double a_ = 0.0, b_ = 1.0;         // uniform
  double mu_ = 0.0, sigma_ = 1.0;    // (truncated) normal
  double lower_ = 0.0, upper_ = 0.0; // truncation range
  double loc_ = 0.0, scale_ = 1.0;   // gumbel

  // cached at construction
  double trunc_mass_ = 1.0;  // Phi(beta) - Phi(alpha)
  double cdf_alpha_ = 0.0;   // Phi(alpha)
  double log_norm_ = 0.0;    // additive log-pdf constant
  Interval support_{};
};

// Standard normal CDF, accurate to a few ulp.
double normal_cdf(double z);

// Standard normal quantile (Wichura's AS 241, PPND16), absolute error
// well below 1e-10. Requires 0 < p < 1.
double normal_icdf(double p);

}  // namespace lejasparse
