#include "lejasparse/distributions.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace lejasparse {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLogSqrt2Pi = 0.5 * std::log(2.0 * 3.14159265358979323846);
const double kInvSqrt2 = 0.70710678118654752440;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument("distribution: " + msg);
}

}  // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z * kInvSqrt2); }

double normal_icdf(double p) {
  // ALGORITHM AS 241, APPL. STATIST. (1988) VOL. 37, NO. 3 (PPND16).
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("normal_icdf: p must lie in (0, 1)");

  const double q = p - 0.5;
  double r;
  if (std::fabs(q) <= 0.425) {
    r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                 6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
               1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
             1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
           (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                 3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
               5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
             4.2313330701600911252e+1) * r + 1.0);
  }
  r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double ret;
  if (r <= 5.0) {
    r -= 1.6;
    ret = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
              3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
            4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
          (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
              6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
            2.05319162663775882187e+0) * r + 1.0);
  } else {
    r -= 5.0;
    ret = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
              2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
            5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
          (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
              1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
            5.99832206555887937690e-1) * r + 1.0);
  }
  return q < 0.0 ? -ret : ret;
}

Distribution Distribution::uniform(double a, double b) {
  require(std::isfinite(a) && std::isfinite(b), "uniform bounds must be finite");
  require(b > a, "uniform requires b > a");
  Distribution d;
  d.kind_ = DistKind::uniform;
  d.a_ = a;
  d.b_ = b;
  d.log_norm_ = -std::log(b - a);
  d.support_ = {a, b};
  return d;
}

Distribution Distribution::normal(double mu, double sigma) {
  require(std::isfinite(mu) && std::isfinite(sigma), "normal parameters must be finite");
  require(sigma > 0.0, "normal requires sigma > 0");
  Distribution d;
  d.kind_ = DistKind::normal;
  d.mu_ = mu;
  d.sigma_ = sigma;
  d.log_norm_ = -std::log(sigma) - kLogSqrt2Pi;
  const double z = normal_icdf(1.0 - kTailEpsilon);
  d.support_ = {mu - sigma * z, mu + sigma * z};
  return d;
}

Distribution Distribution::truncated_normal(double mu, double sigma,
                                            double lower, double upper) {
  require(std::isfinite(mu) && std::isfinite(sigma) && std::isfinite(lower) &&
              std::isfinite(upper),
          "truncated normal parameters must be finite");
  require(sigma > 0.0, "truncated normal requires sigma > 0");
  require(upper > lower, "truncated normal requires upper > lower");
  Distribution d;
  d.kind_ = DistKind::truncated_normal;
  d.mu_ = mu;
  d.sigma_ = sigma;
  d.lower_ = lower;
  d.upper_ = upper;
  const double alpha = (lower - mu) / sigma;
  const double beta = (upper - mu) / sigma;
  d.cdf_alpha_ = normal_cdf(alpha);
  d.trunc_mass_ = normal_cdf(beta) - d.cdf_alpha_;
  require(d.trunc_mass_ > 0.0, "truncation range carries no probability mass");
  d.log_norm_ = -std::log(sigma) - kLogSqrt2Pi - std::log(d.trunc_mass_);
  d.support_ = {lower, upper};
  return d;
}

Distribution Distribution::gumbel(double location, double scale) {
  require(std::isfinite(location) && std::isfinite(scale),
          "gumbel parameters must be finite");
  require(scale > 0.0, "gumbel requires scale > 0");
  Distribution d;
  d.kind_ = DistKind::gumbel;
  d.loc_ = location;
  d.scale_ = scale;
  d.log_norm_ = -std::log(scale);
  const auto q = [&](double p) {
    return location - scale * std::log(-std::log(p));
  };
  d.support_ = {q(kTailEpsilon), q(1.0 - kTailEpsilon)};
  return d;
}

double Distribution::pdf(double y) const {
  switch (kind_) {
    case DistKind::uniform:
      return (y >= a_ && y <= b_) ? 1.0 / (b_ - a_) : 0.0;
    case DistKind::normal: {
      const double z = (y - mu_) / sigma_;
      return std::exp(-0.5 * z * z + log_norm_);
    }
    case DistKind::truncated_normal: {
      if (y < lower_ || y > upper_) return 0.0;
      const double z = (y - mu_) / sigma_;
      return std::exp(-0.5 * z * z + log_norm_);
    }
    case DistKind::gumbel: {
      const double z = (y - loc_) / scale_;
      return std::exp(-(z + std::exp(-z)) + log_norm_);
    }
  }
  return 0.0;
}

double Distribution::log_pdf(double y) const {
  switch (kind_) {
    case DistKind::uniform:
      return (y >= a_ && y <= b_) ? log_norm_ : -kInf;
    case DistKind::normal: {
      const double z = (y - mu_) / sigma_;
      return -0.5 * z * z + log_norm_;
    }
    case DistKind::truncated_normal: {
      if (y < lower_ || y > upper_) return -kInf;
      const double z = (y - mu_) / sigma_;
      return -0.5 * z * z + log_norm_;
    }
    case DistKind::gumbel: {
      const double z = (y - loc_) / scale_;
      return -(z + std::exp(-z)) + log_norm_;
    }
  }
  return -kInf;
}

double Distribution::cdf(double y) const {
  switch (kind_) {
    case DistKind::uniform: {
      if (y <= a_) return 0.0;
      if (y >= b_) return 1.0;
      return (y - a_) / (b_ - a_);
    }
    case DistKind::normal:
      return normal_cdf((y - mu_) / sigma_);
    case DistKind::truncated_normal: {
      if (y <= lower_) return 0.0;
      if (y >= upper_) return 1.0;
      const double p = (normal_cdf((y - mu_) / sigma_) - cdf_alpha_) / trunc_mass_;
      return std::fmin(1.0, std::fmax(0.0, p));
    }
    case DistKind::gumbel:
      return std::exp(-std::exp(-(y - loc_) / scale_));
  }
  return 0.0;
}

double Distribution::icdf(double p) const {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("icdf: p must lie in (0, 1)");
  switch (kind_) {
    case DistKind::uniform:
      return a_ + (b_ - a_) * p;
    case DistKind::normal:
      return mu_ + sigma_ * normal_icdf(p);
    case DistKind::truncated_normal: {
      const double pp = cdf_alpha_ + p * trunc_mass_;
      // the rescaled probability can round onto 0/1 for extreme truncations
      if (pp <= 0.0) return lower_;
      if (pp >= 1.0) return upper_;
      const double y = mu_ + sigma_ * normal_icdf(pp);
      return std::fmin(upper_, std::fmax(lower_, y));
    }
    case DistKind::gumbel:
      return loc_ - scale_ * std::log(-std::log(p));
  }
  return 0.0;
}

std::string Distribution::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case DistKind::uniform:
      os << "Uniform(a=" << a_ << ", b=" << b_ << ")";
      break;
    case DistKind::normal:
      os << "Normal(mu=" << mu_ << ", sigma=" << sigma_ << ")";
      break;
    case DistKind::truncated_normal:
      os << "TruncatedNormal(mu=" << mu_ << ", sigma=" << sigma_
         << ", l=" << lower_ << ", u=" << upper_ << ")";
      break;
    case DistKind::gumbel:
      os << "Gumbel(loc=" << loc_ << ", scale=" << scale_ << ")";
      break;
  }
  return os.str();
}

}  // namespace lejasparse
