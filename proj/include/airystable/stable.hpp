#ifndef AIRYSTABLE_STABLE_HPP
#define AIRYSTABLE_STABLE_HPP

#include <complex>
#include <memory>

#include "airystable/density.hpp"
#include "airystable/types.hpp"

namespace airystable {

/// Stable law in the 1-parameterization:
/// cf = exp(t(-sigma^nu |g|^nu (1 - i beta sgn g tan(pi nu/2)) + i mu g)).
/// The density-series operations additionally require 1 < nu < 2 and
/// 0 < |beta| < 1.
struct StableParams {
  double nu;
  double beta;
  double sigma = 1.0;
  double mu = 0.0;
};

/// tan(pi x / 2) on (0,2)\{1}, reduced so the pole at x = 1 never loses
/// accuracy through the pi multiplication.
double tan_pi_half(double x);

/// Parameter bridge Y_{alpha,theta} -> stable law: nu = alpha*theta,
/// beta = -tan(pi theta/2)/tan(pi nu/2), sigma = cos(pi theta/2)^{1/nu},
/// mu = 0.  Requires theta in (0,1), alpha*theta in (0,2); throws
/// cauchy_case_error at alpha*theta = 1 and parameter_error when the
/// implied beta would exceed 1 (theta(alpha+1) > 2 for nu > 1).
StableParams forward_params(const SubordinationParams& params);

/// Inverse bridge on nu in (1,2), beta in (0,1]:
/// theta = (2/pi) atan(beta |tan(pi nu/2)|), alpha = nu/theta.
SubordinationParams inverse_params(double nu, double beta);

/// Scale of the subordinated law at horizon t: (t cos(pi theta/2))^{1/nu}.
double subordinated_scale(double theta, double nu, double t);

/// Stable density by the subordinated power series plus affine scaling;
/// beta < 0 goes through the reflection pdf_{nu,-beta,sigma,-mu}(-x).
EvalResult stable_pdf(const StableParams& params, double t, double x);

/// Largest |x - mu t| the series-based stable_pdf accepts at horizon t.
double stable_pdf_domain(const StableParams& params, double t);

/// Characteristic function of the stable law at horizon t; nu != 1.
std::complex<double> stable_cf(const StableParams& params, double t,
                               double gamma);

/// Characteristic function of the subordinated pseudo-process:
/// exp(-t |g|^{alpha theta} (cos(pi theta/2) + i sin(pi theta/2) sgn g)).
std::complex<double> subordinated_cf(const SubordinationParams& params,
                                     double t, double gamma);

/// Cauchy density arising at theta = 1/alpha:
/// (1/pi) t cos(pi/2a) / (t^2 + 2 x t sin(pi/2a) + x^2).
double cauchy_pdf(double alpha, double t, double x);

/// Reusable stable-density evaluator (series + scaling precomputed).
class StablePdf {
 public:
  StablePdf(const StableParams& params, double t);
  ~StablePdf();
  StablePdf(StablePdf&&) noexcept;
  StablePdf& operator=(StablePdf&&) noexcept;

  EvalResult eval(double x);
  double domain() const;  // |x - mu t| bound

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace airystable

#endif
