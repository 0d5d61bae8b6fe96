#ifndef AIRYSTABLE_DENSITY_HPP
#define AIRYSTABLE_DENSITY_HPP

#include <memory>

#include "airystable/airy.hpp"
#include "airystable/types.hpp"

namespace airystable {

/// Time-changed pseudo-process Y_{alpha,theta}: spatial order alpha > 1 and
/// subordinator exponent theta in (0,1]; theta = 1 means no subordination.
/// The series operations additionally require alpha*theta > 1.
struct SubordinationParams {
  double alpha;
  double theta;
};

void validate(const SubordinationParams& params);

/// Pseudo-density of the odd-order pseudo-process:
/// u_{2n+1}(x,t) = Ai_{2n+1}(x/c)/c with c = (t(2n+1))^{1/(2n+1)}.
EvalResult u_odd(int n, double x, double t);

/// Pseudo-density of the fractional pseudo-process:
/// u_alpha(x,t) = Ai_alpha(x/c)/c with c = (alpha t)^{1/alpha}.
EvalResult u_frac(double alpha, double x, double t);

/// Density of the subordinated pseudo-process by power series; requires
/// alpha*theta > 1.  At x = 0 returns the analytic k=1 limit.  theta = 1
/// flows through the same series and reduces termwise to u_frac.
EvalResult subordinated_density(const SubordinationParams& params, double x,
                                double t);

/// Largest |x| the subordinated series accepts at this (params, t).
double subordinated_series_domain(const SubordinationParams& params,
                                  double t);

/// Monte Carlo estimate of the same density from the damped-oscillation
/// representation: (1/(pi x)) E[exp(-sin(pi/2a) x G) sin(cos(pi/2a) x G)]
/// with G generalized-gamma(alpha*theta, 1/t).  Deterministic for a fixed
/// (seed, worker count); workers <= 0 selects automatically.
MCEstimate mc_subordinated_density(const SubordinationParams& params,
                                   double x, double t, long long n_samples,
                                   unsigned long long seed, int workers = 0);

/// Reusable evaluator for the subordinated series (cached coefficients).
class SubordinatedSeries {
 public:
  explicit SubordinatedSeries(const SubordinationParams& params);
  ~SubordinatedSeries();
  SubordinatedSeries(SubordinatedSeries&&) noexcept;
  SubordinatedSeries& operator=(SubordinatedSeries&&) noexcept;

  EvalResult eval(double x, double t);
  double domain(double t) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace airystable

#endif
