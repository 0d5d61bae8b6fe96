#ifndef AIRYSTABLE_WRIGHT_HPP
#define AIRYSTABLE_WRIGHT_HPP

#include <memory>

#include "airystable/rng.hpp"
#include "airystable/types.hpp"

namespace airystable {

/// Parameters of the Wright function W_{a,b}(z) = sum_k z^k/(k! Gamma(ak+b)).
/// Requires a > -1 (series convergence).
struct WrightParams {
  double a;
  double b;
};

/// Generalized gamma distribution g(y) = gamma_exp*y^{gamma_exp-1}/tau *
/// exp(-y^{gamma_exp}/tau) on y > 0.
struct GenGammaParams {
  double gamma_exp;
  double tau;
};

/// Largest |z| on the negative axis for which the series evaluation is
/// accepted.  Combines the validated box |z| <= 30 with a cancellation
/// estimate and a term-budget bound (both matter for a close to -1).
double wright_domain_cap(const WrightParams& params);

/// W_{a,b}(z) for z <= 0 with a rigorous truncation + rounding bound.
EvalResult wright(const WrightParams& params, double z);

/// Stable-subordinator density h_theta(x,t) = theta*t/x^{theta+1} *
/// W_{-theta,1-theta}(-t/x^theta), theta in (0,1), x > 0, t > 0.
EvalResult subordinator_density(double theta, double x, double t);

/// Smallest x at which subordinator_density is evaluable for this (theta,t)
/// (left of it the Wright argument exceeds the validated domain; the
/// remaining mass is bounded by subordinator_left_mass_bound).
double subordinator_min_x(double theta, double t);

/// Upper bound on P(S_theta(t) <= subordinator_min_x(theta,t)).
double subordinator_left_mass_bound(double theta, double t);

/// Exact tail probability P(S_theta(t) > x) = int_0^{t x^-theta} W(-z) dz.
EvalResult subordinator_tail_prob(double theta, double x, double t);

double gen_gamma_pdf(const GenGammaParams& params, double y);

/// Exact draw Y = (tau*E)^{1/gamma_exp}, E unit exponential.
double gen_gamma_sample(const GenGammaParams& params, RandomStream& rng);

/// Reusable evaluator: caches the per-term coefficient table, so repeated
/// evaluations at the same (a,b) cost a few quad-precision flops per term.
/// Instances are not safe for concurrent use; copy per thread.
class WrightEvaluator {
 public:
  explicit WrightEvaluator(const WrightParams& params);
  ~WrightEvaluator();
  WrightEvaluator(WrightEvaluator&&) noexcept;
  WrightEvaluator& operator=(WrightEvaluator&&) noexcept;

  EvalResult eval(double z);
  double domain_cap() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace airystable

#endif
