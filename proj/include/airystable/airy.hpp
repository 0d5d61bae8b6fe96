#ifndef AIRYSTABLE_AIRY_HPP
#define AIRYSTABLE_AIRY_HPP

#include <memory>

#include "airystable/types.hpp"

namespace airystable {

/// Spatial order: odd integer 2n+1 (n >= 1) or real alpha > 1.  Both kinds
/// agree numerically when alpha = 2n+1.
class OrderSpec {
 public:
  static OrderSpec odd(int n);
  static OrderSpec fractional(double alpha);

  bool is_odd() const { return n_ > 0; }
  int odd_n() const;
  double effective_alpha() const { return alpha_; }

 private:
  OrderSpec(int n, double alpha) : n_(n), alpha_(alpha) {}
  int n_ = 0;          // 0 for fractional
  double alpha_ = 0.0;  // always the effective order
};

/// Largest |x| accepted by the power series for this order (combined
/// |x|*alpha^{1/alpha} <= 8 box and cancellation-peak cap).  Outside it the
/// series refuses and the quadrature oracle should be used.
double airy_series_domain(double alpha);

/// Higher-order Airy function Ai_{2n+1}(x) by power series, n >= 1.
EvalResult airy_odd(int n, double x);

/// Fractional Airy function Ai_alpha(x) by power series, alpha > 1.
EvalResult airy_frac(double alpha, double x);

/// Classical Airy power series (independent formula; must agree with
/// airy_odd(1, .) through the gamma triplication identity).
EvalResult classical_airy_series(double z);

/// Large-order limit of the odd pseudo-density: sin(x)/(pi x), 1/pi at 0.
double airy_sinc_limit(double x);

/// Reusable series evaluator (cached coefficient table).  Not safe for
/// concurrent use of a single instance.
class AirySeries {
 public:
  explicit AirySeries(const OrderSpec& order);
  ~AirySeries();
  AirySeries(AirySeries&&) noexcept;
  AirySeries& operator=(AirySeries&&) noexcept;

  EvalResult eval(double x);
  /// m-th derivative of the series (termwise), for residual checks.
  EvalResult eval_derivative(int m, double x);
  double domain() const;
  double order_alpha() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace airystable

#endif
