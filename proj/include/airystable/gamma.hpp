#ifndef AIRYSTABLE_GAMMA_HPP
#define AIRYSTABLE_GAMMA_HPP

namespace airystable {

/// ln Gamma(x) for x > 0.  Relative accuracy 1e-13 on (0, 170].
/// Throws domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

/// 1/Gamma(x) for any finite x; exactly 0 at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

/// sin(pi*x) and cos(pi*x) with exact argument reduction.
double sin_pi(double x);
double cos_pi(double x);

/// log|1/Gamma(x)| with the sign of 1/Gamma(x); sign 0 at poles.
/// Usable over the whole real line (reflection for x <= 0.5).
struct SignedLog {
  double log_abs;
  int sign;
};
SignedLog log_reciprocal_gamma(double x);

}  // namespace airystable

#endif
