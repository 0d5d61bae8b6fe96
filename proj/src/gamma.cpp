#include "airystable/gamma.hpp"

#include <cmath>
#include <limits>

#include "airystable/types.hpp"

namespace airystable {

double log_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw domain_error("log_gamma: requires finite x > 0");
  return std::lgamma(x);
}

double sin_pi(double x) {
  // Reduce to |r| <= 1/2 where the folding 1-r / -1-r is exact.
  double r = std::remainder(x, 2.0);
  if (r > 0.5)
    r = 1.0 - r;
  else if (r < -0.5)
    r = -1.0 - r;
  return std::sin(M_PI * r);
}

double cos_pi(double x) {
  double r = std::fabs(std::remainder(x, 2.0));
  if (r > 0.5) return -std::sin(M_PI * (r - 0.5));
  return std::sin(M_PI * (0.5 - r));
}

SignedLog log_reciprocal_gamma(double x) {
  if (x > 0.5) return {-std::lgamma(x), 1};
  // Poles of Gamma at non-positive integers: the reciprocal vanishes.
  if (x == std::floor(x)) return {-std::numeric_limits<double>::infinity(), 0};
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi.
  const double s = sin_pi(x);
  const double la = std::log(std::fabs(s)) + std::lgamma(1.0 - x) -
                    std::log(M_PI);
  return {la, s > 0.0 ? 1 : -1};
}

double reciprocal_gamma(double x) {
  if (!std::isfinite(x))
    throw domain_error("reciprocal_gamma: requires finite x");
  const SignedLog lr = log_reciprocal_gamma(x);
  if (lr.sign == 0) return 0.0;
  return lr.sign * std::exp(lr.log_abs);
}

}  // namespace airystable
