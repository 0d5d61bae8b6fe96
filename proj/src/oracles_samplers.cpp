#include <cmath>

#include "airystable/gamma.hpp"
#include "airystable/oracles.hpp"

namespace airystable {

double cms_stable_sample(const StableParams& params, double t,
                         RandomStream& rng) {
  const double nu = params.nu;
  if (!(nu > 0.0 && nu <= 2.0))
    throw parameter_error("cms_stable_sample: requires nu in (0,2]");
  if (std::fabs(nu - 1.0) <= 1e-9)
    throw parameter_error("cms_stable_sample: nu = 1 not supported");
  if (!(params.sigma > 0.0) || !(t > 0.0))
    throw parameter_error("cms_stable_sample: requires sigma > 0, t > 0");
  const double v = M_PI * (rng.u01() - 0.5);  // uniform on (-pi/2, pi/2)
  const double e = rng.exp1();
  // Weron's form of the Chambers-Mallows-Stuck transform for the
  // 1-parameterization cf exp(-|g|^nu (1 - i beta sgn g tan(pi nu/2))).
  const double tv = nu == 2.0 ? 0.0 : params.beta * tan_pi_half(nu);
  const double b = std::atan(tv) / nu;
  const double s = std::pow(1.0 + tv * tv, 0.5 / nu);
  const double x = s * std::sin(nu * (v + b)) /
                   std::pow(std::cos(v), 1.0 / nu) *
                   std::pow(std::cos(v - nu * (v + b)) / e,
                            (1.0 - nu) / nu);
  return params.sigma * std::pow(t, 1.0 / nu) * x + params.mu * t;
}

double kanter_subordinator_sample(double theta, double t, RandomStream& rng) {
  if (!(theta > 0.0 && theta < 1.0))
    throw parameter_error("kanter_subordinator_sample: theta in (0,1)");
  if (!(t > 0.0))
    throw parameter_error("kanter_subordinator_sample: requires t > 0");
  const double u = rng.u01();
  const double e = rng.exp1();
  // A(u) = sin(theta pi u)^{theta/(1-theta)} sin((1-theta) pi u)
  //        / sin(pi u)^{1/(1-theta)};  S = (A/E)^{(1-theta)/theta}
  const double q = 1.0 - theta;
  const double log_a = (theta / q) * std::log(std::sin(theta * M_PI * u)) +
                       std::log(std::sin(q * M_PI * u)) -
                       (1.0 / q) * std::log(std::sin(M_PI * u));
  const double x = std::exp((q / theta) * (log_a - std::log(e)));
  return std::pow(t, 1.0 / theta) * x;
}

double ks_distance(const std::vector<double>& sorted_samples,
                   const std::function<double(double)>& cdf) {
  if (sorted_samples.empty())
    throw parameter_error("ks_distance: empty sample");
  const double n = static_cast<double>(sorted_samples.size());
  double ks = 0.0;
  for (size_t i = 0; i < sorted_samples.size(); ++i) {
    const double F = cdf(sorted_samples[i]);
    ks = std::fmax(ks, std::fabs(F - (i + 1.0) / n));
    ks = std::fmax(ks, std::fabs(F - i / n));
  }
  return ks;
}

std::complex<double> empirical_cf(const std::vector<double>& samples,
                                  double gamma) {
  std::complex<double> acc{0.0, 0.0};
  for (double x : samples)
    acc += std::complex<double>(std::cos(gamma * x), std::sin(gamma * x));
  return acc / static_cast<double>(samples.size());
}

}  // namespace airystable
