#include <cmath>

#include "airystable/gamma.hpp"
#include "airystable/oracles.hpp"
#include "airystable/wright.hpp"

namespace airystable {

MellinCheck mellin_wright_check(double theta, double eta,
                                const QuadratureConfig& cfg) {
  validate(cfg);
  if (!(theta > 0.0 && theta < 1.0))
    throw parameter_error("mellin_wright_check: theta in (0,1)");
  if (!(eta > 0.0)) throw parameter_error("mellin_wright_check: eta > 0");
  const double pole_arg = 1.0 - theta + theta * eta;
  if (pole_arg <= 0.0 && pole_arg == std::floor(pole_arg))
    throw parameter_error(
        "mellin_wright_check: Gamma(1-theta+theta*eta) at a pole");

  WrightEvaluator w({-theta, 1.0 - theta});
  // substitution x = u^m removes the algebraic endpoint singularity of
  // x^{eta-1} for eta < 1
  const int m = std::max(2, static_cast<int>(std::ceil(1.0 / eta)));
  const double z_hi =
      cfg.tail_cutoff > 0.0 ? std::fmin(cfg.tail_cutoff, w.domain_cap())
                            : w.domain_cap() * 0.9999;
  const double u_hi = std::pow(z_hi, 1.0 / m);
  auto f = [&](double u) {
    const double x = std::pow(u, m);
    return m * std::pow(u, m * eta - 1.0) * w.eval(-x).value;
  };
  const QuadResult q =
      integrate(f, 0.0, u_hi, cfg.abs_tol, cfg.max_subdivisions);
  const double rhs = std::exp(log_gamma(eta) - log_gamma(pole_arg));
  return {q.value, rhs};
}

}  // namespace airystable
