#ifndef AIRYSTABLE_QUADRATURE_HPP
#define AIRYSTABLE_QUADRATURE_HPP

#include <complex>
#include <functional>

#include "airystable/types.hpp"

namespace airystable {

/// Tolerances for the adaptive quadrature and the oracle integrals.
struct QuadratureConfig {
  double abs_tol = 1e-10;
  int max_subdivisions = 4000;
  /// 0 = choose the truncation radius automatically from the integrand
  /// decay estimate; otherwise use this radius.
  double tail_cutoff = 0.0;
};

/// Validates the config invariants (abs_tol >= 16*machine epsilon, ...).
void validate(const QuadratureConfig& cfg);

struct QuadResult {
  double value = 0.0;
  double err = 0.0;
  long evals = 0;
};

struct QuadResultC {
  std::complex<double> value{0.0, 0.0};
  double err = 0.0;
  long evals = 0;
};

/// Adaptive Gauss quadrature (embedded 12/25-point pair, worst-interval
/// subdivision) on the finite interval [a,b].  Throws convergence_error if
/// the subdivision budget is exhausted before reaching abs_tol.
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, int max_subdivisions = 4000);

QuadResultC integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, int max_subdivisions = 4000);

}  // namespace airystable

#endif
