#ifndef AIRYSTABLE_DETAIL_ORACLES_INTERNAL_HPP
#define AIRYSTABLE_DETAIL_ORACLES_INTERNAL_HPP

#include <functional>
#include <vector>

#include "airystable/density.hpp"
#include "airystable/types.hpp"

namespace airystable::detail {

// Direct real-axis evaluation of (1/pi) int_0^inf cos(x s + s^alpha/alpha) ds
// (stationary-phase-aware bulk + Euler-accelerated half-period tail).
EvalResult airy_oscillatory(double alpha, double x, double abs_tol);

// Density of the subordinated pseudo-process by cf inversion,
// p(x) = (1/pi) int_0^inf Re[e^{-i g x} cf(g)] dg; valid for any x when
// alpha*theta < 2 and theta < 1 (decaying envelope).
double subordinated_density_from_cf(const SubordinationParams& params,
                                    double x, double t, double abs_tol);

// Gil-Pelaez CDF of the stable law (closed-form cf), any x.
double gil_pelaez_stable_cdf(const StableParams& params, double t, double x,
                             double abs_tol);

// Iterated averaging of the partial sums of an alternating sequence;
// err_est receives the last averaging increment.
double euler_limit(const std::vector<double>& terms, double* err_est);

}  // namespace airystable::detail

#endif
