#ifndef AIRYSTABLE_ORACLES_HPP
#define AIRYSTABLE_ORACLES_HPP

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "airystable/quadrature.hpp"
#include "airystable/rng.hpp"
#include "airystable/stable.hpp"
#include "airystable/types.hpp"

namespace airystable {

/// Contour-rotated quadrature for Ai_alpha(x):
/// (1/pi) Re[e^{i pi/(2a)} int_0^inf exp(i x r e^{i pi/(2a)} - r^a/a) dr].
/// Negative x escalates the working precision with the integrand peak and
/// falls back to direct real-axis oscillatory integration where no fixed
/// precision can carry the rotated integrand.
EvalResult airy_frac_quadrature(double alpha, double x,
                                const QuadratureConfig& cfg);

/// Same integral at odd order 2n+1 (identical rotation identity).
EvalResult airy_odd_quadrature(int n, double x, const QuadratureConfig& cfg);

/// u_alpha(x,t) through the rotated-contour oracle after rescaling by
/// (alpha t)^{1/alpha}.
EvalResult fourier_cosine_density(double alpha, double x, double t,
                                  const QuadratureConfig& cfg);

/// Mass of the theta=1 pseudo-process left of x:
/// 1/2 + (1/pi) int_0^inf sin(g x + t g^alpha)/g dg  (conditionally
/// convergent; evaluated with half-period panels and iterated averaging).
double pseudo_cdf_theta1(double alpha, double x, double t, double abs_tol);

/// int u_alpha(x,t) dx over [-hw, hw] (series inside its domain, quadrature
/// oracle outside) plus the oracle-computed tail masses beyond.
double u_frac_total_mass(double alpha, double t, double half_width,
                         const QuadratureConfig& cfg);

/// Exact stable draw at horizon t in the 1-parameterization
/// (Chambers-Mallows-Stuck / Weron form); nu != 1.
double cms_stable_sample(const StableParams& params, double t,
                         RandomStream& rng);

/// Positive draw with E[exp(-lam S)] = exp(-t lam^theta) (Kanter's method).
double kanter_subordinator_sample(double theta, double t, RandomStream& rng);

/// Mellin identity of the Wright function:
/// lhs = int_0^inf W_{-theta,1-theta}(-x) x^{eta-1} dx (quadrature over the
/// series), rhs = Gamma(eta)/Gamma(1-theta+theta*eta).
struct MellinCheck {
  double lhs;
  double rhs;
};
MellinCheck mellin_wright_check(double theta, double eta,
                                const QuadratureConfig& cfg);

/// Sup distance between the empirical CDF of sorted samples and cdf.
double ks_distance(const std::vector<double>& sorted_samples,
                   const std::function<double(double)>& cdf);

/// Mean of exp(i gamma x_j) over the sample.
std::complex<double> empirical_cf(const std::vector<double>& samples,
                                  double gamma);

/// Spectral residual of du/dt = D^alpha_theta u on a uniform grid:
/// du/dt by central difference (step dt), D u by discrete Fourier
/// multiplication with the symbol -|g|^alpha e^{i pi theta/2 sgn g}.
struct SpectralGrid {
  double half_width = 40.0;
  int n_points = 4096;  // power of two
  double dt = 1e-4;
};
double riesz_feller_spectral_check(double alpha, double theta_op, double t,
                                   const SpectralGrid& grid);

/// Analytic CDF of the series stable law: cumulative series integration on
/// the validated bulk, cf-inversion wings, power-law extrapolation beyond.
class StableCdf {
 public:
  StableCdf(const StableParams& params, double t);
  ~StableCdf();
  StableCdf(StableCdf&&) noexcept;
  StableCdf& operator=(StableCdf&&) noexcept;

  double cdf(double x) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Analytic CDF of the stable subordinator from the Wright series:
/// P(S > x) = int_0^{t x^-theta} W(-z) dz.
class SubordinatorCdf {
 public:
  SubordinatorCdf(double theta, double t);
  ~SubordinatorCdf();
  SubordinatorCdf(SubordinatorCdf&&) noexcept;
  SubordinatorCdf& operator=(SubordinatorCdf&&) noexcept;

  double cdf(double x) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace airystable

#endif
