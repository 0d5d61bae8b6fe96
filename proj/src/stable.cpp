#include "airystable/stable.hpp"

#include <cfloat>
#include <cmath>

#include "airystable/gamma.hpp"

namespace airystable {

namespace {

constexpr double kNuOneTol = 1e-9;

void require_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw domain_error("stable: requires t > 0");
}

}  // namespace

double tan_pi_half(double x) {
  if (!(x > 0.0 && x < 2.0) || x == 1.0)
    throw parameter_error("tan_pi_half: requires x in (0,2), x != 1");
  if (x < 0.5) return std::tan(M_PI_2 * x);
  if (x < 1.0) return 1.0 / std::tan(M_PI_2 * (1.0 - x));
  if (x < 1.5) return -1.0 / std::tan(M_PI_2 * (x - 1.0));
  return -std::tan(M_PI_2 * (2.0 - x));
}

StableParams forward_params(const SubordinationParams& params) {
  validate(params);
  if (!(params.theta < 1.0))
    throw parameter_error("forward_params: requires theta < 1");
  const double nu = params.alpha * params.theta;
  if (nu >= 2.0)
    throw parameter_error("forward_params: alpha*theta >= 2, no stable law");
  if (std::fabs(nu - 1.0) <= kNuOneTol)
    throw cauchy_case_error(
        "forward_params: alpha*theta = 1 is the Cauchy case (use "
        "cauchy_pdf)");
  if (nu > 1.0 && params.theta * (params.alpha + 1.0) > 2.0 + 1e-12)
    throw parameter_error("forward_params: no stable law: implied beta > 1");
  StableParams out;
  out.nu = nu;
  out.beta = -tan_pi_half(params.theta) / tan_pi_half(nu);
  out.sigma = std::pow(cos_pi(0.5 * params.theta), 1.0 / nu);
  out.mu = 0.0;
  return out;
}

SubordinationParams inverse_params(double nu, double beta) {
  if (!(nu > 1.0 && nu < 2.0))
    throw parameter_error("inverse_params: requires nu in (1,2)");
  if (!(beta > 0.0 && beta <= 1.0))
    throw parameter_error("inverse_params: requires beta in (0,1]");
  // |tan(pi nu/2)| = 1/tan(pi(nu-1)/2) for nu in (1,2)
  const double theta =
      M_2_PI * std::atan(beta / std::tan(M_PI_2 * (nu - 1.0)));
  return {nu / theta, theta};
}

double subordinated_scale(double theta, double nu, double t) {
  require_time(t);
  return std::pow(t * cos_pi(0.5 * theta), 1.0 / nu);
}

std::complex<double> stable_cf(const StableParams& params, double t,
                               double gamma) {
  require_time(t);
  if (!(params.nu > 0.0 && params.nu <= 2.0))
    throw parameter_error("stable_cf: requires nu in (0,2]");
  if (std::fabs(params.nu - 1.0) <= kNuOneTol)
    throw parameter_error("stable_cf: nu = 1 (Cauchy path instead)");
  if (!(params.sigma > 0.0))
    throw parameter_error("stable_cf: requires sigma > 0");
  if (gamma == 0.0) return {1.0, 0.0};
  const double sg = gamma > 0.0 ? 1.0 : -1.0;
  const double mag = std::pow(params.sigma * std::fabs(gamma), params.nu);
  const std::complex<double> expo(
      -mag, mag * params.beta * sg * tan_pi_half(params.nu) +
                params.mu * gamma);
  return std::exp(t * expo);
}

std::complex<double> subordinated_cf(const SubordinationParams& params,
                                     double t, double gamma) {
  validate(params);
  require_time(t);
  if (gamma == 0.0) return {1.0, 0.0};
  const double nu = params.alpha * params.theta;
  const double sg = gamma > 0.0 ? 1.0 : -1.0;
  const double mag = t * std::pow(std::fabs(gamma), nu);
  // exp(-t|g|^nu e^{i pi theta/2 sgn g}); exact at theta = 1.
  const double c = cos_pi(0.5 * params.theta);
  const double s = sin_pi(0.5 * params.theta);
  return std::exp(std::complex<double>(-mag * c, -mag * s * sg));
}

double cauchy_pdf(double alpha, double t, double x) {
  if (!(alpha > 1.0))
    throw parameter_error("cauchy_pdf: requires alpha > 1");
  require_time(t);
  const double c = cos_pi(0.5 / alpha);
  const double s = sin_pi(0.5 / alpha);
  return t * c / (M_PI * (t * t + 2.0 * x * t * s + x * x));
}

struct StablePdf::Impl {
  StableParams params;
  double t;
  bool reflected;
  SubordinationParams sub;
  SubordinatedSeries series;
  double scale_ratio;  // sigma0 / sigma_tilde
  double location;     // mu * t (after reflection handling)

  static SubordinationParams make_sub(const StableParams& p) {
    if (std::fabs(p.nu - 1.0) <= kNuOneTol)
      throw cauchy_case_error(
          "stable_pdf: nu = 1 (use cauchy_pdf with alpha = 1/theta)");
    if (!(p.nu > 1.0 && p.nu < 2.0))
      throw parameter_error("stable_pdf: requires nu in (1,2)");
    const double ab = std::fabs(p.beta);
    if (!(ab > 0.0 && ab < 1.0))
      throw parameter_error(
          "stable_pdf: requires 0 < |beta| < 1 (totally skewed and "
          "symmetric laws are outside the series' validated scope)");
    if (!(p.sigma > 0.0))
      throw parameter_error("stable_pdf: requires sigma > 0");
    return inverse_params(p.nu, ab);
  }

  Impl(const StableParams& p, double t_in)
      : params(p),
        t(t_in),
        reflected(p.beta < 0.0),
        sub(make_sub(p)),
        series(sub) {
    require_time(t);
    const double sigma0 = subordinated_scale(sub.theta, p.nu, t);
    const double sigma_t = p.sigma * std::pow(t, 1.0 / p.nu);
    scale_ratio = sigma0 / sigma_t;
    location = (reflected ? -p.mu : p.mu) * t;
  }

  EvalResult eval(double x) {
    if (reflected) x = -x;
    const double z = (x - location) * scale_ratio;
    const EvalResult r = series.eval(z, t);
    return {r.value * scale_ratio,
            r.err_bound * scale_ratio +
                2.0 * DBL_EPSILON * std::fabs(r.value * scale_ratio),
            r.terms};
  }

  double domain() const { return series.domain(t) / scale_ratio; }
};

StablePdf::StablePdf(const StableParams& params, double t)
    : impl_(std::make_unique<Impl>(params, t)) {}
StablePdf::~StablePdf() = default;
StablePdf::StablePdf(StablePdf&&) noexcept = default;
StablePdf& StablePdf::operator=(StablePdf&&) noexcept = default;

EvalResult StablePdf::eval(double x) { return impl_->eval(x); }
double StablePdf::domain() const { return impl_->domain(); }

EvalResult stable_pdf(const StableParams& params, double t, double x) {
  StablePdf p(params, t);
  return p.eval(x);
}

double stable_pdf_domain(const StableParams& params, double t) {
  StablePdf p(params, t);
  return p.domain();
}

}  // namespace airystable
