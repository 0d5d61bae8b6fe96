#include "airystable/wright.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <vector>

#include "airystable/gamma.hpp"
#include "airystable/quadrature.hpp"
#include "detail/f128.hpp"
#include "detail/series_engine.hpp"

namespace airystable {

using detail::f128;

namespace {

void validate_params(const WrightParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || p.a <= -1.0)
    throw parameter_error("wright: requires finite a > -1, finite b");
}

// Decay-rate constant of W_{-theta,1-theta}(-z) ~ exp(-c z^{1/(1-theta)}).
double wright_decay_c(double theta) {
  return (1.0 - theta) * std::pow(theta, theta / (1.0 - theta));
}

}  // namespace

struct WrightEvaluator::Impl {
  double a, b;
  double z_cap;
  // Per-term data: log(1/(k! |Gamma(ak+b)|)) in quad, its sign, and a
  // double log-majorant (reflection bound with |sin| dropped).
  std::vector<f128> log_coef;
  std::vector<signed char> sign_coef;
  std::vector<double> log_majorant;

  explicit Impl(const WrightParams& p) : a(p.a), b(p.b) {
    z_cap = compute_cap();
  }

  void ensure(int k) {
    while (static_cast<int>(log_coef.size()) <= k) {
      const int j = static_cast<int>(log_coef.size());
      const f128 y = f128(a) * j + f128(b);
      const auto lr = detail::log_reciprocal_gamma_q(y);
      const f128 lf = lgammaq(f128(j + 1));
      log_coef.push_back(lr.log_abs - lf);
      sign_coef.push_back(static_cast<signed char>(lr.sign));
      const double yd = detail::to_double(y);
      double lm_rg;
      if (yd > 0.0)
        lm_rg = -std::lgamma(yd);
      else
        lm_rg = std::lgamma(1.0 - yd) - std::log(M_PI);
      log_majorant.push_back(lm_rg - std::lgamma(double(j) + 1.0));
    }
  }

  // Majorant of log(1/(k!|Gamma(ak+b)|)) at arbitrary k, table-free.
  double majorant_at(int k) const {
    const double y = a * k + b;
    const double lm_rg =
        y > 0.0 ? -std::lgamma(y) : std::lgamma(1.0 - y) - std::log(M_PI);
    return lm_rg - std::lgamma(double(k) + 1.0);
  }

  double compute_cap() const {
    double cap = 30.0;  // validated box
    // Term budget: majorant ratio must be below kRhoMax by kTermBudget.
    {
      const int k = detail::kTermBudget;
      const double dl = majorant_at(k + 1) - majorant_at(k);
      cap = std::fmin(cap, detail::kRhoMax * std::exp(-dl));
    }
    if (a < 0.0) {
      // Cancellation guard: Stirling estimate of the term peak.
      const double theta = -a;
      const double q = 1.0 - theta;
      const double a_max = q * (std::log(detail::kLogPeakCap / q) + 1.0);
      const double log_z =
          a_max - (1.0 - theta) - theta * std::log(theta);
      cap = std::fmin(cap, std::exp(log_z));
    }
    return cap;
  }

  EvalResult eval(double z) {
    if (!std::isfinite(z) || z > 0.0)
      throw domain_error("wright: requires finite z <= 0");
    if (-z > z_cap)
      throw domain_error(
          "wright: |z| beyond the validated cancellation domain for these "
          "parameters");
    ensure(0);
    if (z == 0.0) {
      const double v = sign_coef[0] * std::exp(detail::to_double(log_coef[0]));
      return {v, 4.0 * DBL_EPSILON * std::fabs(v), 1};
    }
    const double az = -z;
    const f128 lz = logq(f128(az));
    const double lzd = std::log(az);
    f128 sum = 0, sum_abs = 0;
    detail::GeometricTail tail_rule;
    for (int k = 0; k < detail::kSeriesTermCap; ++k) {
      ensure(k);
      if (sign_coef[k] != 0) {
        const f128 lt = f128(k) * lz + log_coef[k];
        f128 t = expq(lt);
        sum_abs += t;
        if (sign_coef[k] < 0) t = -t;
        if (k & 1) t = -t;  // z < 0
        sum += t;
      }
      const double tail = tail_rule.update(k * lzd + log_majorant[k]);
      const double value = detail::to_double(sum);
      if (tail < detail::stop_tolerance(std::fabs(value))) {
        const double round_err =
            detail::kRoundC * detail::kF128Eps * detail::to_double(sum_abs) +
            2.0 * DBL_EPSILON * std::fabs(value);
        return {value, tail + round_err, k + 1};
      }
    }
    const double value = detail::to_double(sum);
    throw convergence_error(
        "wright: term cap reached before tail bound met tolerance",
        {value, std::numeric_limits<double>::infinity(),
         detail::kSeriesTermCap});
  }
};

WrightEvaluator::WrightEvaluator(const WrightParams& params) {
  validate_params(params);
  impl_ = std::make_unique<Impl>(params);
}
WrightEvaluator::~WrightEvaluator() = default;
WrightEvaluator::WrightEvaluator(WrightEvaluator&&) noexcept = default;
WrightEvaluator& WrightEvaluator::operator=(WrightEvaluator&&) noexcept =
    default;

EvalResult WrightEvaluator::eval(double z) { return impl_->eval(z); }
double WrightEvaluator::domain_cap() const { return impl_->z_cap; }

double wright_domain_cap(const WrightParams& params) {
  WrightEvaluator ev(params);
  return ev.domain_cap();
}

EvalResult wright(const WrightParams& params, double z) {
  WrightEvaluator ev(params);
  return ev.eval(z);
}

namespace {

void validate_theta(double theta) {
  if (!(theta > 0.0 && theta < 1.0))
    throw parameter_error("subordinator: requires theta in (0,1)");
}

void validate_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw domain_error("subordinator: requires t > 0");
}

}  // namespace

EvalResult subordinator_density(double theta, double x, double t) {
  validate_theta(theta);
  validate_t(t);
  if (!(x > 0.0))
    throw domain_error("subordinator_density: support is x > 0");
  WrightEvaluator w({-theta, 1.0 - theta});
  const double z = t / std::pow(x, theta);
  const EvalResult wr = w.eval(-z);
  const double scale = theta * t * std::pow(x, -theta - 1.0);
  return {scale * wr.value,
          scale * wr.err_bound + 4.0 * DBL_EPSILON * std::fabs(scale * wr.value),
          wr.terms};
}

double subordinator_min_x(double theta, double t) {
  validate_theta(theta);
  validate_t(t);
  WrightEvaluator w({-theta, 1.0 - theta});
  return std::pow(t / w.domain_cap(), 1.0 / theta);
}

double subordinator_left_mass_bound(double theta, double t) {
  validate_theta(theta);
  validate_t(t);
  WrightEvaluator w({-theta, 1.0 - theta});
  const double z = w.domain_cap();
  const double p = 1.0 / (1.0 - theta);
  const double c = wright_decay_c(theta);
  // P(S <= x_min) = int_{z_cap}^inf W(-u) du; bound the integrand by its
  // exponential envelope and integrate the envelope.
  const double slope = c * p * std::pow(z, p - 1.0);
  return 10.0 * std::exp(-c * std::pow(z, p)) / std::fmax(slope, 1e-3);
}

EvalResult subordinator_tail_prob(double theta, double x, double t) {
  validate_theta(theta);
  validate_t(t);
  if (!(x > 0.0))
    throw domain_error("subordinator_tail_prob: support is x > 0");
  WrightEvaluator w({-theta, 1.0 - theta});
  const double zx = t / std::pow(x, theta);
  if (zx > w.domain_cap())
    throw domain_error("subordinator_tail_prob: x below evaluable support");
  double max_pt_err = 0.0;
  auto f = [&](double z) {
    EvalResult r = w.eval(-z);
    max_pt_err = std::fmax(max_pt_err, r.err_bound);
    return r.value;
  };
  const QuadResult q = integrate(f, 0.0, zx, 1e-12, 4000);
  return {q.value, q.err + max_pt_err * zx, q.evals};
}

double gen_gamma_pdf(const GenGammaParams& params, double y) {
  if (!(params.gamma_exp > 0.0) || !(params.tau > 0.0))
    throw parameter_error("gen_gamma: requires gamma_exp > 0, tau > 0");
  if (!(y > 0.0)) throw domain_error("gen_gamma_pdf: support is y > 0");
  const double g = params.gamma_exp;
  const double yg = std::pow(y, g);
  return g * yg / (y * params.tau) * std::exp(-yg / params.tau);
}

double gen_gamma_sample(const GenGammaParams& params, RandomStream& rng) {
  if (!(params.gamma_exp > 0.0) || !(params.tau > 0.0))
    throw parameter_error("gen_gamma: requires gamma_exp > 0, tau > 0");
  return std::pow(params.tau * rng.exp1(), 1.0 / params.gamma_exp);
}

}  // namespace airystable
