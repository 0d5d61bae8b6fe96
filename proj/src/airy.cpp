#include "airystable/airy.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <vector>

#include "detail/f128.hpp"
#include "detail/series_engine.hpp"

namespace airystable {

using detail::f128;

OrderSpec OrderSpec::odd(int n) {
  if (n < 1) throw parameter_error("OrderSpec: odd order needs n >= 1");
  return OrderSpec(n, double(2 * n + 1));
}

OrderSpec OrderSpec::fractional(double alpha) {
  if (!(alpha > 1.0) || !std::isfinite(alpha))
    throw parameter_error("OrderSpec: fractional order needs alpha > 1");
  return OrderSpec(0, alpha);
}

int OrderSpec::odd_n() const {
  if (!is_odd()) throw parameter_error("OrderSpec: not an odd order");
  return n_;
}

double airy_series_domain(double alpha) {
  if (!(alpha > 1.0))
    throw parameter_error("airy_series_domain: requires alpha > 1");
  const double q = 1.0 - 1.0 / alpha;
  const double a_max = q * (std::log(detail::kLogPeakCap / q) + 1.0);
  const double w_cancel =
      std::exp(a_max - 1.0 + (1.0 + std::log(alpha)) / alpha);
  return std::fmin(8.0, w_cancel) / std::pow(alpha, 1.0 / alpha);
}

struct AirySeries::Impl {
  double alpha;
  int odd_n;  // 0 for fractional
  double x_max;
  f128 prefactor;  // 1/(pi alpha^{(alpha-1)/alpha})
  f128 log_a1a;    // log(alpha)/alpha
  std::vector<f128> log_coef;
  std::vector<signed char> sign_coef;
  std::vector<double> log_majorant;

  explicit Impl(const OrderSpec& order)
      : alpha(order.effective_alpha()),
        odd_n(order.is_odd() ? order.odd_n() : 0) {
    x_max = airy_series_domain(alpha);
    const f128 aq = f128(alpha);
    log_a1a = logq(aq) / aq;
    prefactor = expq(-(aq - 1) * log_a1a) / M_PIq;
  }

  // sin(pi (k+1)(alpha+1)/(2 alpha)); exact rational reduction for odd
  // orders so сos zeros drop terms exactly.
  detail::SignedLogQ sin_factor(int k) const {
    f128 s;
    if (odd_n > 0) {
      const long denom = 2 * odd_n + 1;
      const long m = (static_cast<long>(k + 1) * (odd_n + 1)) % (2 * denom);
      if (m % denom == 0) return {-HUGE_VALQ, 0};
      s = sinq(M_PIq * f128(m) / f128(denom));
    } else {
      const f128 ang =
          fmodq(f128(k + 1) * (f128(alpha) + 1) / (2 * f128(alpha)), f128(2));
      s = sinq(M_PIq * ang);
      if (s == 0) return {-HUGE_VALQ, 0};
    }
    return {logq(fabsq(s)), s > 0 ? 1 : -1};
  }

  void ensure(int k) {
    while (static_cast<int>(log_coef.size()) <= k) {
      const int j = static_cast<int>(log_coef.size());
      const auto sf = sin_factor(j);
      const f128 lg = lgammaq(f128(j + 1) / f128(alpha));
      const f128 lf = lgammaq(f128(j + 1));
      log_coef.push_back(sf.log_abs + lg + f128(j) * log_a1a - lf);
      sign_coef.push_back(static_cast<signed char>(sf.sign));
      log_majorant.push_back(std::lgamma((j + 1) / alpha) +
                             j * std::log(alpha) / alpha -
                             std::lgamma(double(j) + 1.0));
    }
  }

  void check_domain(double x) const {
    if (!std::isfinite(x)) throw domain_error("airy: non-finite argument");
    if (std::fabs(x) > x_max)
      throw domain_error(
          "airy: |x| outside the validated cancellation domain; use the "
          "quadrature oracle");
  }

  EvalResult sum_from(int k0, int deriv, double x) {
    const double ax = std::fabs(x);
    const f128 lx = ax > 0 ? logq(f128(ax)) : 0;
    const double lxd = ax > 0 ? std::log(ax) : 0.0;
    f128 sum = 0, sum_abs = 0;
    detail::GeometricTail tail_rule;
    for (int k = k0; k < detail::kSeriesTermCap; ++k) {
      ensure(k);
      f128 lshift = 0;
      double lshift_d = 0.0;
      if (deriv > 0) {
        lshift = lgammaq(f128(k + 1)) - lgammaq(f128(k - deriv + 1));
        lshift_d = std::lgamma(double(k) + 1.0) -
                   std::lgamma(double(k - deriv) + 1.0);
      }
      const int p = k - deriv;  // power of x in this term
      if (sign_coef[k] != 0 && (ax > 0.0 || p == 0)) {
        const f128 lt = f128(p) * lx + log_coef[k] + lshift;
        f128 t = expq(lt);
        sum_abs += t;
        if (sign_coef[k] < 0) t = -t;
        if (x < 0.0 && (p & 1)) t = -t;
        sum += t;
      }
      double lm = log_majorant[k] + lshift_d;
      if (ax > 0.0) lm += p * lxd;
      const double tail = tail_rule.update(lm);
      const double partial = detail::to_double(prefactor * sum);
      if (tail < detail::stop_tolerance(std::fabs(partial)) &&
          (ax > 0.0 || k >= k0 + 4)) {
        const double pf = detail::to_double(prefactor);
        const double round_err =
            detail::kRoundC * detail::kF128Eps *
                detail::to_double(prefactor * sum_abs) +
            2.0 * DBL_EPSILON * std::fabs(partial);
        return {partial, pf * tail + round_err, k + 1};
      }
    }
    throw convergence_error(
        "airy: term cap reached before tail bound met tolerance",
        {detail::to_double(prefactor * sum),
         std::numeric_limits<double>::infinity(), detail::kSeriesTermCap});
  }

  // single surviving term when the argument is exactly zero
  EvalResult at_zero(int k) {
    ensure(k);
    f128 lshift = 0;
    if (k > 0) lshift = lgammaq(f128(k + 1));
    const double v =
        sign_coef[k] *
        detail::to_double(prefactor * expq(log_coef[k] + lshift));
    return {v, 4.0 * DBL_EPSILON * std::fabs(v), 1};
  }

  EvalResult eval(double x) {
    check_domain(x);
    if (x == 0.0) return at_zero(0);
    return sum_from(0, 0, x);
  }

  EvalResult eval_derivative(int m, double x) {
    if (m < 0) throw parameter_error("airy: derivative order must be >= 0");
    check_domain(x);
    if (x == 0.0) return at_zero(m);
    return sum_from(m, m, x);
  }
};

AirySeries::AirySeries(const OrderSpec& order)
    : impl_(std::make_unique<Impl>(order)) {}
AirySeries::~AirySeries() = default;
AirySeries::AirySeries(AirySeries&&) noexcept = default;
AirySeries& AirySeries::operator=(AirySeries&&) noexcept = default;

EvalResult AirySeries::eval(double x) { return impl_->eval(x); }
EvalResult AirySeries::eval_derivative(int m, double x) {
  return impl_->eval_derivative(m, x);
}
double AirySeries::domain() const { return impl_->x_max; }
double AirySeries::order_alpha() const { return impl_->alpha; }

EvalResult airy_odd(int n, double x) {
  AirySeries s(OrderSpec::odd(n));
  return s.eval(x);
}

EvalResult airy_frac(double alpha, double x) {
  AirySeries s(OrderSpec::fractional(alpha));
  return s.eval(x);
}

EvalResult classical_airy_series(double z) {
  if (!std::isfinite(z))
    throw domain_error("classical_airy_series: non-finite argument");
  if (std::fabs(z) > airy_series_domain(3.0))
    throw domain_error(
        "classical_airy_series: |z| outside the validated cancellation "
        "domain; use the quadrature oracle");
  // Ai(z) = 2/3^{7/6} sum_k (z 3^{-2/3})^k sin(2pi(k+1)/3) /
  //         (Gamma(k/3+1) Gamma((k+2)/3)); every third term vanishes.
  const f128 three = 3;
  const f128 prefactor = 2 / expq(f128(7) / 6 * logq(three));
  const f128 y = f128(z) / expq(f128(2) / 3 * logq(three));
  const double ay = std::fabs(z) * std::pow(3.0, -2.0 / 3.0);
  const f128 log_s = logq(sqrtq(three) / 2);
  const f128 ly = ay > 0 ? logq(fabsq(y)) : 0;
  f128 sum = 0, sum_abs = 0;
  detail::GeometricTail tail_rule;
  for (int k = 0; k < detail::kSeriesTermCap; ++k) {
    const int r = (k + 1) % 3;  // sin(2pi(k+1)/3): +,-,0 for r = 1,2,0
    const f128 lga = lgammaq(f128(k) / 3 + 1);
    const f128 lgb = lgammaq((f128(k) + 2) / 3);
    if (r != 0 && (ay > 0.0 || k == 0)) {
      const f128 lt = f128(k) * ly + log_s - lga - lgb;
      f128 t = expq(lt);
      sum_abs += t;
      if (r == 2) t = -t;
      if (z < 0.0 && (k & 1)) t = -t;
      sum += t;
    }
    double lm = -std::lgamma(k / 3.0 + 1.0) - std::lgamma((k + 2) / 3.0);
    if (ay > 0.0) lm += k * std::log(ay);
    const double tail = tail_rule.update(lm);
    const double partial = detail::to_double(prefactor * sum);
    if (tail < detail::stop_tolerance(std::fabs(partial)) &&
        (ay > 0.0 || k >= 4)) {
      const double round_err =
          detail::kRoundC * detail::kF128Eps *
              detail::to_double(prefactor * sum_abs) +
          2.0 * DBL_EPSILON * std::fabs(partial);
      return {partial, detail::to_double(prefactor) * tail + round_err,
              k + 1};
    }
  }
  throw convergence_error(
      "classical_airy_series: term cap reached",
      {0.0, std::numeric_limits<double>::infinity(), detail::kSeriesTermCap});
}

double airy_sinc_limit(double x) {
  if (x == 0.0) return 1.0 / M_PI;
  return std::sin(x) / (M_PI * x);
}

}  // namespace airystable
