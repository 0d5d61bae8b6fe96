#include "airystable/density.hpp"

#include <cfloat>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "airystable/gamma.hpp"
#include "airystable/rng.hpp"
#include "detail/f128.hpp"
#include "detail/series_engine.hpp"

namespace airystable {

using detail::f128;

void validate(const SubordinationParams& params) {
  if (!(params.alpha > 1.0) || !std::isfinite(params.alpha))
    throw parameter_error("SubordinationParams: requires alpha > 1");
  if (!(params.theta > 0.0 && params.theta <= 1.0))
    throw parameter_error("SubordinationParams: requires theta in (0,1]");
}

namespace {

void require_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw domain_error("density: requires t > 0");
}

void require_series_exponent(const SubordinationParams& params) {
  if (!(params.alpha * params.theta > 1.0))
    throw parameter_error(
        "subordinated series: requires alpha*theta > 1 (the series radius "
        "collapses otherwise)");
}

}  // namespace

EvalResult u_odd(int n, double x, double t) {
  require_time(t);
  const double c = std::pow(t * (2 * n + 1), 1.0 / (2 * n + 1));
  AirySeries s(OrderSpec::odd(n));
  const EvalResult r = s.eval(x / c);
  return {r.value / c, r.err_bound / c + 2.0 * DBL_EPSILON * std::fabs(r.value / c),
          r.terms};
}

EvalResult u_frac(double alpha, double x, double t) {
  require_time(t);
  const double c = std::pow(alpha * t, 1.0 / alpha);
  AirySeries s(OrderSpec::fractional(alpha));
  const EvalResult r = s.eval(x / c);
  return {r.value / c, r.err_bound / c + 2.0 * DBL_EPSILON * std::fabs(r.value / c),
          r.terms};
}

struct SubordinatedSeries::Impl {
  double alpha, theta, nu;
  int odd_n;  // > 0 when alpha is an odd integer 2n+1 (exact sine zeros)
  std::vector<f128> log_coef;     // log(Gamma(1+k/nu)/k! |sin(...)|)
  std::vector<signed char> sign_coef;
  std::vector<double> log_majorant;

  explicit Impl(const SubordinationParams& p)
      : alpha(p.alpha), theta(p.theta), nu(p.alpha * p.theta) {
    validate(p);
    require_series_exponent(p);
    const double r = std::round((alpha - 1.0) / 2.0);
    odd_n = (alpha == 2.0 * r + 1.0 && r >= 1.0) ? static_cast<int>(r) : 0;
  }

  // sin(k pi (alpha-1)/(2 alpha)), exact rational reduction for odd alpha.
  detail::SignedLogQ sin_factor(long k) const {
    f128 s;
    if (odd_n > 0) {
      const long denom = 2 * odd_n + 1;
      const long m = (k * odd_n) % (2 * denom);
      if (m % denom == 0) return {-HUGE_VALQ, 0};
      s = sinq(M_PIq * f128(m) / f128(denom));
    } else {
      const f128 ang =
          fmodq(f128(k) * (f128(alpha) - 1) / (2 * f128(alpha)), f128(2));
      s = sinq(M_PIq * ang);
      if (s == 0) return {-HUGE_VALQ, 0};
    }
    return {logq(fabsq(s)), s > 0 ? 1 : -1};
  }

  void ensure(int k) {
    while (static_cast<int>(log_coef.size()) <= k) {
      const int j = static_cast<int>(log_coef.size());
      if (j == 0) {  // series starts at k = 1; keep index alignment
        log_coef.push_back(-HUGE_VALQ);
        sign_coef.push_back(0);
        log_majorant.push_back(-std::numeric_limits<double>::infinity());
        continue;
      }
      const auto sf = sin_factor(j);
      const f128 lg = lgammaq(1 + f128(j) / f128(nu));
      const f128 lf = lgammaq(f128(j + 1));
      log_coef.push_back(sf.log_abs + lg - lf);
      sign_coef.push_back(static_cast<signed char>(sf.sign));
      log_majorant.push_back(std::lgamma(1.0 + j / nu) -
                             std::lgamma(double(j) + 1.0));
    }
  }

  double domain(double t) const {
    return airy_series_domain(nu) * std::pow(t, 1.0 / nu);
  }

  EvalResult eval_limit_x0(double t) {
    const auto sf = sin_factor(1);
    const f128 lg = lgammaq(1 + 1 / f128(nu));
    const f128 lt = -logq(f128(t)) / f128(nu);
    const double v =
        sf.sign * detail::to_double(expq(sf.log_abs + lg + lt) / M_PIq);
    return {v, 8.0 * DBL_EPSILON * std::fabs(v), 1};
  }

  EvalResult eval(double x, double t) {
    require_time(t);
    if (x == 0.0) return eval_limit_x0(t);
    if (std::fabs(x) > domain(t))
      throw domain_error(
          "subordinated_density: |x| outside the validated cancellation "
          "domain; use the Monte Carlo or cf-inversion oracle");
    // the scaled argument is rounded to double so the theta = 1 route and
    // u_frac (which scales in double) see bitwise-identical arguments
    const f128 tpow = expq(logq(f128(t)) / f128(nu));
    const f128 xs = f128(detail::to_double(f128(x) / tpow));
    const double axs = std::fabs(detail::to_double(xs));
    const f128 lx = logq(fabsq(xs));
    const double lxd = std::log(axs);
    const f128 pref = f128(-1) / (M_PIq * f128(x));
    const double pref_abs = std::fabs(detail::to_double(pref));
    const bool xs_pos = x > 0.0;
    f128 sum = 0, sum_abs = 0;
    detail::GeometricTail tail_rule;
    for (int k = 1; k < detail::kSeriesTermCap; ++k) {
      ensure(k);
      if (sign_coef[k] != 0) {
        const f128 lt = f128(k) * lx + log_coef[k];
        f128 term = expq(lt);
        sum_abs += term;
        int s = sign_coef[k];
        if (xs_pos && (k & 1)) s = -s;  // (-xs)^k
        if (s < 0) term = -term;
        sum += term;
      }
      const double tail = tail_rule.update(k * lxd + log_majorant[k]);
      const double value = detail::to_double(pref * sum);
      if (tail * pref_abs < detail::stop_tolerance(std::fabs(value))) {
        const double round_err =
            detail::kRoundC * detail::kF128Eps * pref_abs *
                detail::to_double(sum_abs) +
            2.0 * DBL_EPSILON * std::fabs(value);
        return {value, tail * pref_abs + round_err, k};
      }
    }
    throw convergence_error(
        "subordinated_density: term cap reached",
        {detail::to_double(pref * sum),
         std::numeric_limits<double>::infinity(), detail::kSeriesTermCap});
  }
};

SubordinatedSeries::SubordinatedSeries(const SubordinationParams& params)
    : impl_(std::make_unique<Impl>(params)) {}
SubordinatedSeries::~SubordinatedSeries() = default;
SubordinatedSeries::SubordinatedSeries(SubordinatedSeries&&) noexcept =
    default;
SubordinatedSeries& SubordinatedSeries::operator=(
    SubordinatedSeries&&) noexcept = default;

EvalResult SubordinatedSeries::eval(double x, double t) {
  return impl_->eval(x, t);
}
double SubordinatedSeries::domain(double t) const { return impl_->domain(t); }

EvalResult subordinated_density(const SubordinationParams& params, double x,
                                double t) {
  SubordinatedSeries s(params);
  return s.eval(x, t);
}

double subordinated_series_domain(const SubordinationParams& params,
                                  double t) {
  SubordinatedSeries s(params);
  return s.domain(t);
}

namespace {

struct Welford {
  long long n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++n;
    const double d = x - mean;
    mean += d / n;
    m2 += d * (x - mean);
  }

  void merge(const Welford& o) {
    if (o.n == 0) return;
    const long long tot = n + o.n;
    const double d = o.mean - mean;
    mean += d * o.n / tot;
    m2 += o.m2 + d * d * (double(n) / tot) * o.n;
    n = tot;
  }
};

template <typename F>
MCEstimate mc_run(long long n_samples, unsigned long long seed, int workers,
                  const F& sample_fn) {
  if (n_samples < 1)
    throw parameter_error("monte carlo: requires n_samples >= 1");
  const int w = std::min<long long>(mc_worker_count(workers), n_samples);
  std::vector<Welford> acc(w);
  std::vector<std::thread> pool;
  pool.reserve(w);
  const long long base = n_samples / w, extra = n_samples % w;
  for (int i = 0; i < w; ++i) {
    const long long cnt = base + (i < extra ? 1 : 0);
    pool.emplace_back([&, i, cnt] {
      RandomStream rs(seed, static_cast<std::uint64_t>(i));
      for (long long j = 0; j < cnt; ++j) acc[i].add(sample_fn(rs));
    });
  }
  for (auto& th : pool) th.join();
  Welford total;
  for (const auto& a : acc) total.merge(a);
  const double var = total.n > 1 ? total.m2 / (total.n - 1) : 0.0;
  return {total.mean, std::sqrt(var / total.n), total.n, seed};
}

}  // namespace

MCEstimate mc_subordinated_density(const SubordinationParams& params,
                                   double x, double t, long long n_samples,
                                   unsigned long long seed, int workers) {
  validate(params);
  require_series_exponent(params);
  require_time(t);
  if (x == 0.0)
    throw domain_error(
        "mc_subordinated_density: x = 0 (use the series limit instead)");
  const double nu = params.alpha * params.theta;
  // Damping sin(pi/(2a)) and oscillation cos(pi/(2a)); the swapped pairing
  // estimates a different functional (see the orientation test).
  const double damp = sin_pi(0.5 / params.alpha);
  const double osc = cos_pi(0.5 / params.alpha);
  const double inv_nu = 1.0 / nu;
  MCEstimate est = mc_run(n_samples, seed, workers, [=](RandomStream& rs) {
    const double g = std::pow(rs.exp1() / t, inv_nu);
    return std::exp(-damp * x * g) * std::sin(osc * x * g);
  });
  est.mean /= M_PI * x;
  est.std_error /= M_PI * std::fabs(x);
  return est;
}

}  // namespace airystable
