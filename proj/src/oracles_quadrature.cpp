#include <cfloat>
#include <cmath>
#include <complex>
#include <algorithm>
#include <vector>

#include "airystable/airy.hpp"
#include "airystable/gamma.hpp"
#include "airystable/oracles.hpp"
#include "detail/f128.hpp"
#include "detail/gauss.hpp"
#include "detail/oracles_internal.hpp"

namespace airystable {

using detail::c128;
using detail::f128;

namespace {

// Peak of the rotated integrand exp(|x| r sin(phi) - r^alpha/alpha) on the
// negative side; 0 for x >= 0 where the integrand only decays.
double contour_peak_exponent(double alpha, double x) {
  if (x >= 0.0) return 0.0;
  const double s = std::sin(M_PI / (2.0 * alpha));
  return (1.0 - 1.0 / alpha) *
         std::pow(-x * s, alpha / (alpha - 1.0));
}

// Radius with exp(|x| r sin(phi) - r^alpha/alpha) < exp(-L) beyond it.
double contour_cutoff(double alpha, double x, double L) {
  const double growth = x < 0.0 ? -x * std::sin(M_PI / (2.0 * alpha)) : 0.0;
  double r = std::pow(alpha * L, 1.0 / alpha);
  for (int i = 0; i < 60; ++i)
    r = std::pow(alpha * (L + growth * r), 1.0 / alpha);
  return r;
}

EvalResult contour_airy_double(double alpha, double x,
                               const QuadratureConfig& cfg) {
  const double phi = M_PI / (2.0 * alpha);
  const double L = std::log(10.0 / cfg.abs_tol) + 5.0;
  const double R =
      cfg.tail_cutoff > 0.0 ? cfg.tail_cutoff : contour_cutoff(alpha, x, L);
  const double growth = x < 0.0 ? -x * std::sin(phi) : 0.0;
  // the tail bound the truncation relies on, checked rather than assumed
  if (growth * R - std::pow(R, alpha) / alpha > std::log(cfg.abs_tol / 10.0))
    throw convergence_error("contour oracle: cutoff bound not attained",
                            {0.0, 1.0, 0});
  const std::complex<double> rot(std::cos(phi), std::sin(phi));
  auto f = [&](double r) {
    const std::complex<double> expo =
        std::complex<double>(0.0, x * r) * rot -
        std::pow(r, alpha) / alpha;
    return std::exp(expo);
  };
  // rounding floor: subdivision cannot push the estimate below the
  // cancellation noise of the integrand peak
  const double peak = contour_peak_exponent(alpha, x);
  const double floor_tol =
      64.0 * DBL_EPSILON * std::exp(peak) * std::fmax(1.0, R);
  const QuadResultC q =
      integrate_complex(f, 0.0, R, std::fmax(cfg.abs_tol, floor_tol),
                        cfg.max_subdivisions);
  const double value = (rot * q.value).real() / M_PI;
  const double err = q.err / M_PI + cfg.abs_tol / 10.0 + floor_tol;
  return {value, err, q.evals};
}

const detail::GaussRule<f128>& rule_low_q() {
  static const auto r = detail::legendre_rule<f128>(12);
  return r;
}
const detail::GaussRule<f128>& rule_high_q() {
  static const auto r = detail::legendre_rule<f128>(25);
  return r;
}

// Quad-precision contour integration for the cancellation-heavy negative-x
// range the double path cannot certify.
EvalResult contour_airy_quad(double alpha, double x,
                             const QuadratureConfig& cfg) {
  const double L = std::log(10.0 / cfg.abs_tol) + 5.0;
  const double R =
      cfg.tail_cutoff > 0.0 ? cfg.tail_cutoff : contour_cutoff(alpha, x, L);
  const f128 aq = alpha;
  const f128 xq = x;
  const f128 sin_phi = sinq(M_PIq / (2 * aq));
  const f128 cos_phi = cosq(M_PIq / (2 * aq));
  long evals = 0;
  auto f = [&](f128 r) {
    ++evals;
    const f128 ra = expq(aq * logq(r)) / aq;
    return detail::cexp_q({-xq * r * sin_phi - ra, xq * r * cos_phi});
  };
  auto panel_value = [&](f128 a, f128 b, c128& hi, double& err) {
    const f128 c = (a + b) / 2, h = (b - a) / 2;
    c128 lo{}, hi_acc{};
    for (size_t i = 0; i < rule_low_q().x.size(); ++i)
      lo = lo + rule_low_q().w[i] * f(c + h * rule_low_q().x[i]);
    for (size_t i = 0; i < rule_high_q().x.size(); ++i)
      hi_acc = hi_acc + rule_high_q().w[i] * f(c + h * rule_high_q().x[i]);
    hi = h * hi_acc;
    err = detail::to_double(detail::cabs_q(hi - h * lo));
  };
  struct Panel {
    double a, b;
    c128 value;
    double err;
  };
  auto by_err = [](const Panel& p, const Panel& q2) { return p.err < q2.err; };
  std::vector<Panel> heap;
  const double peak = contour_peak_exponent(alpha, x);
  const double round_err = 64.0 * detail::kF128Eps * std::exp(peak) *
                           std::fmax(1.0, R);
  auto make_panel = [&](double a, double b) {
    Panel p;
    p.a = a;
    p.b = b;
    panel_value(f128(a), f128(b), p.value, p.err);
    return p;
  };
  auto sum_err = [&] {
    double s = 0.0;
    for (const Panel& p : heap) s += p.err;
    return s;
  };
  heap.push_back(make_panel(0.0, R));
  double total_err = heap.front().err;
  const double eff_tol = std::fmax(cfg.abs_tol, round_err);
  int splits = 0;
  while (total_err > eff_tol && splits < cfg.max_subdivisions) {
    std::pop_heap(heap.begin(), heap.end(), by_err);
    const Panel worst = heap.back();
    heap.pop_back();
    const double m = 0.5 * (worst.a + worst.b);
    heap.push_back(make_panel(worst.a, m));
    std::push_heap(heap.begin(), heap.end(), by_err);
    heap.push_back(make_panel(m, worst.b));
    std::push_heap(heap.begin(), heap.end(), by_err);
    ++splits;
    total_err = sum_err();
  }
  if (total_err > eff_tol)
    throw convergence_error("contour oracle (quad): subdivision limit",
                            {0.0, total_err, evals});
  c128 total{};
  for (const Panel& p : heap) total = total + p.value;
  const c128 rot{cos_phi, sin_phi};
  const double value = detail::to_double((rot * total).re / M_PIq);
  return {value, total_err / M_PI + cfg.abs_tol / 10.0 + round_err, evals};
}

// Root of g(s) = target on a monotone bracket [lo, hi] (either direction):
// safeguarded Newton.
template <typename Phase, typename DPhase>
double solve_knot(const Phase& g, const DPhase& dg, double lo, double hi,
                  double target) {
  double a = lo, b = hi;
  double ga = g(a) - target;
  double s = 0.5 * (a + b);
  for (int i = 0; i < 80; ++i) {
    const double gs = g(s) - target;
    if (gs == 0.0) return s;
    if ((gs < 0.0) == (ga < 0.0)) {
      a = s;
      ga = gs;
    } else {
      b = s;
    }
    const double d = dg(s);
    double sn = d != 0.0 ? s - gs / d : 0.5 * (a + b);
    if (!(sn > std::fmin(a, b) && sn < std::fmax(a, b)))
      sn = 0.5 * (a + b);
    if (std::fabs(sn - s) <= 1e-14 * (1.0 + std::fabs(s))) return sn;
    s = sn;
  }
  return s;
}

// Expanding bracket version: g increasing on [lo, inf), g(lo) < target.
template <typename Phase, typename DPhase>
double solve_knot_up(const Phase& g, const DPhase& dg, double lo,
                     double target) {
  double step = std::fmax(1e-6, M_PI / std::fmax(dg(lo), 1e-6));
  double hi = lo + step;
  while (g(hi) < target) {
    lo = hi;
    hi += step;
    step *= 2.0;
    if (step > 1e14)
      throw convergence_error("oscillatory: phase bracket failed", {});
  }
  return solve_knot(g, dg, lo, hi, target);
}

// int_0^inf f ds with f = amp(s) * trig(g(s)): the phase g decreases to a
// single stationary point s_flat (0 = monotone) then increases without
// bound; trig vanishes where g = zero_off + k pi.  Half-period panels are
// phase-aligned on the monotone stretches, the stationary pocket is
// handled adaptively, and the infinite alternating tail is summed with
// iterated averaging.
template <typename F, typename Phase, typename DPhase>
QuadResult oscillatory_semiinfinite(const F& f, const Phase& g,
                                    const DPhase& dg, double s_flat,
                                    double zero_off, double abs_tol) {
  QuadResult out;
  double total = 0.0, err = 0.0;
  long evals = 0;
  auto add_panel = [&](double a, double b) {
    const double v = detail::gauss12(f, a, b);
    err += std::fabs(v - detail::gauss7(f, a, b)) + 4e-17 * std::fabs(v);
    evals += 19;
    total += v;
  };

  const double g0 = g(0.0);
  double pocket_a = 0.0;
  double g_low = g0;  // smallest phase value reached
  if (s_flat > 0.0) {
    const double gm = g(s_flat);
    g_low = gm;
    // descending branch [0, s_flat]: knots at zero_off + m pi
    double m = std::floor((g0 - zero_off) / M_PI);
    double prev = 0.0, gprev = g0;
    while (zero_off + m * M_PI >= gprev) m -= 1.0;
    while (zero_off + m * M_PI > gm + 8.0 * M_PI) {
      const double target = zero_off + m * M_PI;
      const double knot = solve_knot(g, dg, prev, s_flat, target);
      add_panel(prev, knot);
      prev = knot;
      gprev = target;
      m -= 1.0;
    }
    pocket_a = prev;
  }
  // ascending knot that closes the stationary pocket
  double m_b = std::floor((g_low - zero_off) / M_PI) + 9.0;
  const double asc_from = std::fmax(s_flat, pocket_a);
  while (zero_off + m_b * M_PI <= g(asc_from)) m_b += 1.0;
  const double target_b = zero_off + m_b * M_PI;
  double s_b = solve_knot_up(g, dg, asc_from, target_b);
  // evaluating trig at phase magnitudes |g| leaves ~|g| eps noise per
  // point: no tolerance below that is reachable
  const double f_noise =
      4.0 * DBL_EPSILON * (std::fmax(std::fabs(g_low), std::fabs(g0)) + 1.0);
  {
    const double pocket_tol =
        std::fmax(abs_tol / 3.0, f_noise * (s_b - pocket_a));
    const QuadResult pocket = integrate(f, pocket_a, s_b, pocket_tol, 20000);
    total += pocket.value;
    err += pocket.err;
    evals += pocket.evals;
  }
  // alternating half-period tail
  const int n_tail = 48;
  std::vector<double> panels(n_tail);
  double lo = s_b, tgt = target_b;
  for (int k = 0; k < n_tail; ++k) {
    tgt += M_PI;
    const double hi = solve_knot_up(g, dg, lo, tgt);
    panels[k] = detail::gauss12(f, lo, hi);
    evals += 12;
    lo = hi;
  }
  double tail_err = 0.0;
  total += detail::euler_limit(panels, &tail_err);
  out.value = total;
  out.err = err + tail_err + f_noise * s_b;
  out.evals = evals;
  return out;
}

}  // namespace

namespace detail {

double euler_limit(const std::vector<double>& terms, double* err_est) {
  std::vector<double> v(terms.size());
  double acc = 0.0;
  for (size_t i = 0; i < terms.size(); ++i) {
    acc += terms[i];
    v[i] = acc;
  }
  double last = v[0], prev = v[0];
  while (v.size() > 1) {
    for (size_t i = 0; i + 1 < v.size(); ++i) v[i] = 0.5 * (v[i] + v[i + 1]);
    v.pop_back();
    prev = last;
    last = v[0];
  }
  if (err_est) *err_est = std::fabs(last - prev) + 1e-16;
  return last;
}

EvalResult airy_oscillatory(double alpha, double x, double abs_tol) {
  // phase g(s) = x s + s^alpha/alpha, g' = x + s^{alpha-1}
  auto g = [&](double s) { return x * s + std::pow(s, alpha) / alpha; };
  auto dg = [&](double s) { return x + std::pow(s, alpha - 1.0); };
  const double s_flat =
      x < 0.0 ? std::pow(-x, 1.0 / (alpha - 1.0)) : 0.0;
  auto f = [&](double s) { return std::cos(g(s)); };
  const QuadResult r =
      oscillatory_semiinfinite(f, g, dg, s_flat, M_PI_2, abs_tol);
  return {r.value / M_PI, r.err / M_PI + 4.0 * DBL_EPSILON, r.evals};
}

double subordinated_density_from_cf(const SubordinationParams& params,
                                    double x, double t, double abs_tol) {
  validate(params);
  if (params.theta >= 1.0)
    throw parameter_error(
        "subordinated_density_from_cf: needs theta < 1 (decaying cf)");
  const double nu = params.alpha * params.theta;
  const double c = cos_pi(0.5 * params.theta);
  const double s = sin_pi(0.5 * params.theta);
  const double gmax = std::pow(45.0 / (t * c), 1.0 / nu);
  const double width = M_PI / std::fmax(std::fabs(x), 2.0 * M_PI / gmax);
  auto f = [&](double gamma) {
    const double m = t * std::pow(gamma, nu);
    return std::exp(-m * c) * std::cos(gamma * x + m * s);
  };
  double acc = 0.0;
  for (double a = 0.0; a < gmax; a += width)
    acc += detail::gauss12(f, a, std::fmin(a + width, gmax));
  (void)abs_tol;
  return acc / M_PI;
}

double gil_pelaez_stable_cdf(const StableParams& params, double t, double x,
                             double abs_tol) {
  const double nu = params.nu;
  const double tn = tan_pi_half(nu);
  const double gmax = std::pow(45.0 / t, 1.0 / nu) / params.sigma;
  const double xc = x - params.mu * t;
  auto f = [&](double gamma) {
    const double m = t * std::pow(params.sigma * gamma, nu);
    // Im[e^{-i gamma x} cf]/gamma with cf = exp(-m + i(m beta tan + mu g t))
    const double phase = m * params.beta * tn - gamma * xc;
    return std::exp(-m) * std::sin(phase) / gamma;
  };
  const double width = M_PI / std::fmax(std::fabs(xc), 2.0 * M_PI / gmax);
  double acc = 0.0;
  for (double a = 0.0; a < gmax; a += width)
    acc += detail::gauss12(f, a, std::fmin(a + width, gmax));
  (void)abs_tol;
  return 0.5 - acc / M_PI;
}

}  // namespace detail

namespace {

EvalResult airy_quadrature_core(double alpha, double x,
                                const QuadratureConfig& cfg) {
  validate(cfg);
  if (!(alpha > 1.0) || !std::isfinite(alpha))
    throw parameter_error("airy quadrature: requires alpha > 1");
  if (!std::isfinite(x))
    throw domain_error("airy quadrature: non-finite argument");
  const double peak = contour_peak_exponent(alpha, x);
  if (peak <= 6.0) return contour_airy_double(alpha, x, cfg);
  if (peak <= 42.0) return contour_airy_quad(alpha, x, cfg);
  return detail::airy_oscillatory(alpha, x, cfg.abs_tol);
}

}  // namespace

EvalResult airy_frac_quadrature(double alpha, double x,
                                const QuadratureConfig& cfg) {
  return airy_quadrature_core(alpha, x, cfg);
}

EvalResult airy_odd_quadrature(int n, double x, const QuadratureConfig& cfg) {
  if (n < 1) throw parameter_error("airy_odd_quadrature: requires n >= 1");
  return airy_quadrature_core(double(2 * n + 1), x, cfg);
}

EvalResult fourier_cosine_density(double alpha, double x, double t,
                                  const QuadratureConfig& cfg) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw domain_error("fourier_cosine_density: requires t > 0");
  const double c = std::pow(alpha * t, 1.0 / alpha);
  const EvalResult r = airy_quadrature_core(alpha, x / c, cfg);
  return {r.value / c, r.err_bound / c + 2.0 * DBL_EPSILON, r.terms};
}

double pseudo_cdf_theta1(double alpha, double x, double t, double abs_tol) {
  if (!(alpha > 1.0)) throw parameter_error("pseudo_cdf: requires alpha > 1");
  if (!(t > 0.0)) throw domain_error("pseudo_cdf: requires t > 0");
  auto psi = [&](double g) { return x * g + t * std::pow(g, alpha); };
  auto dpsi = [&](double g) {
    return x + t * alpha * std::pow(g, alpha - 1.0);
  };
  const double flat =
      x < 0.0 ? std::pow(-x / (t * alpha), 1.0 / (alpha - 1.0)) : 0.0;
  auto f = [&](double g) {
    return g > 0.0 ? std::sin(psi(g)) / g : x;  // limit x at g = 0
  };
  const QuadResult r =
      oscillatory_semiinfinite(f, psi, dpsi, flat, 0.0, abs_tol);
  return 0.5 + r.value / M_PI;
}

double u_frac_total_mass(double alpha, double t, double half_width,
                         const QuadratureConfig& cfg) {
  validate(cfg);
  if (!(alpha > 1.0))
    throw parameter_error("u_frac_total_mass: requires alpha > 1");
  if (!(t > 0.0)) throw domain_error("u_frac_total_mass: requires t > 0");
  const double c = std::pow(alpha * t, 1.0 / alpha);
  const double dom =
      std::fmin(airy_series_domain(alpha) * c * 0.999, half_width);
  AirySeries series(OrderSpec::fractional(alpha));
  QuadratureConfig point_cfg = cfg;
  point_cfg.abs_tol = 1e-11;
  auto dens = [&](double x) {
    if (std::fabs(x) <= dom) return series.eval(x / c).value / c;
    return fourier_cosine_density(alpha, x, t, point_cfg).value;
  };
  // Series on its validated bulk, pointwise oracle on the decaying right
  // flank, and cumulative (pseudo-CDF) oracle for the oscillatory left
  // flank and both tails beyond the window.
  const double hw = half_width;
  double mass = 0.0;
  mass += integrate(dens, -dom, dom, 1e-9, 20000).value;
  mass += integrate(dens, dom, hw, 1e-9, 20000).value;
  mass += pseudo_cdf_theta1(alpha, -dom, t, 1e-9);  // all mass left of -dom
  mass += 1.0 - pseudo_cdf_theta1(alpha, hw, t, 1e-9);
  return mass;
}

}  // namespace airystable
