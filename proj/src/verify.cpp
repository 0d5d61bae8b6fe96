#include "airystable/verify.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "airystable/airy.hpp"
#include "airystable/density.hpp"
#include "airystable/gamma.hpp"
#include "airystable/oracles.hpp"
#include "airystable/quadrature.hpp"
#include "airystable/stable.hpp"
#include "airystable/wright.hpp"

namespace airystable {

namespace {

constexpr unsigned long long kVerifySeed = 20260810ULL;

// Fixed worker count for reproducible MC rows; AIRYSTABLE_THREADS still
// caps/overrides it (the MC contract is bitwise-reproducible per
// (seed, worker count)).
int verify_workers() {
  return std::getenv("AIRYSTABLE_THREADS") ? mc_worker_count(0) : 4;
}

void add(std::vector<CheckRow>& rows, const std::string& id, double target,
         double actual, double tol) {
  rows.push_back({id, target, actual, tol, actual <= tol});
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

// ---- airy suite -----------------------------------------------------------

void check_series_oracle(std::vector<CheckRow>& rows) {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-10;
  for (double alpha : {1.5, 2.0, 2.5, 3.0, 4.0, 7.0}) {
    AirySeries series(OrderSpec::fractional(alpha));
    const double dom = series.domain();
    double worst = 0.0;
    for (double x = -6.0; x <= 6.0 + 1e-9; x += 0.25) {
      if (std::fabs(x) > dom) continue;
      const EvalResult s = series.eval(x);
      const EvalResult q = airy_frac_quadrature(alpha, x, cfg);
      worst = std::fmax(worst, std::fabs(s.value - q.value));
    }
    add(rows, "airy.oracle.alpha=" + fmt("%g", alpha), 0.0, worst, 1e-8);
  }
}

void check_anchors(std::vector<CheckRow>& rows) {
  const double a2 = airy_frac(2.0, 0.0).value;
  add(rows, "airy.anchor.frac2", 1.0 / (2.0 * std::sqrt(M_PI)),
      std::fabs(a2 - 1.0 / (2.0 * std::sqrt(M_PI))), 1e-12);
  const double a3 = airy_odd(1, 0.0).value;
  const double ref = std::pow(3.0, -2.0 / 3.0) / std::exp(log_gamma(2.0 / 3.0));
  add(rows, "airy.anchor.odd1", ref, std::fabs(a3 - ref), 1e-12);
}

void check_triplication(std::vector<CheckRow>& rows) {
  AirySeries odd1(OrderSpec::odd(1));
  double worst = -1.0;
  for (double z = -4.0; z <= 4.0 + 1e-9; z += 0.1) {
    const EvalResult a = classical_airy_series(z);
    const EvalResult b = odd1.eval(z);
    const double slack =
        a.err_bound + b.err_bound + 8.0 * DBL_EPSILON * std::fabs(a.value);
    worst = std::fmax(worst, std::fabs(a.value - b.value) - slack);
  }
  add(rows, "airy.triplication.excess", 0.0, worst, 0.0);
}

void check_ode(std::vector<CheckRow>& rows) {
  for (int n : {1, 2}) {
    AirySeries series(OrderSpec::odd(n));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^n
    double worst = 0.0;
    for (double x = -2.0; x <= 2.0 + 1e-9; x += 0.1) {
      const double d = series.eval_derivative(2 * n, x).value;
      const double y = series.eval(x).value;
      worst = std::fmax(worst, std::fabs(d + sign * x * y));
    }
    add(rows, "airy.ode.n=" + std::to_string(n), 0.0, worst, 1e-6);
  }
}

// ---- density suite --------------------------------------------------------

void check_normalization(std::vector<CheckRow>& rows) {
  QuadratureConfig cfg;
  for (double alpha : {1.5, 2.0, 2.5, 3.0}) {
    const double mass = u_frac_total_mass(alpha, 1.0, 40.0, cfg);
    add(rows, "density.norm.alpha=" + fmt("%g", alpha), 1.0,
        std::fabs(mass - 1.0), 1e-3);
  }
}

void check_mellin(std::vector<CheckRow>& rows) {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-10;
  for (double theta : {0.3, 0.5, 0.7})
    for (double eta : {0.5, 1.0, 1.5, 2.0}) {
      const MellinCheck c = mellin_wright_check(theta, eta, cfg);
      const double rel = std::fabs(c.lhs - c.rhs) / std::fabs(c.rhs);
      add(rows,
          "density.mellin.theta=" + fmt("%g", theta) + ".eta=" +
              fmt("%g", eta),
          0.0, rel, 1e-6);
    }
}

void check_levy(std::vector<CheckRow>& rows) {
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0})
    for (double x = 0.1; x <= 10.0 + 1e-9; x += 0.15) {
      const double h = subordinator_density(0.5, x, t).value;
      const double ref = t / (2.0 * std::sqrt(M_PI)) * std::pow(x, -1.5) *
                         std::exp(-t * t / (4.0 * x));
      worst = std::fmax(worst, std::fabs(h - ref) / ref);
    }
  add(rows, "density.levy.halfstable", 0.0, worst, 1e-8);
}

void check_sinc(std::vector<CheckRow>& rows) {
  auto dev = [](int n) {
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0})
      worst = std::fmax(
          worst, std::fabs(u_odd(n, x, 1.0).value - airy_sinc_limit(x)));
    return worst;
  };
  const double d2 = dev(2), d32 = dev(32);
  add(rows, "density.sinc.ratio32over2", 0.0, d32 / d2, 0.999999);
}

void check_reduction(std::vector<CheckRow>& rows) {
  double worst = 0.0;
  for (double alpha : {1.5, 2.2, 3.0}) {
    SubordinatedSeries sub({alpha, 1.0});
    const double dom = sub.domain(1.0) * 0.9;
    for (double x = -dom; x <= dom + 1e-9; x += dom / 8.0) {
      const double a = sub.eval(x, 1.0).value;
      const double b = u_frac(alpha, x, 1.0).value;
      worst = std::fmax(worst, std::fabs(a - b));
    }
  }
  add(rows, "density.reduction.theta1", 0.0, worst, 1e-14);
}

// ---- bridge suite ---------------------------------------------------------

void check_cf_bridge(std::vector<CheckRow>& rows) {
  double worst = 0.0;
  for (double theta : {0.15, 0.25, 0.35, 0.45})
    for (double nu : {1.2, 1.5, 1.8}) {
      if (nu + theta > 2.0) continue;  // beta would exceed 1
      const SubordinationParams sp{nu / theta, theta};
      const StableParams st = forward_params(sp);
      for (double g = -10.0; g <= 10.0 + 1e-9; g += 0.5) {
        const auto a = subordinated_cf(sp, 1.0, g);
        const auto b = stable_cf(st, 1.0, g);
        worst = std::fmax(worst, std::abs(a - b));
      }
    }
  add(rows, "bridge.cf.identity", 0.0, worst, 1e-12);
}

void check_roundtrip(std::vector<CheckRow>& rows) {
  double worst = 0.0;
  for (double nu = 1.05; nu < 2.0; nu += 0.1)
    for (double beta = 0.1; beta <= 1.0 + 1e-9; beta += 0.15) {
      const double b = std::fmin(beta, 1.0);
      const SubordinationParams sp = inverse_params(nu, b);
      const StableParams st = forward_params(sp);
      worst = std::fmax(worst, std::fabs(st.nu - nu));
      worst = std::fmax(worst, std::fabs(st.beta - b));
    }
  add(rows, "bridge.roundtrip", 0.0, worst, 1e-12);
}

void check_frontier(std::vector<CheckRow>& rows) {
  double worst = 0.0;
  for (double nu = 1.1; nu < 2.0; nu += 0.1) {
    const double theta = 2.0 - nu;  // theta(alpha+1) = 2 exactly
    const StableParams st = forward_params({nu / theta, theta});
    worst = std::fmax(worst, std::fabs(st.beta - 1.0));
  }
  add(rows, "bridge.frontier.beta1", 0.0, worst, 1e-12);
}

void check_reflection(std::vector<CheckRow>& rows) {
  double worst = 0.0;
  StablePdf plus({1.5, 0.5, 1.0, 0.0}, 1.0);
  StablePdf minus({1.5, -0.5, 1.0, 0.0}, 1.0);
  for (double x = -4.0; x <= 4.0 + 1e-9; x += 0.25)
    worst = std::fmax(worst,
                      std::fabs(plus.eval(x).value - minus.eval(-x).value));
  add(rows, "bridge.reflection", 0.0, worst, 1e-14);
}

void check_sigma0_identity(std::vector<CheckRow>& rows) {
  const double nu = 1.5, beta = 0.5, t = 1.0;
  const SubordinationParams sp = inverse_params(nu, beta);
  const double sigma0 = subordinated_scale(sp.theta, nu, t);
  // with sigma = sigma0 t^{-1/nu} the affine map is the identity
  const StableParams st{nu, beta, sigma0 / std::pow(t, 1.0 / nu), 0.0};
  const double a = stable_pdf(st, t, 0.0).value;
  const double b = subordinated_density(sp, 0.0, t).value;
  add(rows, "bridge.sigma0.identity", 0.0, std::fabs(a - b), 1e-13);
}

void check_cauchy(std::vector<CheckRow>& rows) {
  const double alpha = 2.0, t = 1.0;
  const double c = cos_pi(0.5 / alpha), s = sin_pi(0.5 / alpha);
  // Fourier inversion of exp(-i g t sin(pi/2a) - t|g| cos(pi/2a))
  double worst = 0.0;
  for (double x = -10.0; x <= 10.0 + 1e-9; x += 0.25) {
    auto f = [&](double g) {
      return std::exp(-t * g * c) * std::cos(g * (x + t * s)) / M_PI;
    };
    const double gmax = 45.0 / (t * c);
    const QuadResult q = integrate(f, 0.0, gmax, 1e-10, 4000);
    worst = std::fmax(worst, std::fabs(q.value - cauchy_pdf(alpha, t, x)));
  }
  add(rows, "bridge.cauchy.inversion", 0.0, worst, 1e-8);

  // mode at -t sin(pi/(2 alpha)) (golden-section on the density)
  double lo = -2.0, hi = 1.0;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - gr * (hi - lo), b = lo + gr * (hi - lo);
  for (int i = 0; i < 120; ++i) {
    if (cauchy_pdf(alpha, t, a) > cauchy_pdf(alpha, t, b))
      hi = b;
    else
      lo = a;
    a = hi - gr * (hi - lo);
    b = lo + gr * (hi - lo);
  }
  const double mode = 0.5 * (lo + hi);
  add(rows, "bridge.cauchy.mode", -t * s, std::fabs(mode + t * s), 1e-6);

  // normalization with analytic arctan tails
  const double X = 50.0;
  auto dens = [&](double x) { return cauchy_pdf(alpha, t, x); };
  const QuadResult q = integrate(dens, -X, X, 1e-9, 8000);
  auto cdf = [&](double x) {
    return 0.5 + std::atan((x + t * s) / (t * c)) / M_PI;
  };
  const double total = q.value + cdf(-X) + (1.0 - cdf(X));
  add(rows, "bridge.cauchy.norm", 1.0, std::fabs(total - 1.0), 1e-6);
}

// ---- mc suite -------------------------------------------------------------

void check_kanter_laplace(std::vector<CheckRow>& rows) {
  const long long n = 1000000;
  for (double theta : {0.5, 0.7}) {
    RandomStream rs(kVerifySeed, 11);
    std::vector<double> sample(n);
    for (auto& v : sample) v = kanter_subordinator_sample(theta, 1.0, rs);
    for (double lam : {0.25, 0.5, 1.0, 2.0}) {
      double mean = 0.0, m2 = 0.0;
      long long cnt = 0;
      for (double x : sample) {
        const double y = std::exp(-lam * x);
        ++cnt;
        const double d = y - mean;
        mean += d / cnt;
        m2 += d * (y - mean);
      }
      const double se = std::sqrt(m2 / (n - 1) / n);
      const double expect = std::exp(-std::pow(lam, theta));
      add(rows,
          "mc.kanter.laplace.theta=" + fmt("%g", theta) + ".lam=" +
              fmt("%g", lam),
          0.0, std::fabs(mean - expect) / se, 4.0);
    }
  }
}

void check_kanter_ks(std::vector<CheckRow>& rows) {
  const int n = 100000;
  for (double theta : {0.5, 0.7}) {
    RandomStream rs(kVerifySeed, 12);
    std::vector<double> sample(n);
    for (auto& v : sample) v = kanter_subordinator_sample(theta, 1.0, rs);
    std::sort(sample.begin(), sample.end());
    SubordinatorCdf cdf(theta, 1.0);
    const double ks =
        ks_distance(sample, [&](double x) { return cdf.cdf(x); });
    add(rows, "mc.kanter.ks.theta=" + fmt("%g", theta), 0.0, ks, 0.01);
  }
}

void check_mc_series(std::vector<CheckRow>& rows) {
  const long long n = 1000000;
  const SubordinationParams inv = inverse_params(1.5, 0.5);
  struct Case {
    SubordinationParams p;
    double x, t;
  };
  const Case cases[] = {
      {{3.0, 0.9}, 1.0, 1.0},  {{3.0, 0.9}, -1.0, 1.0},
      {{3.0, 0.5}, 0.5, 1.0},  {{3.0, 0.5}, -0.5, 1.0},
      {inv, 1.0, 1.0},         {inv, -1.0, 1.0},
  };
  int idx = 0;
  for (const auto& c : cases) {
    const MCEstimate mc = mc_subordinated_density(
        c.p, c.x, c.t, n, kVerifySeed + idx, verify_workers());
    const double series = subordinated_density(c.p, c.x, c.t).value;
    add(rows,
        "mc.series.alpha=" + fmt("%g", c.p.alpha) + ".theta=" +
            fmt("%g", c.p.theta) + ".x=" + fmt("%g", c.x),
        series, std::fabs(mc.mean - series) / mc.std_error, 4.0);
    ++idx;
  }
}

void check_cms(std::vector<CheckRow>& rows) {
  // Gaussian boundary: nu = 2 gives variance 2t
  {
    const long long n = 1000000;
    const double t = 1.0;
    RandomStream rs(kVerifySeed, 21);
    double mean = 0.0, m2 = 0.0;
    for (long long i = 1; i <= n; ++i) {
      const double x = cms_stable_sample({2.0, 0.0, 1.0, 0.0}, t, rs);
      const double d = x - mean;
      mean += d / i;
      m2 += d * (x - mean);
    }
    const double var = m2 / (n - 1);
    const double se_var = var * std::sqrt(2.0 / (n - 1));
    add(rows, "mc.cms.gaussian.var", 2.0 * t,
        std::fabs(var - 2.0 * t) / se_var, 3.0);
  }
  // empirical cf against the closed form
  {
    const long long n = 1000000;
    const StableParams p{1.5, 0.5, 1.0, 0.0};
    RandomStream rs(kVerifySeed, 22);
    std::vector<double> sample(n);
    for (auto& v : sample) v = cms_stable_sample(p, 1.0, rs);
    double worst = 0.0;
    for (double g : {0.5, 1.0, 2.0, -0.5, -1.0, -2.0, 3.0, -3.0}) {
      const auto diff = empirical_cf(sample, g) - stable_cf(p, 1.0, g);
      worst = std::fmax(worst, std::abs(diff));
    }
    add(rows, "mc.cms.ecf.nu=1.5.beta=0.5", 0.0,
        worst * std::sqrt(double(n)) / 4.0, 1.0);
  }
  // reflection: negated beta=+1 samples match beta=-1 samples
  {
    const int n = 100000;
    RandomStream rs1(kVerifySeed, 23), rs2(kVerifySeed, 24);
    std::vector<double> a(n), b(n);
    for (auto& v : a) v = -cms_stable_sample({1.5, 1.0, 1.0, 0.0}, 1.0, rs1);
    for (auto& v : b) v = cms_stable_sample({1.5, -1.0, 1.0, 0.0}, 1.0, rs2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    // two-sample KS
    double ks = 0.0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] <= b[j])
        ++i;
      else
        ++j;
      ks = std::fmax(ks, std::fabs(double(i) / n - double(j) / n));
    }
    add(rows, "mc.cms.reflection.ks", 0.0, ks, 1.95 / std::sqrt(double(n)));
  }
}

// Histogram of CMS samples drawn under forward_params against the
// subordinated series density, 50 central bins, 3 sigma per bin.
void check_cms_histogram(std::vector<CheckRow>& rows) {
  const SubordinationParams sp{3.0, 0.45};  // nu = 1.35
  const StableParams st = forward_params(sp);
  const int n = 100000, bins = 50;
  const double lo = -3.0, hi = 3.0, w = (hi - lo) / bins;
  RandomStream rs(kVerifySeed, 41);
  std::vector<int> count(bins, 0);
  for (int i = 0; i < n; ++i) {
    const double x = cms_stable_sample(st, 1.0, rs);
    if (x >= lo && x < hi) ++count[static_cast<int>((x - lo) / w)];
  }
  SubordinatedSeries series(sp);
  double worst = 0.0;
  for (int b = 0; b < bins; ++b) {
    const double a = lo + b * w;
    // Simpson mass of the series density over the bin
    const double p = w / 6.0 *
                     (series.eval(a, 1.0).value +
                      4.0 * series.eval(a + 0.5 * w, 1.0).value +
                      series.eval(a + w, 1.0).value);
    const double se = std::sqrt(p * (1.0 - p) / n);
    worst = std::fmax(worst, std::fabs(double(count[b]) / n - p) / (3.0 * se));
  }
  add(rows, "mc.cms.histogram.alpha=3.theta=0.45", 0.0, worst, 1.0);
}

void check_stable_ks(std::vector<CheckRow>& rows) {
  const int n = 100000;
  struct Case {
    double nu, beta;
  };
  int idx = 0;
  for (const Case c : {Case{1.5, 0.5}, Case{1.3, 0.7}}) {
    const StableParams p{c.nu, c.beta, 1.0, 0.0};
    RandomStream rs(kVerifySeed, 31 + (idx++));
    std::vector<double> sample(n);
    for (auto& v : sample) v = cms_stable_sample(p, 1.0, rs);
    std::sort(sample.begin(), sample.end());
    StableCdf cdf(p, 1.0);
    const double ks =
        ks_distance(sample, [&](double x) { return cdf.cdf(x); });
    add(rows,
        "mc.stable.ks.nu=" + fmt("%g", c.nu) + ".beta=" + fmt("%g", c.beta),
        0.0, ks, 0.01);
  }
}

// ---- pde suite ------------------------------------------------------------

void check_pde(std::vector<CheckRow>& rows) {
  SpectralGrid grid;
  // re-measured step: at alpha near 1 the density chirps in t as well, so
  // u_ttt reaches ~1e6 near the check-region edge and the documented
  // default 1e-4 leaves pure central-difference truncation above the
  // tolerance
  grid.dt = 1e-5;
  for (double alpha : {2.5, 3.0, 1.7}) {
    const double r = riesz_feller_spectral_check(alpha, 1.0, 1.0, grid);
    add(rows, "pde.order=" + fmt("%g", alpha) + ".theta=1", 0.0, r, 1e-4);
  }
  const SubordinationParams sp = inverse_params(1.5, 0.5);
  const double r =
      riesz_feller_spectral_check(1.5, sp.theta, 1.0, grid);
  add(rows, "pde.order=1.5.subordinated", 0.0, r, 1e-4);
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"airy", "density", "bridge", "mc", "pde", "all"};
}

bool is_verify_suite(const std::string& name) {
  const auto names = verify_suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckRow> verify_suite(const std::string& suite) {
  if (!is_verify_suite(suite))
    throw parameter_error("verify: unknown suite '" + suite + "'");
  std::vector<CheckRow> rows;
  const bool all = suite == "all";
  if (all || suite == "airy") {
    check_series_oracle(rows);
    check_anchors(rows);
    check_triplication(rows);
    check_ode(rows);
  }
  if (all || suite == "density") {
    check_normalization(rows);
    check_mellin(rows);
    check_levy(rows);
    check_sinc(rows);
    check_reduction(rows);
  }
  if (all || suite == "bridge") {
    check_cf_bridge(rows);
    check_roundtrip(rows);
    check_frontier(rows);
    check_reflection(rows);
    check_sigma0_identity(rows);
    check_cauchy(rows);
  }
  if (all || suite == "mc") {
    check_kanter_laplace(rows);
    check_kanter_ks(rows);
    check_mc_series(rows);
    check_cms(rows);
    check_cms_histogram(rows);
    check_stable_ks(rows);
  }
  if (all || suite == "pde") {
    check_pde(rows);
  }
  return rows;
}

}  // namespace airystable
