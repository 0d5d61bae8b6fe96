#include <algorithm>
#include <cmath>
#include <vector>

#include "airystable/gamma.hpp"
#include "airystable/quadrature.hpp"
#include "airystable/rng.hpp"
#include "airystable/types.hpp"
#include "airystable/wright.hpp"
#include "doctest.h"

using namespace airystable;

namespace {

// Independent extended-precision brute-force sum of the Wright series.
// Runs to its own convergence (at least 300 terms worth of inspection).
struct BruteResult {
  long double value = 0.0L;
  long double err = 0.0L;
  bool converged = false;
};

long double sin_pi_l(long double x) {
  long double r = std::remainder(x, 2.0L);
  if (r > 0.5L)
    r = 1.0L - r;
  else if (r < -0.5L)
    r = -1.0L - r;
  return std::sin(static_cast<long double>(M_PI) * r);
}

BruteResult brute_wright(double a, double b, double z) {
  BruteResult out;
  if (z == 0.0) {
    const long double y = b;
    if (y == std::floor(y) && y <= 0.0L) {
      out.value = 0.0L;
    } else if (y > 0.5L) {
      out.value = std::exp(-std::lgamma(y));
    } else {
      out.value = sin_pi_l(y) * std::exp(std::lgamma(1.0L - y)) /
                  static_cast<long double>(M_PI);
    }
    out.converged = true;
    return out;
  }
  const long double laz = std::log(std::fabs(static_cast<long double>(z)));
  long double sum = 0.0L, sum_abs = 0.0L;
  int small_streak = 0;
  for (int k = 0; k < 20000; ++k) {
    const long double y = static_cast<long double>(a) * k + b;
    long double lt;
    int sign;
    if (y == std::floor(y) && y <= 0.0L) {
      lt = -1e30L;
      sign = 0;
    } else if (y > 0.5L) {
      lt = -std::lgamma(y);
      sign = 1;
    } else {
      const long double s = sin_pi_l(y);
      lt = std::log(std::fabs(s)) + std::lgamma(1.0L - y) -
           std::log(static_cast<long double>(M_PI));
      sign = s > 0.0L ? 1 : -1;
    }
    lt += k * laz - std::lgamma(static_cast<long double>(k) + 1.0L);
    long double term = sign == 0 ? 0.0L : sign * std::exp(lt);
    if (z < 0.0 && (k & 1)) term = -term;
    sum += term;
    sum_abs += std::fabs(term);
    const bool small = std::fabs(term) <= 1e-27L * (1.0L + std::fabs(sum));
    small_streak = small ? small_streak + 1 : 0;
    if (k >= 300 && small_streak >= 8) {
      out.converged = true;
      break;
    }
  }
  out.value = sum;
  // Per-term error ~1e-16 relative: expl/lgammal arguments reach O(1e3), so
  // the long double ulps get amplified by the log magnitudes.
  out.err = 1e-16L * sum_abs;
  return out;
}

double levy_half_density(double x, double t) {
  return t / (2.0 * std::sqrt(M_PI)) * std::pow(x, -1.5) *
         std::exp(-t * t / (4.0 * x));
}

}  // namespace

TEST_CASE("wright trivial anchors") {
  const EvalResult r0 = wright({-0.5, 0.5}, 0.0);
  CHECK(r0.value == doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(r0.terms == 1);

  // Gaussian identity W_{-1/2,1/2}(-x) = exp(-x^2/4)/sqrt(pi)
  const EvalResult r1 = wright({-0.5, 0.5}, -1.0);
  const double expect = std::exp(-0.25) / std::sqrt(M_PI);
  CHECK(std::fabs(r1.value - expect) <= r1.err_bound + 1e-13 * expect);
  CHECK(r1.err_bound < 1e-11);
}

TEST_CASE("wright Gaussian identity across the axis") {
  for (double x = 0.25; x <= 6.0; x += 0.25) {
    const EvalResult r = wright({-0.5, 0.5}, -x);
    const double expect = std::exp(-x * x / 4.0) / std::sqrt(M_PI);
    CHECK(std::fabs(r.value - expect) <=
          r.err_bound + 1e-13 * std::fabs(expect));
  }
}

TEST_CASE("wright matches extended-precision brute force") {
  const std::vector<double> as = {-0.9, -0.7, -0.5, -0.3, -0.1, 0.0, 0.5, 1.5};
  const std::vector<double> bs = {0.1, 0.5, 1.0, 1.7};
  const std::vector<double> zs = {0.0, -0.25, -1.0, -2.5, -5.0, -10.0};
  int checked = 0;
  for (double a : as)
    for (double b : bs)
      for (double z : zs) {
        const double cap = wright_domain_cap({a, b});
        if (-z > cap) {
          CHECK_THROWS_AS(wright({a, b}, z), domain_error);
          continue;
        }
        const BruteResult ref = brute_wright(a, b, z);
        if (!ref.converged) continue;
        const EvalResult r = wright({a, b}, z);
        const double tol =
            r.err_bound + static_cast<double>(ref.err) + 1e-18;
        CHECK(std::fabs(r.value - static_cast<double>(ref.value)) <= tol);
        ++checked;
      }
  CHECK(checked > 100);
}

TEST_CASE("wright example a=-0.3 b=0.7 z=-2") {
  const BruteResult ref = brute_wright(-0.3, 0.7, -2.0);
  REQUIRE(ref.converged);
  const EvalResult r = wright({-0.3, 0.7}, -2.0);
  CHECK(r.value == doctest::Approx(static_cast<double>(ref.value))
                       .epsilon(1e-12));
}

TEST_CASE("wright rejects invalid parameters and arguments") {
  CHECK_THROWS_AS(wright({-1.0, 0.5}, -1.0), parameter_error);
  CHECK_THROWS_AS(wright({-1.5, 0.5}, -1.0), parameter_error);
  CHECK_THROWS_AS(wright({-0.5, 0.5}, 1.0), domain_error);
  CHECK_THROWS_AS(wright({-0.5, 0.5}, -40.0), domain_error);
  // theta near 1: the validated domain shrinks hard
  CHECK_THROWS_AS(wright({-0.9, 0.1}, -10.0), domain_error);
}

TEST_CASE("subordinator density: Levy closed form at theta = 1/2") {
  const EvalResult a = subordinator_density(0.5, 1.0, 1.0);
  CHECK(a.value == doctest::Approx(levy_half_density(1.0, 1.0)).epsilon(1e-12));
  const EvalResult b = subordinator_density(0.5, 4.0, 2.0);
  CHECK(b.value == doctest::Approx(levy_half_density(4.0, 2.0)).epsilon(1e-12));
  CHECK(b.value == doctest::Approx(0.0549239112).epsilon(1e-8));

  for (double t : {0.5, 1.0, 2.0})
    for (double x = 0.1; x <= 10.0; x *= 1.45) {
      const EvalResult r = subordinator_density(0.5, x, t);
      const double expect = levy_half_density(x, t);
      CHECK(std::fabs(r.value - expect) <= 1e-8 * std::fabs(expect));
    }
}

TEST_CASE("subordinator density: domain and errors") {
  CHECK_THROWS_AS(subordinator_density(0.5, -1.0, 1.0), domain_error);
  CHECK_THROWS_AS(subordinator_density(0.5, 0.0, 1.0), domain_error);
  CHECK_THROWS_AS(subordinator_density(1.2, 1.0, 1.0), parameter_error);
  CHECK_THROWS_AS(subordinator_density(0.5, 1.0, -1.0), domain_error);
  // far left of the support: Wright argument beyond the validated domain
  const double xmin = subordinator_min_x(0.5, 1.0);
  CHECK_THROWS_AS(subordinator_density(0.5, xmin * 0.5, 1.0), domain_error);
  CHECK(subordinator_left_mass_bound(0.5, 1.0) < 1e-12);
}

TEST_CASE("subordinator Laplace transform oracle at theta = 0.7") {
  // int_0^inf exp(-lam x) h(x,t) dx = exp(-t lam^theta)
  const double theta = 0.7, t = 1.0;
  const double x_min = subordinator_min_x(theta, t);
  for (double lam : {0.5, 1.0, 2.0}) {
    auto f = [&](double x) {
      return std::exp(-lam * x) * subordinator_density(theta, x, t).value;
    };
    // exponential cutoff: tail of the integrand is below 1e-14 past X
    const double X = 60.0 / lam + 20.0;
    const QuadResult q = integrate(f, x_min, X, 1e-11, 6000);
    const double expect = std::exp(-t * std::pow(lam, theta));
    CHECK(q.value == doctest::Approx(expect).epsilon(1e-6));
  }
}

TEST_CASE("subordinator normalization over theta grid") {
  for (double theta : {0.3, 0.5, 0.7, 0.9}) {
    const double t = 1.0;
    const double x_min = subordinator_min_x(theta, t);
    auto f = [&](double x) {
      return subordinator_density(theta, x, t).value;
    };
    const double X = 20.0;
    const QuadResult q = integrate(f, x_min, X, 1e-9, 8000);
    const EvalResult tail = subordinator_tail_prob(theta, X, t);
    const double mass =
        q.value + tail.value + subordinator_left_mass_bound(theta, t);
    CHECK(std::fabs(mass - 1.0) <= 1e-5);
  }
}

TEST_CASE("subordinator tail probability consistency") {
  // P(S > x) via the z-integral equals the x-space integral of the density.
  const double theta = 0.6, t = 1.0, x0 = 1.5, x1 = 8.0;
  auto f = [&](double x) { return subordinator_density(theta, x, t).value; };
  const QuadResult mid = integrate(f, x0, x1, 1e-11, 4000);
  const double p0 = subordinator_tail_prob(theta, x0, t).value;
  const double p1 = subordinator_tail_prob(theta, x1, t).value;
  CHECK(p0 - p1 == doctest::Approx(mid.value).epsilon(1e-8));
}

TEST_CASE("generalized gamma pdf examples") {
  CHECK(gen_gamma_pdf({1.0, 1.0}, 2.0) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
  CHECK(gen_gamma_pdf({2.0, 1.0}, 1.0) ==
        doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(gen_gamma_pdf({3.0, 2.0}, 1.0) ==
        doctest::Approx(1.5 * std::exp(-0.5)).epsilon(1e-14));
  CHECK_THROWS_AS(gen_gamma_pdf({1.0, 1.0}, 0.0), domain_error);
  CHECK_THROWS_AS(gen_gamma_pdf({1.0, 1.0}, -1.0), domain_error);
  CHECK_THROWS_AS(gen_gamma_pdf({0.0, 1.0}, 1.0), parameter_error);
}

TEST_CASE("generalized gamma sampler moments") {
  struct Case {
    double g, tau, mean_expect, tol;
  };
  // E[Y] = tau^{1/g} Gamma(1 + 1/g)
  const Case cases[] = {
      {1.0, 1.0, 1.0, 0.004},
      {2.0, 1.0, std::exp(std::lgamma(1.5)), 0.003},
      {3.0, 2.0, std::pow(2.0, 1.0 / 3.0) * std::exp(std::lgamma(4.0 / 3.0)),
       0.003},
  };
  for (const auto& c : cases) {
    RandomStream rs(1234567);
    double sum = 0.0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) sum += gen_gamma_sample({c.g, c.tau}, rs);
    CHECK(std::fabs(sum / n - c.mean_expect) <= c.tol);
  }
}

TEST_CASE("generalized gamma sampler empirical CDF (KS)") {
  const double g = 2.5, tau = 1.3;
  const int n = 100000;
  RandomStream rs(424242);
  std::vector<double> xs(n);
  for (auto& v : xs) v = gen_gamma_sample({g, tau}, rs);
  std::sort(xs.begin(), xs.end());
  double ks = 0.0;
  for (int i = 0; i < n; ++i) {
    const double F = 1.0 - std::exp(-std::pow(xs[i], g) / tau);
    ks = std::fmax(ks, std::fabs(F - (i + 1.0) / n));
    ks = std::fmax(ks, std::fabs(F - double(i) / n));
  }
  CHECK(ks <= 1.95 / std::sqrt(double(n)));
}
