#include <cmath>
#include <complex>

#include "airystable/density.hpp"
#include "airystable/gamma.hpp"
#include "airystable/quadrature.hpp"
#include "airystable/stable.hpp"
#include "airystable/types.hpp"
#include "doctest.h"

using namespace airystable;

TEST_CASE("forward parameter map") {
  const StableParams p = forward_params({3.0, 0.5});
  CHECK(p.nu == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(p.beta == doctest::Approx(1.0).epsilon(1e-13));  // frontier point
  CHECK(p.sigma ==
        doctest::Approx(std::pow(std::sqrt(0.5), 2.0 / 3.0)).epsilon(1e-13));
  CHECK(p.mu == 0.0);
  // nu = 1 routes to the Cauchy case
  CHECK_THROWS_AS(forward_params({2.0, 0.5}), cauchy_case_error);
  CHECK_THROWS_AS(forward_params({4.0, 0.25}), cauchy_case_error);
  // beta would exceed 1
  CHECK_THROWS_AS(forward_params({2.2, 0.7}), parameter_error);
  // alpha*theta >= 2
  CHECK_THROWS_AS(forward_params({4.0, 0.5}), parameter_error);
  // theta = 1 is not a stable law
  CHECK_THROWS_AS(forward_params({1.5, 1.0}), parameter_error);
}

TEST_CASE("inverse parameter map and round trip") {
  const SubordinationParams s = inverse_params(1.5, 0.5);
  CHECK(s.theta == doctest::Approx(0.2951672353008666).epsilon(1e-12));
  CHECK(s.alpha == doctest::Approx(5.0818648569548595).epsilon(1e-12));
  const SubordinationParams s2 = inverse_params(1.5, 1.0);
  CHECK(s2.theta == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(s2.alpha == doctest::Approx(3.0).epsilon(1e-13));

  for (double nu = 1.05; nu < 2.0; nu += 0.08)
    for (double beta : {0.05, 0.3, 0.5, 0.8, 0.97, 1.0}) {
      const StableParams p = forward_params(inverse_params(nu, beta));
      CHECK(std::fabs(p.nu - nu) <= 1e-12);
      CHECK(std::fabs(p.beta - beta) <= 1e-12);
    }
  CHECK_THROWS_AS(inverse_params(1.0, 0.5), parameter_error);
  CHECK_THROWS_AS(inverse_params(2.0, 0.5), parameter_error);
  CHECK_THROWS_AS(inverse_params(1.5, 0.0), parameter_error);
  CHECK_THROWS_AS(inverse_params(1.5, -0.5), parameter_error);
  CHECK_THROWS_AS(inverse_params(1.5, 1.1), parameter_error);
}

TEST_CASE("stable characteristic function basics") {
  const StableParams p{1.5, 0.0, 1.0, 0.0};
  CHECK(stable_cf(p, 1.0, 0.0) == std::complex<double>(1.0, 0.0));
  CHECK(stable_cf(p, 1.0, 1.0).real() ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(stable_cf(p, 1.0, 1.0).imag() == doctest::Approx(0.0).scale(1.0));
  const StableParams q{1.5, 0.5, 1.2, 0.3};
  for (double g : {0.3, 1.0, 2.5}) {
    const auto a = stable_cf(q, 2.0, g);
    const auto b = std::conj(stable_cf(q, 2.0, -g));
    CHECK(std::abs(a - b) <= 1e-15);
    CHECK(std::abs(a) <= 1.0 + 1e-15);
  }
  CHECK_THROWS_AS(stable_cf({1.0, 0.5, 1.0, 0.0}, 1.0, 1.0),
                  parameter_error);
}

TEST_CASE("subordinated characteristic function") {
  // (alpha=3, theta=1/2, gamma=1): exp(-cos(pi/4)(1+i))
  const auto v = subordinated_cf({3.0, 0.5}, 1.0, 1.0);
  const std::complex<double> expect =
      std::exp(-std::sqrt(0.5) * std::complex<double>(1.0, 1.0));
  CHECK(std::abs(v - expect) <= 1e-15);
  CHECK(subordinated_cf({3.0, 0.5}, 1.0, 0.0) ==
        std::complex<double>(1.0, 0.0));
  // theta = 1: exp(-i t sgn(g) |g|^alpha), purely oscillatory
  const auto w = subordinated_cf({2.5, 1.0}, 2.0, 1.5);
  const double mag = 2.0 * std::pow(1.5, 2.5);
  CHECK(w.real() == doctest::Approx(std::cos(mag)).epsilon(1e-12));
  CHECK(w.imag() == doctest::Approx(-std::sin(mag)).epsilon(1e-12));
  CHECK(std::abs(w) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("bridge identity: subordinated cf equals mapped stable cf") {
  double worst = 0.0;
  for (double theta : {0.2, 0.3, 0.4})
    for (double nu : {1.2, 1.5, 1.75}) {
      if (nu + theta > 2.0) continue;
      const SubordinationParams sp{nu / theta, theta};
      const StableParams st = forward_params(sp);
      for (double t : {0.5, 1.0, 3.0})
        for (double g = -10.0; g <= 10.0; g += 0.5)
          worst = std::fmax(
              worst, std::abs(subordinated_cf(sp, t, g) - stable_cf(st, t, g)));
    }
  CHECK(worst <= 1e-12);
}

TEST_CASE("stable pdf: reflection symmetry and sigma0 identity") {
  StablePdf plus({1.5, 0.5, 1.0, 0.0}, 1.0);
  StablePdf minus({1.5, -0.5, 1.0, 0.0}, 1.0);
  for (double x = -4.0; x <= 4.0; x += 0.5)
    CHECK(plus.eval(x).value ==
          doctest::Approx(minus.eval(-x).value).epsilon(1e-14));

  const SubordinationParams sp = inverse_params(1.5, 0.5);
  for (double t : {1.0, 2.0}) {
    const double sigma0 = subordinated_scale(sp.theta, 1.5, t);
    const StableParams st{1.5, 0.5, sigma0 / std::pow(t, 1.0 / 1.5), 0.0};
    CHECK(stable_pdf(st, t, 0.0).value ==
          doctest::Approx(subordinated_density(sp, 0.0, t).value)
              .epsilon(1e-13));
    CHECK(stable_pdf(st, t, 0.7).value ==
          doctest::Approx(subordinated_density(sp, 0.7, t).value)
              .epsilon(1e-13));
  }
}

TEST_CASE("stable pdf: parameter validation") {
  CHECK_THROWS_AS(stable_pdf({1.0, 0.5, 1.0, 0.0}, 1.0, 0.0),
                  cauchy_case_error);
  CHECK_THROWS_AS(stable_pdf({1.5, 0.0, 1.0, 0.0}, 1.0, 0.0),
                  parameter_error);
  CHECK_THROWS_AS(stable_pdf({1.5, 1.0, 1.0, 0.0}, 1.0, 0.0),
                  parameter_error);
  CHECK_THROWS_AS(stable_pdf({1.5, -1.0, 1.0, 0.0}, 1.0, 0.0),
                  parameter_error);
  CHECK_THROWS_AS(stable_pdf({2.5, 0.5, 1.0, 0.0}, 1.0, 0.0),
                  parameter_error);
  CHECK_THROWS_AS(stable_pdf({1.5, 0.5, -1.0, 0.0}, 1.0, 0.0),
                  parameter_error);
}

TEST_CASE("stable pdf: location/scale convention") {
  // X(t) = sigma t^{1/nu} Z + mu t against the unit-scale density
  const double nu = 1.4, beta = 0.6, sigma = 0.8, mu = 0.3, t = 2.0;
  StablePdf shifted({nu, beta, sigma, mu}, t);
  StablePdf unit({nu, beta, 1.0, 0.0}, 1.0);
  const double s = sigma * std::pow(t, 1.0 / nu);
  for (double x : {-1.0, 0.0, 0.5, 2.0}) {
    const double a = shifted.eval(x).value;
    const double b = unit.eval((x - mu * t) / s).value / s;
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("stable pdf: bulk mass is consistent with quadrature") {
  StablePdf pdf({1.5, 0.5, 1.0, 0.0}, 1.0);
  const double dom = pdf.domain() * 0.99;
  auto f = [&](double x) { return pdf.eval(x).value; };
  const QuadResult q = integrate(f, -dom, dom, 1e-9, 4000);
  CHECK(q.value > 0.85);
  CHECK(q.value < 1.0);
}

TEST_CASE("cauchy density") {
  CHECK(cauchy_pdf(2.0, 1.0, 0.0) ==
        doctest::Approx(std::cos(M_PI / 4.0) / M_PI).epsilon(1e-14));
  // mode on the negative half-axis at -t sin(pi/(2 alpha))
  const double xm = -std::sin(M_PI / 4.0);
  CHECK(cauchy_pdf(2.0, 1.0, xm) > cauchy_pdf(2.0, 1.0, xm + 0.01));
  CHECK(cauchy_pdf(2.0, 1.0, xm) > cauchy_pdf(2.0, 1.0, xm - 0.01));
  // integrates to 1: numeric bulk + analytic arctan tails
  auto f = [](double x) { return cauchy_pdf(2.0, 1.0, x); };
  const QuadResult q = integrate(f, -50.0, 50.0, 1e-10, 8000);
  const double c = cos_pi(0.25), s = sin_pi(0.25);
  auto cdf = [&](double x) { return 0.5 + std::atan((x + s) / c) / M_PI; };
  CHECK(q.value + cdf(-50.0) + 1.0 - cdf(50.0) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(cauchy_pdf(1.0, 1.0, 0.0), parameter_error);
  CHECK_THROWS_AS(cauchy_pdf(2.0, 0.0, 0.0), domain_error);
}
