#include <cmath>
#include <vector>

#include "airystable/gamma.hpp"
#include "airystable/types.hpp"
#include "doctest.h"

using namespace airystable;

namespace {

// Extended-precision reference for ln Gamma at integers and half-integers:
// recurrence ln Gamma(x+1) = ln x + ln Gamma(x) summed in long double.
long double ref_log_gamma(long double x) {
  long double acc = 0.0L;
  if (x == std::floor(x)) {
    for (long double k = 2.0L; k < x; k += 1.0L) acc += std::log(k);
    return acc;
  }
  // half-integer: Gamma(1/2) = sqrt(pi)
  acc = 0.5L * std::log(static_cast<long double>(M_PI));
  for (long double y = 0.5L; y < x; y += 1.0L) acc += std::log(y);
  return acc;
}

}  // namespace

TEST_CASE("log_gamma anchors") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(0.5) ==
        doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
  CHECK(log_gamma(4.0) == doctest::Approx(std::log(6.0)).epsilon(1e-14));
}

TEST_CASE("log_gamma 1e-13 relative contract on (0,170]") {
  const std::vector<double> pts = {0.5,  1.0,  1.5,  2.0,  2.5,  3.0,  4.0,
                                   5.0,  6.5,  8.0,  10.0, 12.5, 15.0, 20.5,
                                   30.0, 50.0, 75.5, 99.5, 150.0, 170.0};
  REQUIRE(pts.size() == 20);
  for (double x : pts) {
    const long double ref = ref_log_gamma(static_cast<long double>(x));
    const double got = log_gamma(x);
    const double scale = std::fmax(1.0, std::fabs(static_cast<double>(ref)));
    CHECK(std::fabs(got - static_cast<double>(ref)) <= 1e-13 * scale);
  }
}

TEST_CASE("log_gamma domain errors") {
  CHECK_THROWS_AS(log_gamma(0.0), domain_error);
  CHECK_THROWS_AS(log_gamma(-3.5), domain_error);
  CHECK_THROWS_AS(log_gamma(std::nan("")), domain_error);
}

TEST_CASE("reciprocal_gamma values and poles") {
  CHECK(reciprocal_gamma(1.0) == 1.0);
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-1.0) == 0.0);
  CHECK(reciprocal_gamma(-7.0) == 0.0);
  CHECK(reciprocal_gamma(0.5) ==
        doctest::Approx(1.0 / std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(reciprocal_gamma(4.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  // Reflection branch: 1/Gamma(-0.5) = -1/(2 sqrt(pi)) * ... check against
  // Gamma(-0.5) = -2 sqrt(pi).
  CHECK(reciprocal_gamma(-0.5) ==
        doctest::Approx(-1.0 / (2.0 * std::sqrt(M_PI))).epsilon(1e-13));
  CHECK_THROWS_AS(reciprocal_gamma(std::nan("")), domain_error);
}

TEST_CASE("sin_pi / cos_pi exact reductions") {
  CHECK(sin_pi(1.0) == 0.0);
  CHECK(sin_pi(-2.0) == 0.0);
  CHECK(sin_pi(0.5) == 1.0);
  CHECK(sin_pi(1.5) == -1.0);
  CHECK(cos_pi(0.5) == 0.0);
  CHECK(cos_pi(1.0) == -1.0);
  for (double x : {0.125, 0.375, 2.625, -7.875, 1234.25}) {
    CHECK(sin_pi(x) == doctest::Approx(std::sin(M_PI * std::remainder(x, 2.0)))
                           .epsilon(1e-14));
    CHECK(cos_pi(x) == doctest::Approx(std::cos(M_PI * std::remainder(x, 2.0)))
                           .epsilon(1e-14));
  }
}
