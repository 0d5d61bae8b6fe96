#include <algorithm>
#include <cmath>
#include <vector>

#include "airystable/oracles.hpp"
#include "airystable/wright.hpp"
#include "detail/gauss.hpp"
#include "detail/oracles_internal.hpp"

namespace airystable {

namespace {

// Cumulative cubic-Hermite table: F between nodes from node values and
// node densities.
struct HermiteCdfTable {
  std::vector<double> x, F, p;

  double interp(double xq) const {
    const auto it = std::upper_bound(x.begin(), x.end(), xq);
    const size_t i = std::clamp<size_t>(it - x.begin(), 1, x.size() - 1) - 1;
    const double h = x[i + 1] - x[i];
    const double s = (xq - x[i]) / h;
    const double s2 = s * s, s3 = s2 * s;
    return F[i] * (2 * s3 - 3 * s2 + 1) + h * p[i] * (s3 - 2 * s2 + s) +
           F[i + 1] * (-2 * s3 + 3 * s2) + h * p[i + 1] * (s3 - s2);
  }
};

// survival values on a log-spaced wing; log-linear interpolation
struct WingTable {
  std::vector<double> log_u;  // distance from the center, increasing
  std::vector<double> log_s;  // survival (or mass) at that distance
  double nu = 1.5;

  double interp(double u) const {
    const double lu = std::log(u);
    if (lu >= log_u.back())  // power-law extrapolation
      return std::exp(log_s.back() - nu * (lu - log_u.back()));
    const auto it = std::upper_bound(log_u.begin(), log_u.end(), lu);
    const size_t i =
        std::clamp<size_t>(it - log_u.begin(), 1, log_u.size() - 1) - 1;
    const double w = (lu - log_u[i]) / (log_u[i + 1] - log_u[i]);
    return std::exp(log_s[i] * (1.0 - w) + log_s[i + 1] * w);
  }
};

}  // namespace

struct StableCdf::Impl {
  StableParams params;
  double t;
  double center;
  double bulk_half;
  HermiteCdfTable bulk;
  WingTable right, left;

  Impl(const StableParams& p, double t_in) : params(p), t(t_in) {
    StablePdf pdf(p, t);
    center = p.mu * t;
    bulk_half = pdf.domain() * 0.995;
    const int n_panels = 1024;
    const double x0 = center - bulk_half;
    const double h = 2.0 * bulk_half / n_panels;
    bulk.x.resize(n_panels + 1);
    bulk.p.resize(n_panels + 1);
    bulk.F.resize(n_panels + 1);
    for (int i = 0; i <= n_panels; ++i) {
      bulk.x[i] = x0 + i * h;
      bulk.p[i] = pdf.eval(bulk.x[i]).value;
    }
    bulk.F[0] = detail::gil_pelaez_stable_cdf(p, t, x0, 1e-9);
    for (int i = 0; i < n_panels; ++i) {
      auto f = [&](double x) { return pdf.eval(x).value; };
      bulk.F[i + 1] =
          bulk.F[i] + detail::gauss12(f, bulk.x[i], bulk.x[i + 1]);
    }
    build_wing(right, +1);
    build_wing(left, -1);
  }

  void build_wing(WingTable& wing, int side) {
    wing.nu = params.nu;
    const double ratio = std::pow(10.0, 1.0 / 24.0);
    double u = bulk_half;
    for (int j = 0; j < 400; ++j) {
      const double x = center + side * u;
      const double F = detail::gil_pelaez_stable_cdf(params, t, x, 1e-9);
      const double s = side > 0 ? 1.0 - F : F;
      const double s_floor = std::fmax(s, 1e-300);
      wing.log_u.push_back(std::log(u));
      wing.log_s.push_back(std::log(s_floor));
      if (s <= 2e-4) break;
      u *= ratio;
    }
  }

  double cdf(double x) const {
    const double u = x - center;
    if (std::fabs(u) <= bulk_half) return bulk.interp(x);
    if (u > 0.0) return 1.0 - right.interp(u);
    return left.interp(-u);
  }
};

StableCdf::StableCdf(const StableParams& params, double t)
    : impl_(std::make_unique<Impl>(params, t)) {}
StableCdf::~StableCdf() = default;
StableCdf::StableCdf(StableCdf&&) noexcept = default;
StableCdf& StableCdf::operator=(StableCdf&&) noexcept = default;
double StableCdf::cdf(double x) const { return impl_->cdf(x); }

struct SubordinatorCdf::Impl {
  double theta, t;
  double z_hi;
  HermiteCdfTable tail_integral;  // I(z) = int_0^z W(-u) du = P(S > x(z))

  Impl(double theta_in, double t_in) : theta(theta_in), t(t_in) {
    WrightEvaluator w({-theta, 1.0 - theta});
    z_hi = w.domain_cap() * 0.9999;
    const int n_panels = 1024;
    const double h = z_hi / n_panels;
    tail_integral.x.resize(n_panels + 1);
    tail_integral.p.resize(n_panels + 1);
    tail_integral.F.resize(n_panels + 1);
    for (int i = 0; i <= n_panels; ++i) {
      tail_integral.x[i] = i * h;
      tail_integral.p[i] =
          i == 0 ? w.eval(0.0).value : w.eval(-tail_integral.x[i]).value;
    }
    tail_integral.F[0] = 0.0;
    auto f = [&](double z) { return w.eval(-z).value; };
    for (int i = 0; i < n_panels; ++i)
      tail_integral.F[i + 1] =
          tail_integral.F[i] +
          detail::gauss12(f, tail_integral.x[i], tail_integral.x[i + 1]);
  }

  double cdf(double x) const {
    if (!(x > 0.0)) return 0.0;
    const double z = t * std::pow(x, -theta);
    if (z >= z_hi) return 0.0;  // left of the evaluable support
    return 1.0 - tail_integral.interp(z);
  }
};

SubordinatorCdf::SubordinatorCdf(double theta, double t)
    : impl_(std::make_unique<Impl>(theta, t)) {}
SubordinatorCdf::~SubordinatorCdf() = default;
SubordinatorCdf::SubordinatorCdf(SubordinatorCdf&&) noexcept = default;
SubordinatorCdf& SubordinatorCdf::operator=(SubordinatorCdf&&) noexcept =
    default;
double SubordinatorCdf::cdf(double x) const { return impl_->cdf(x); }

}  // namespace airystable
