#ifndef AIRYSTABLE_DETAIL_GAUSS_HPP
#define AIRYSTABLE_DETAIL_GAUSS_HPP

#include <cmath>
#include <vector>

namespace airystable::detail {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
// Real = double or __float128 (seeds from a coarse double pass).
template <typename Real>
struct GaussRule {
  std::vector<Real> x;
  std::vector<Real> w;
};

// Fixed 12-point Gauss panel on [a,b].
template <typename F>
double gauss12(const F& f, double a, double b);

template <typename Real>
GaussRule<Real> legendre_rule(int n) {
  GaussRule<Real> rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < n; ++i) {
    // Tricomi initial guess, then Newton on the three-term recurrence.
    // Quadratic convergence: 10 iterations reach the working precision
    // from the cosine seed even for Real = __float128.
    Real xi = Real(std::cos(M_PI * (i + 0.75) / (n + 0.5)));
    Real dp = Real(1);
    for (int it = 0; it < 10; ++it) {
      Real p0 = Real(1), p1 = xi;
      for (int k = 2; k <= n; ++k) {
        const Real p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / Real(k);
        p0 = p1;
        p1 = p2;
      }
      dp = Real(n) * (xi * p1 - p0) / (xi * xi - Real(1));
      xi -= p1 / dp;
    }
    {  // refresh P'_n at the converged node for the weight
      Real p0 = Real(1), p1 = xi;
      for (int k = 2; k <= n; ++k) {
        const Real p2 = ((2 * k - 1) * xi * p1 - (k - 1) * p0) / Real(k);
        p0 = p1;
        p1 = p2;
      }
      dp = Real(n) * (xi * p1 - p0) / (xi * xi - Real(1));
    }
    rule.x[i] = xi;
    rule.w[i] = Real(2) / ((Real(1) - xi * xi) * dp * dp);
  }
  return rule;
}

template <typename F>
double gauss12(const F& f, double a, double b) {
  static const GaussRule<double> rule = legendre_rule<double>(12);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double acc = 0.0;
  for (size_t i = 0; i < rule.x.size(); ++i)
    acc += rule.w[i] * f(c + h * rule.x[i]);
  return acc * h;
}

template <typename F>
double gauss7(const F& f, double a, double b) {
  static const GaussRule<double> rule = legendre_rule<double>(7);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double acc = 0.0;
  for (size_t i = 0; i < rule.x.size(); ++i)
    acc += rule.w[i] * f(c + h * rule.x[i]);
  return acc * h;
}

}  // namespace airystable::detail

#endif
