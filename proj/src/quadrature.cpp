#include "airystable/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <vector>

#include "detail/gauss.hpp"

namespace airystable {
namespace {

using detail::GaussRule;

const GaussRule<double>& rule_low() {
  static const GaussRule<double> r = detail::legendre_rule<double>(12);
  return r;
}
const GaussRule<double>& rule_high() {
  static const GaussRule<double> r = detail::legendre_rule<double>(25);
  return r;
}

template <typename Value, typename F>
struct Panel {
  double a, b;
  Value value;
  double err;
};

template <typename Value>
double norm_of(const Value& v) {
  if constexpr (std::is_same_v<Value, double>)
    return std::fabs(v);
  else
    return std::abs(v);
}

template <typename Value, typename F>
Panel<Value, F> eval_panel(const F& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  Value lo{}, hi{};
  for (size_t i = 0; i < rule_low().x.size(); ++i)
    lo += rule_low().w[i] * f(c + h * rule_low().x[i]);
  for (size_t i = 0; i < rule_high().x.size(); ++i)
    hi += rule_high().w[i] * f(c + h * rule_high().x[i]);
  evals += static_cast<long>(rule_low().x.size() + rule_high().x.size());
  lo *= h;
  hi *= h;
  return {a, b, hi, norm_of<Value>(hi - lo)};
}

template <typename Value, typename F>
void adaptive(const F& f, double a, double b, double abs_tol,
              int max_subdivisions, Value& value, double& err, long& evals) {
  using P = Panel<Value, F>;
  auto by_err = [](const P& x, const P& y) { return x.err < y.err; };
  std::vector<P> heap;
  heap.push_back(eval_panel<Value>(f, a, b, evals));
  // total error is re-summed from the heap: an incrementally maintained
  // value keeps rounding residue from the early large-error panels
  auto sum_err = [&] {
    double s = 0.0;
    for (const P& p : heap) s += p.err;
    return s;
  };
  double total_err = heap.front().err;
  int splits = 0;
  while (total_err > abs_tol) {
    if (splits >= max_subdivisions) {
      Value total{};
      for (const P& p : heap) total += p.value;
      throw convergence_error("quadrature: subdivision limit exceeded",
                              {norm_of<Value>(total), total_err, evals});
    }
    std::pop_heap(heap.begin(), heap.end(), by_err);
    const P worst = heap.back();
    heap.pop_back();
    const double m = 0.5 * (worst.a + worst.b);
    if (!(m > worst.a && m < worst.b))
      throw convergence_error("quadrature: interval underflow",
                              {0.0, total_err, evals});
    const P left = eval_panel<Value>(f, worst.a, m, evals);
    const P right = eval_panel<Value>(f, m, worst.b, evals);
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_err);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_err);
    ++splits;
    if ((splits & 15) == 0)
      total_err = sum_err();
    else
      total_err += left.err + right.err - worst.err;
  }
  Value total{};
  for (const P& p : heap) total += p.value;
  value = total;
  err = sum_err();
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol >= 16 * DBL_EPSILON))
    throw parameter_error("QuadratureConfig: abs_tol below 16*epsilon");
  if (cfg.max_subdivisions < 1)
    throw parameter_error("QuadratureConfig: max_subdivisions < 1");
  if (cfg.tail_cutoff < 0.0)
    throw parameter_error("QuadratureConfig: negative tail_cutoff");
}

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double abs_tol, int max_subdivisions) {
  QuadResult r;
  adaptive<double>(f, a, b, abs_tol, max_subdivisions, r.value, r.err,
                   r.evals);
  return r;
}

QuadResultC integrate_complex(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, int max_subdivisions) {
  QuadResultC r;
  adaptive<std::complex<double>>(f, a, b, abs_tol, max_subdivisions, r.value,
                                 r.err, r.evals);
  return r;
}

}  // namespace airystable
