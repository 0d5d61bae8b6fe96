#ifndef AIRYSTABLE_TYPES_HPP
#define AIRYSTABLE_TYPES_HPP

#include <stdexcept>
#include <string>

namespace airystable {

/// Value of a truncated series or quadrature together with a rigorous
/// absolute error bound and the number of terms/evaluations spent.
struct EvalResult {
  double value = 0.0;
  double err_bound = 0.0;
  long terms = 1;
};

/// Monte Carlo estimate; stderr is sample-std/sqrt(n).  Reproducible for a
/// fixed (seed, worker count).
struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long n_samples = 0;
  unsigned long long seed = 0;
};

/// Uniform evaluation grid for CLI tabulation.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  double step = 1.0;
};

/// Argument outside the mathematical or validated numerical domain.
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

/// Invalid parameter combination (e.g. alpha*theta <= 1 for the series).
class parameter_error : public std::invalid_argument {
 public:
  explicit parameter_error(const std::string& msg)
      : std::invalid_argument(msg) {}
};

/// nu = 1 inputs that must be handled through the Cauchy formulas.
class cauchy_case_error : public parameter_error {
 public:
  explicit cauchy_case_error(const std::string& msg) : parameter_error(msg) {}
};

/// Iteration/subdivision budget exhausted before the tail bound met the
/// tolerance.  Carries the partial result.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& msg, EvalResult partial_result)
      : std::runtime_error(msg), partial(partial_result) {}
  EvalResult partial;
};

/// Bad verification configuration (grid too coarse, aliasing detected, ...).
class config_error : public std::invalid_argument {
 public:
  explicit config_error(const std::string& msg)
      : std::invalid_argument(msg) {}
};

}  // namespace airystable

#endif
