#ifndef AIRYSTABLE_DETAIL_SERIES_ENGINE_HPP
#define AIRYSTABLE_DETAIL_SERIES_ENGINE_HPP

#include <cmath>
#include <limits>

#include "airystable/types.hpp"
#include "detail/f128.hpp"

namespace airystable::detail {

// Quad-precision accumulation makes tight stopping nearly free; these are
// tighter than strictly required so that the odd/fractional/subordinated
// routes of the same series agree to ~1e-15 of each other.
inline constexpr int kSeriesTermCap = 10000;
inline constexpr double kTolAbs = 1e-16;
inline constexpr double kTolRel = 1e-15;

// Refuse evaluations whose term peak exceeds e^46: even in quad precision
// the surviving digits would not support the library's error bounds.
inline constexpr double kLogPeakCap = 46.0;
inline constexpr double kRhoMax = 0.95;
// Majorant ratio must fall below kRhoMax within this many terms, leaving
// headroom under the hard cap for the geometric decay phase.
inline constexpr int kTermBudget = 6000;

// Rounding-bound constant: covers quad accumulation plus per-term
// exp/lgamma evaluation error (validated against brute-force oracles).
inline constexpr double kRoundC = 4096.0;

// Certifies a geometric tail bound for a series with log-majorants lm_k.
// The bound m_k * rho/(1-rho) is valid once the majorant ratio is below
// kRhoMax and observed decreasing; we require a 3-long streak.
class GeometricTail {
 public:
  // Feed log-majorant of term k (k increasing); returns a tail bound for
  // sum_{j>k} m_j, or +inf while not yet certifiable.
  double update(double lm) {
    const double inf = std::numeric_limits<double>::infinity();
    double tail = inf;
    if (std::isfinite(prev_lm_)) {
      const double ratio = std::exp(lm - prev_lm_);
      const bool ok = ratio <= kRhoMax && ratio <= prev_ratio_ * 1.0000001;
      streak_ = ok ? streak_ + 1 : 0;
      if (streak_ >= 3) tail = std::exp(lm) * ratio / (1.0 - ratio);
      prev_ratio_ = ratio;
    }
    prev_lm_ = lm;
    return tail;
  }

 private:
  double prev_lm_ = std::numeric_limits<double>::infinity();
  double prev_ratio_ = std::numeric_limits<double>::infinity();
  int streak_ = 0;
};

inline double stop_tolerance(double partial_abs) {
  return std::fmax(kTolAbs, kTolRel * partial_abs);
}

}  // namespace airystable::detail

#endif
