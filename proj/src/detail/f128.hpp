#ifndef AIRYSTABLE_DETAIL_F128_HPP
#define AIRYSTABLE_DETAIL_F128_HPP

// Internal quad-precision helpers.  The public API is double-only; the
// alternating series here cancel from peaks ~1e20 down to O(1) values, which
// double (even compensated) cannot certify to the required tolerances.

#include <quadmath.h>

#include <cmath>

namespace airystable::detail {

using f128 = __float128;

inline constexpr double kF128Eps = 1.925929944387235853e-34;  // 2^-112

inline double to_double(f128 x) { return static_cast<double>(x); }

// sin(pi*x) in quad precision, reduction as in the double version.
inline f128 sin_pi_q(f128 x) {
  f128 r = remainderq(x, f128(2));
  if (r > f128(0.5))
    r = f128(1) - r;
  else if (r < f128(-0.5))
    r = f128(-1) - r;
  return sinq(M_PIq * r);
}

// log|1/Gamma(x)| and sign, quad precision; sign 0 at poles.
struct SignedLogQ {
  f128 log_abs;
  int sign;
};

inline SignedLogQ log_reciprocal_gamma_q(f128 x) {
  if (x > f128(0.5)) return {-lgammaq(x), 1};
  const f128 fl = floorq(x);
  if (x == fl) return {-HUGE_VALQ, 0};
  const f128 s = sin_pi_q(x);
  const f128 la = logq(fabsq(s)) + lgammaq(f128(1) - x) - logq(M_PIq);
  return {la, s > 0 ? 1 : -1};
}

// Simple complex-on-f128 value type for the quad-precision contour path.
struct c128 {
  f128 re{0}, im{0};
};

inline c128 operator+(c128 a, c128 b) { return {a.re + b.re, a.im + b.im}; }
inline c128 operator-(c128 a, c128 b) { return {a.re - b.re, a.im - b.im}; }
inline c128 operator*(c128 a, c128 b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline c128 operator*(f128 s, c128 a) { return {s * a.re, s * a.im}; }

inline c128 cexp_q(c128 z) {
  const f128 m = expq(z.re);
  return {m * cosq(z.im), m * sinq(z.im)};
}

inline f128 cabs_q(c128 z) { return hypotq(z.re, z.im); }

}  // namespace airystable::detail

#endif
