#pragma once

#include <cmath>

namespace cascade {

// One-dimensional C-infinity kernels every profile in the library is built
// from.  psi is the classic compactly supported bump
//
//     psi(u) = exp(1 - 1/(1 - u^2))   for |u| < 1,   0 otherwise,
//
// normalised so psi(0) = 1.  All derivatives vanish to every order at the
// support boundary, which keeps every composed field C-infinity across
// support edges and gluing times.

namespace bump {

inline double value(double u) {
  const double u2 = u * u;
  if (u2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u2));
}

/// d/du psi(u)
inline double d1(double u) {
  const double u2 = u * u;
  if (u2 >= 1.0) return 0.0;
  const double d = 1.0 - u2;
  return value(u) * (-2.0 * u / (d * d));
}

/// d^2/du^2 psi(u)
inline double d2(double u) {
  const double u2 = u * u;
  if (u2 >= 1.0) return 0.0;
  const double d = 1.0 - u2;
  const double d2_ = d * d;
  const double g = -2.0 * u / d2_;  // psi'/psi
  return value(u) * (g * g - 2.0 / d2_ - 8.0 * u2 / (d2_ * d));
}

// The integral of psi has no closed form, but scaled copies integrate
// exactly relative to it: \int psi(a(u-c)) du = (1/a) \int psi du.

}  // namespace bump

// Monotone C-infinity ramp eta : [0,1] -> [0,1] with eta(0)=0, eta(1)=1 and
// all derivatives vanishing at both endpoints.  Used to interpolate between
// the two endpoint states of the base interval; endpoint flatness makes the
// glued field smooth in time across every interval boundary.
namespace ramp {

inline double side(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }

inline double side_d1(double s) {
  if (s <= 0.0) return 0.0;
  const double b = std::exp(-1.0 / s);
  return b / (s * s);
}

inline double eta(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double a = side(s);
  const double b = side(1.0 - s);
  return a / (a + b);
}

inline double eta_d1(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double a = side(s);
  const double b = side(1.0 - s);
  const double da = side_d1(s);
  const double db = side_d1(1.0 - s);
  const double denom = (a + b) * (a + b);
  return (da * b + a * db) / denom;
}

}  // namespace ramp

}  // namespace cascade
