#pragma once

#include "exact/interval.hpp"

namespace exact {

// Enclosure of pi with width < 2^-m. Machin arctangent series with the
// alternating-series truncation bound; memoized, successive enclosures
// are nested.
Interval pi_interval(int m);

// Enclosures of width < 2^-m of sin(pi*u + r) and cos(pi*u + r) for
// rational u, r. The pi-multiple part is range-reduced exactly (u mod 2
// in rational arithmetic); any remaining excursion beyond one period is
// removed with an enclosed 2*pi. The residual point is evaluated by a
// Taylor polynomial at a dyadic midpoint with a Lagrange remainder, all
// error terms accounted.
Interval sin_pi_plus(const Rational& u, const Rational& r, int m);
Interval cos_pi_plus(const Rational& u, const Rational& r, int m);

inline Interval sin_pi(const Rational& u, int m) {
  return sin_pi_plus(u, Rational(0), m);
}
inline Interval cos_pi(const Rational& u, int m) {
  return cos_pi_plus(u, Rational(0), m);
}

}  // namespace exact
