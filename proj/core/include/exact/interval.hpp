#pragma once

#include <string>

#include "exact/rational.hpp"

namespace exact {

// Closed interval with rational endpoints, lo <= hi. The basic unit of
// rigor: every approximate quantity in the library is carried as one of
// these, and operations only ever widen honestly.
struct Interval {
  Rational lo, hi;

  Interval() : lo(0), hi(0) {}
  explicit Interval(const Rational& q) : lo(q), hi(q) {}
  Interval(const Rational& l, const Rational& h) : lo(l), hi(h) {
    if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
  }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  Rational mag() const { return max(abs(lo), abs(hi)); }

  bool contains(const Rational& q) const { return lo <= q && q <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool strictly_contains(const Rational& q) const { return lo < q && q < hi; }
  bool is_point() const { return lo == hi; }
  bool straddles_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& q, const Interval& a);
Interval operator+(const Interval& a, const Rational& q);
Interval operator-(const Interval& a, const Rational& q);

// Division by an exact nonzero rational.
Interval operator/(const Interval& a, const Rational& q);
// Division by an interval bounded away from zero.
Interval div(const Interval& a, const Interval& b);

Interval hull(const Interval& a, const Interval& b);
// Intersection; falls back to the hull midpointed gap if disjoint is not
// acceptable to the caller, so callers needing emptiness use intersects().
Interval intersect(const Interval& a, const Interval& b);
bool intersects(const Interval& a, const Interval& b);

// Enclosure of |x| over the interval.
Interval abs(const Interval& a);

// Enclosure of x^2 over the interval (tight also when it straddles 0).
Interval sq(const Interval& a);

// Symmetric widening by a nonnegative rational slack.
Interval widen(const Interval& a, const Rational& slack);

// Distance from a rational point to the interval (0 when inside).
Rational dist(const Rational& q, const Interval& a);

std::string to_string(const Interval& a);

}  // namespace exact
