#include "exact/interval.hpp"

#include <algorithm>

namespace exact {

Interval operator+(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
}

Interval operator*(const Rational& q, const Interval& a) {
  if (sgn(q) >= 0) return {q * a.lo, q * a.hi};
  return {q * a.hi, q * a.lo};
}

Interval operator+(const Interval& a, const Rational& q) {
  return {a.lo + q, a.hi + q};
}

Interval operator-(const Interval& a, const Rational& q) {
  return {a.lo - q, a.hi - q};
}

Interval operator/(const Interval& a, const Rational& q) {
  if (sgn(q) == 0) throw std::invalid_argument("Interval/0");
  return (Rational(1) / q) * a;
}

Interval div(const Interval& a, const Interval& b) {
  if (b.contains(Rational(0)))
    throw std::invalid_argument("Interval div: divisor contains 0");
  Interval inv(Rational(1) / b.hi, Rational(1) / b.lo);
  return a * inv;
}

Interval hull(const Interval& a, const Interval& b) {
  return {min(a.lo, b.lo), max(a.hi, b.hi)};
}

Interval intersect(const Interval& a, const Interval& b) {
  Rational lo = max(a.lo, b.lo), hi = min(a.hi, b.hi);
  if (lo > hi) throw std::invalid_argument("Interval intersect: disjoint");
  return {lo, hi};
}

bool intersects(const Interval& a, const Interval& b) {
  return max(a.lo, b.lo) <= min(a.hi, b.hi);
}

Interval abs(const Interval& a) {
  if (sgn(a.lo) >= 0) return a;
  if (sgn(a.hi) <= 0) return -a;
  return {Rational(0), a.mag()};
}

Interval sq(const Interval& a) {
  Interval m = abs(a);
  return {m.lo * m.lo, m.hi * m.hi};
}

Interval widen(const Interval& a, const Rational& slack) {
  if (sgn(slack) < 0) throw std::invalid_argument("widen: negative slack");
  return {a.lo - slack, a.hi + slack};
}

Rational dist(const Rational& q, const Interval& a) {
  if (q < a.lo) return a.lo - q;
  if (q > a.hi) return q - a.hi;
  return Rational(0);
}

std::string to_string(const Interval& a) {
  return "[" + to_string(a.lo) + ", " + to_string(a.hi) + "]";
}

}  // namespace exact
