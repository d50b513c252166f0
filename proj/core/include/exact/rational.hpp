#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace exact {

// Arbitrary-precision rationals. mpq_class keeps values canonical
// (positive denominator, coprime) through arithmetic; only direct
// numerator/denominator surgery needs an explicit canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long num, long den = 1);

// 2^e for any integer e (negative exponents give 1/2^e).
Rational pow2(long e);

// Smallest e with q <= 2^e. Requires q > 0.
long ceil_log2(const Rational& q);

// Smallest m >= 0 with 2^-m < q. Requires q > 0.
long precision_for_gap(const Rational& q);

Rational abs(const Rational& q);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// Largest integer <= q.
Integer floor_int(const Rational& q);

// Nearest integer to q (ties toward +inf).
Integer round_int(const Rational& q);

// Serialized form is "p" for integers and "p/q" otherwise.
std::string to_string(const Rational& q);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts "p" and "p/q" with optional leading '-'.
Rational parse_rational(const std::string& s);

}  // namespace exact
