#include "exact/rational.hpp"

namespace exact {

Rational rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow2(long e) {
  Rational q(1);
  if (e >= 0) {
    mpz_ui_pow_ui(q.get_num_mpz_t(), 2, static_cast<unsigned long>(e));
  } else {
    mpz_ui_pow_ui(q.get_den_mpz_t(), 2, static_cast<unsigned long>(-e));
  }
  return q;
}

long ceil_log2(const Rational& q) {
  if (sgn(q) <= 0) throw std::invalid_argument("ceil_log2: q <= 0");
  // num/den <= 2^e  <=>  num <= den * 2^e
  long e = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2)) + 1;
  while (q > pow2(e)) ++e;
  while (e > -(1L << 30) && q <= pow2(e - 1)) --e;
  return e;
}

long precision_for_gap(const Rational& q) {
  if (sgn(q) <= 0) throw std::invalid_argument("precision_for_gap: q <= 0");
  long m = -ceil_log2(q) + 1;
  if (m < 0) m = 0;
  while (pow2(-m) >= q) ++m;
  return m;
}

Rational abs(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

Rational max(const Rational& a, const Rational& b) { return a > b ? a : b; }

Integer floor_int(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Integer round_int(const Rational& q) { return floor_int(q + rat(1, 2)); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw ParseError("malformed rational: " + s);
  }
  auto slash = s.find('/');
  if (slash == 0 || slash == s.size() - 1 ||
      (slash != std::string::npos && s.find('/', slash + 1) != std::string::npos))
    throw ParseError("malformed rational: " + s);
  try {
    Rational q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational: " + s);
  }
}

}  // namespace exact
