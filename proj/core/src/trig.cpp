#include "exact/trig.hpp"

#include <mutex>
#include <optional>
#include <stdexcept>

namespace exact {

namespace {

// arctan(1/k) with error < 2^-(m+2), bracketed by the first omitted term.
Interval atan_inv(long k, int m) {
  Rational kk = Rational(1) / (rat(k) * rat(k));
  Rational power = rat(1, k);  // k^-(2j+1)
  Rational sum(0);
  Rational bound = pow2(-(m + 2));
  long j = 0;
  for (;;) {
    Rational term = power / Rational(2 * j + 1);
    if (term < bound) return widen(Interval(sum), term);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
    power *= kk;
    ++j;
  }
}

std::mutex pi_mu;
std::optional<Interval> pi_best;  // guarded by pi_mu

Integer shift_floor(const Integer& x, long q) {
  Integer r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(q));
  return r;
}

Integer div_floor_ui(const Integer& x, unsigned long d) {
  Integer r;
  mpz_fdiv_q_ui(r.get_mpz_t(), x.get_mpz_t(), d);
  return r;
}

// Cheap dyadic upper bound with 10 fractional bits; keeps the degree
// estimation loop off huge-denominator rationals.
Rational dyadic_ceil(const Rational& q) {
  Integer n;
  Rational scaled = q * 1024;
  mpz_cdiv_q(n.get_mpz_t(), scaled.get_num().get_mpz_t(),
             scaled.get_den().get_mpz_t());
  return Rational(n) / 1024;
}

// Taylor degree for sin at |c| <= B: smallest count of terms J+1 whose
// Lagrange remainder B^(2J+3)/(2J+3)! is below eps. Returns (J, remainder).
std::pair<long, Rational> sin_degree(const Rational& B, const Rational& eps) {
  Rational B2 = B * B;
  Rational t = B;  // B^(2j+1)/(2j+1)! at j = 0
  long j = 0;
  for (;;) {
    Rational next = t * B2 / Rational((2 * j + 2) * (2 * j + 3));
    if (next < eps) return {j, next};
    t = next;
    ++j;
    if (j > 4000) throw std::logic_error("sin_degree: no convergence");
  }
}

// sin(c) for dyadic c = M * 2^-q with |c| <= 7/2, J+1 Taylor terms, rem
// the Lagrange bound matching J. Enclosure width <= ~2^-(q-10) + 2 rem.
//
// Fixed-point with floor rounding; ulp error budget per step is
// eps' = ceil((13 eps + 10)/d) + 1 (|c^2| <= 13, term values <= 8), which
// stays O(1) because d >= 20 from the second step on. 32 guard bits in q
// therefore cover everything with a wide margin.
Interval sin_dyadic(const Integer& M, long q, long J, const Rational& rem) {
  Integer C2 = shift_floor(M * M, q);  // c^2, err <= 1 ulp
  Integer T = M;
  Integer S = M;
  unsigned long Terr = 0, Serr = 0;
  for (long j = 0; j < J; ++j) {
    unsigned long d = static_cast<unsigned long>((2 * j + 2) * (2 * j + 3));
    Integer prod = shift_floor(T * C2, q);
    T = -div_floor_ui(prod, d);
    Terr = (13 * Terr + 10) / d + 2;
    S += T;
    Serr += Terr;
  }
  Rational scale = pow2(-q);
  Rational base = Rational(S) * scale;
  Rational slack = Rational(static_cast<long>(Serr)) * scale + rem;
  return widen(Interval(base), slack);
}

Interval sin_core(const Rational& u, const Rational& r, int m) {
  for (int p = m + 8;; p += 16) {
    // Exact reduction of the pi-multiple: t = u mod 2 in [-1, 1).
    Rational t = u - 2 * Rational(floor_int((u + 1) / 2));
    int pip = p + 6;
    Interval piv = pi_interval(pip);
    Interval theta = t * piv + r;
    // Remove whole periods contributed by r: theta - 2k*pi = (t-2k)*pi + r.
    // 22/7 is close enough for choosing the multiple; the subtraction
    // itself folds into the exact coefficient t.
    for (int rounds = 0; theta.mag() > rat(7, 2); ++rounds) {
      if (rounds > 64) throw std::logic_error("sin_core: reduction stuck");
      Integer k = round_int(theta.mid() / rat(44, 7));
      if (sgn(k) == 0) break;
      long kb = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2));
      if (p + 8 + static_cast<int>(kb) > pip) {
        pip = p + 8 + static_cast<int>(kb);
        piv = pi_interval(pip);
      }
      t -= 2 * Rational(k);
      theta = t * piv + r;
    }
    Rational bhat = dyadic_ceil(theta.mag()) + rat(1, 512);
    if (bhat > rat(18, 5)) bhat = rat(18, 5);
    auto [J, rem] = sin_degree(bhat, pow2(-(p + 4)));
    long q = p + 32;
    Rational c = theta.mid();
    Integer M = round_int(c * pow2(q));
    Rational chat = Rational(M) * pow2(-q);
    Rational radius = theta.width() / 2 + abs(c - chat);
    Interval s = widen(sin_dyadic(M, q, J, rem), radius);  // |sin'| <= 1
    if (s.width() < pow2(-m)) return s;
  }
}

}  // namespace

Interval pi_interval(int m) {
  if (m < 0) m = 0;
  std::lock_guard<std::mutex> lock(pi_mu);
  if (pi_best && pi_best->width() < pow2(-m)) return *pi_best;
  Interval a = atan_inv(5, m + 10);
  Interval b = atan_inv(239, m + 10);
  Interval pi = rat(16) * a - rat(4) * b;
  if (pi_best) pi = intersect(pi, *pi_best);
  pi_best = pi;
  return pi;
}

Interval sin_pi_plus(const Rational& u, const Rational& r, int m) {
  return sin_core(u, r, m);
}

Interval cos_pi_plus(const Rational& u, const Rational& r, int m) {
  return sin_core(u + rat(1, 2), r, m);
}

}  // namespace exact
