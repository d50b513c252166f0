#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "exact/interval.hpp"
#include "exact/trig.hpp"

namespace exact {

// A point x = pi*u of [-pi, pi], kept pi-scaled so trigonometric range
// reduction stays exact.
struct PiScaled {
  Rational u;
  PiScaled() : u(0) {}
  explicit PiScaled(Rational v) : u(std::move(v)) {
    if (abs(u) > 1) throw std::domain_error("PiScaled: |u| > 1");
  }
};

// Coefficient data b0, (a_n, b_n) for n = 1..N of a trigonometric series
// b0/2 + sum a_n sin nx + b_n cos nx.
struct TrigSeries {
  Rational b0;
  std::vector<std::pair<Rational, Rational>> terms;

  TrigSeries() : b0(0) {}
  int order() const { return static_cast<int>(terms.size()); }
  Rational a(int n) const { return terms.at(n - 1).first; }
  Rational b(int n) const { return terms.at(n - 1).second; }
};

// Rigorous pointwise evaluator of a function on [-pi, pi]. eval(u, r, m)
// returns an enclosure of width < 2^-m of the value at pi*u + r; the
// offset r lets difference quotients step off the pi-grid without losing
// rigor. deriv_bounds[k] >= sup |H^(k)| on [-pi, pi] for k = 0..4 when
// present (quadrature requires all five). series_form, when present,
// describes the evaluator as a trigonometric polynomial so grid sweeps
// can share one table of sine values.
struct SeriesForm {
  TrigSeries S;
  bool smoothed;  // false: partial sum F, true: Riemann smoothing G
};

struct PiFn {
  std::function<Interval(const Rational& u, const Rational& r, int m)> eval;
  std::vector<Rational> deriv_bounds;
  std::optional<SeriesForm> series_form;
};

PiFn series_partial_fn(const TrigSeries& S);
PiFn series_smooth_fn(const TrigSeries& S);
// Smoothed series with an infinite tail beyond frequency tailM whose
// coefficients are bounded by tailB; the tail contributes +-tailB/(tailM-1).
PiFn series_smooth_tail_fn(const TrigSeries& S, int tailM, const Rational& tailB);
PiFn x_squared_fn();

// Rigorous enclosures (width < 2^-m) of sin(n x) and cos(n x) at x = pi*u.
std::pair<Interval, Interval> trig_enclosure(long n, const PiScaled& x, int m);

// F_N(x) = b0/2 + sum_{n<=N} a_n sin nx + b_n cos nx.
Interval eval_partial(const TrigSeries& S, const PiScaled& x, int m);

// Riemann's smoothing G(x) = b0 x^2/4 + sum -a_n/n^2 sin nx - b_n/n^2 cos nx.
Interval smooth_eval(const TrigSeries& S, const PiScaled& x, int m);
Interval smooth_eval_tail(const TrigSeries& S, const PiScaled& x, int m,
                          int tailM, const Rational& tailB);

struct DomainExceeded : std::domain_error {
  using std::domain_error::domain_error;
};

// (H(x+h) + H(x-h) - 2 H(x)) / h^order at x = pi*u, h > 0 a plain
// rational step. Throws DomainExceeded when x +- h leaves [-pi, pi].
Interval symmetric_quotient(const PiFn& H, const PiScaled& x, const Rational& h,
                            int order, int m);

struct ProbeReport {
  std::vector<Rational> schedule;
  std::vector<Interval> estimates;
  bool converged;
  // Rigorous enclosure of the limit: the intersection of the last two
  // estimates, each widened by the exact tail bound the smoothing
  // identity provides for finite series.
  Interval limit;
};

// Symmetric difference quotients of G at the dyadic step schedule
// h = 2^-j; converged iff the last two estimates agree within tol
// (Hausdorff). For finite series the limit enclosure provably contains
// F(x) (order 2) and 0 (order 1).
ProbeReport d2_probe(const TrigSeries& S, const PiScaled& x, const Rational& tol,
                     int steps);
ProbeReport d1_probe(const TrigSeries& S, const PiScaled& x, const Rational& tol,
                     int steps);

enum class TrigKind { Sin, Cos };

struct NoModulus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ToleranceNotMet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (1/pi) Int_{-pi}^{pi} H(x) trig(nx) dx with width < 2^-m, by composite
// Simpson with the error pinned through H's derivative bounds. Requires
// deriv_bounds of size 5 (NoModulus otherwise); ToleranceNotMet when the
// needed partition exceeds the refinement cap.
Interval fourier_coefficient(const PiFn& H, long n, TrigKind kind, int m);

struct IntervalSeries {
  Interval b0;
  std::vector<std::pair<Interval, Interval>> terms;
};

// Round trip through the smoothing: build G from S, integrate it against
// the trigonometric basis, and undo the -1/n^2 scaling and the b0 x^2/4
// contribution via the x^2 integrals. nmax < 0 means S.order().
IntervalSeries recover_coefficients(const TrigSeries& S, const Rational& tol,
                                    int nmax = -1);

struct KroneckerSeries {
  Interval constant;                // b0
  std::vector<Interval> cos_terms;  // 2 (a_n sin nx + b_n cos nx)
  // sine coefficients of K are identically zero.
};

// Cosine series of K(t) = F(x+t) + F(x-t).
KroneckerSeries kronecker_fold(const TrigSeries& S, const PiScaled& x, int m);

struct CLWitness {
  PiScaled x;
  std::uint64_t selected_index;
  Rational amplitude;  // certified lower bound for |cos(m x + y_m)|
};

struct CLResult {
  std::optional<CLWitness> witness;
  std::optional<std::uint64_t> failed_index;
  bool ok() const { return witness.has_value(); }
};

// Nested-interval construction: family[i] = (r_i, v_i) with phase
// y_i = pi*v_i; zeta a strictly increasing list of family indices. Walks
// a subsequence of zeta with gaps > 3x, shrinking to subintervals where
// |cos(m x + y_m)| >= 1/2, and returns the first selected index whose
// amplitude r_m drops below 2^-p, or reports the decay failure.
CLResult cantor_lebesgue_witness(
    const std::vector<std::pair<Rational, Rational>>& family,
    const std::vector<std::uint64_t>& zeta, int p, int budget);

}  // namespace exact
