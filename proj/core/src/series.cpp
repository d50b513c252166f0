#include "exact/series.hpp"

#include <algorithm>

namespace exact {

namespace {

Rational coefficient_mass(const TrigSeries& S) {
  Rational mass = abs(S.b0) / 2;
  for (const auto& [a, b] : S.terms) mass += abs(a) + abs(b);
  return mass;
}

// sup-bound pi < 22/7 used in derivative bounds.
const Rational kPiHi = rat(22, 7);

Interval point_sq(const Rational& u, const Rational& r, int m) {
  if (sgn(u) == 0) return Interval(r * r);
  long bits = ceil_log2(abs(u) + abs(r) + 1);
  Interval x = u * pi_interval(m + 6 + static_cast<int>(bits)) + r;
  return sq(x);
}

Interval eval_partial_at(const TrigSeries& S, const Rational& u, const Rational& r,
                         int m) {
  Rational mass = coefficient_mass(S);
  int mt = m + 2 + static_cast<int>(ceil_log2(mass + 2));
  for (;; mt += 8) {
    Interval acc(S.b0 / 2);
    for (int n = 1; n <= S.order(); ++n) {
      const Rational& a = S.a(n);
      const Rational& b = S.b(n);
      if (sgn(a) != 0) acc = acc + a * sin_pi_plus(n * u, n * r, mt);
      if (sgn(b) != 0) acc = acc + b * cos_pi_plus(n * u, n * r, mt);
    }
    if (acc.width() < pow2(-m)) return acc;
  }
}

Interval smooth_eval_at(const TrigSeries& S, const Rational& u, const Rational& r,
                        int m) {
  Rational mass = coefficient_mass(S) + abs(S.b0) * 4;
  int mt = m + 2 + static_cast<int>(ceil_log2(mass + 2));
  for (;; mt += 8) {
    Interval acc(Rational(0));
    if (sgn(S.b0) != 0) acc = (S.b0 / 4) * point_sq(u, r, mt);
    for (int n = 1; n <= S.order(); ++n) {
      Rational nn(static_cast<long>(n) * n);
      const Rational& a = S.a(n);
      const Rational& b = S.b(n);
      if (sgn(a) != 0) acc = acc + (-a / nn) * sin_pi_plus(n * u, n * r, mt);
      if (sgn(b) != 0) acc = acc + (-b / nn) * cos_pi_plus(n * u, n * r, mt);
    }
    if (acc.width() < pow2(-m)) return acc;
  }
}

std::vector<Rational> partial_deriv_bounds(const TrigSeries& S) {
  std::vector<Rational> B(5, Rational(0));
  B[0] = abs(S.b0) / 2;
  for (int n = 1; n <= S.order(); ++n) {
    Rational c = abs(S.a(n)) + abs(S.b(n));
    Rational nk(1);
    for (int k = 0; k < 5; ++k) {
      B[k] += c * nk;
      nk *= n;
    }
  }
  return B;
}

std::vector<Rational> smooth_deriv_bounds(const TrigSeries& S) {
  std::vector<Rational> B(5, Rational(0));
  B[0] = abs(S.b0) / 4 * kPiHi * kPiHi;
  B[1] = abs(S.b0) / 2 * kPiHi;
  B[2] = abs(S.b0) / 2;
  for (int n = 1; n <= S.order(); ++n) {
    Rational c = abs(S.a(n)) + abs(S.b(n));
    Rational nn(static_cast<long>(n) * n);
    Rational nk(1);
    for (int k = 0; k < 5; ++k) {
      B[k] += c * nk / nn;
      nk *= n;
    }
  }
  return B;
}

// Decides h <= pi*(1-u) and h <= pi*(1+u) by refining the pi enclosure;
// exact equality is impossible for u != +-1, so this terminates.
bool step_fits(const Rational& u, const Rational& h) {
  for (int side = 0; side < 2; ++side) {
    Rational margin = side == 0 ? Rational(1 - u) : Rational(1 + u);
    if (sgn(margin) <= 0) return false;
    for (int m = 4;; m += 16) {
      Interval bound = margin * pi_interval(m);
      if (h < bound.lo) break;
      if (h > bound.hi) return false;
      if (m > 4096) throw std::logic_error("step_fits: comparison stuck");
    }
  }
  return true;
}

ProbeReport probe(const TrigSeries& S, const PiScaled& x, const Rational& tol,
                  int steps, int order) {
  if (sgn(tol) <= 0) throw std::invalid_argument("probe: tol <= 0");
  if (steps < 2) throw std::invalid_argument("probe: need k >= 2");
  PiFn G = series_smooth_fn(S);
  int j0 = 3;
  while (!step_fits(x.u, pow2(-j0))) {
    ++j0;
    if (j0 > 64) throw DomainExceeded("probe: no step fits inside [-pi, pi]");
  }
  int mq = static_cast<int>(precision_for_gap(tol)) + 8;

  ProbeReport rep;
  rep.converged = false;
  for (int s = 0; s < steps; ++s) {
    Rational h = pow2(-(j0 + s));
    rep.schedule.push_back(h);
    rep.estimates.push_back(symmetric_quotient(G, x, h, order, mq));
  }
  const Interval& e1 = rep.estimates[rep.estimates.size() - 2];
  const Interval& e2 = rep.estimates.back();
  Rational hausdorff = max(abs(e1.lo - e2.lo), abs(e1.hi - e2.hi));
  rep.converged = hausdorff <= tol;

  // Tail bounds from the term-by-term smoothing identity: for step h,
  //   quotient_2(h) = b0/2 + sum A_n(x) (sin(nh/2)/(nh/2))^2,
  // so |quotient_2(h) - F(x)| <= sum |A_n| min(1, (nh/2)^2/3); and
  // quotient_1(h) = h quotient_2(h), so |quotient_1(h)| <= h W.
  auto tail2 = [&](const Rational& h) {
    Rational t(0);
    for (int n = 1; n <= S.order(); ++n) {
      Rational c = abs(S.a(n)) + abs(S.b(n));
      Rational dev = (n * h / 2) * (n * h / 2) / 3;
      t += c * min(Rational(1), dev);
    }
    return t;
  };
  auto tail1 = [&](const Rational& h) { return h * coefficient_mass(S); };
  Rational h1 = rep.schedule[rep.schedule.size() - 2];
  Rational h2 = rep.schedule.back();
  Interval w1 = widen(e1, order == 2 ? tail2(h1) : tail1(h1));
  Interval w2 = widen(e2, order == 2 ? tail2(h2) : tail1(h2));
  rep.limit = intersect(w1, w2);
  return rep;
}

struct QuadJob {
  long n;
  TrigKind kind;
};

// Composite Simpson of (1/pi) Int H(x) trig(nx) dx for a batch of jobs
// sharing H's node values. Error bound per job:
//   (2 pi)^5 / (2880 pi K^4) * C4  <=  (22/7)^4/90 / K^4 * C4,
// with C4 = sum_k binom(4,k) B_k n^(4-k).
std::vector<Interval> simpson_batch(const PiFn& H, const std::vector<QuadJob>& jobs,
                                    int m, long cell_cap) {
  if (H.deriv_bounds.size() < 5)
    throw NoModulus("fourier quadrature: H carries no derivative bounds");
  const auto& B = H.deriv_bounds;
  const Rational alpha = kPiHi * kPiHi * kPiHi * kPiHi / 90;

  Rational c4max(0);
  std::vector<Rational> c4s;
  for (const auto& job : jobs) {
    Rational n(job.n);
    Rational c4 = B[4] + 4 * B[3] * n + 6 * B[2] * n * n + 4 * B[1] * n * n * n +
                  B[0] * n * n * n * n;
    c4s.push_back(c4);
    c4max = max(c4max, c4);
  }
  // K^4 >= alpha c4max 2^(m+2)
  long K = 4;
  if (sgn(c4max) > 0) {
    Rational need = alpha * c4max * pow2(m + 2);
    Integer num;
    mpz_cdiv_q(num.get_mpz_t(), need.get_num().get_mpz_t(),
               need.get_den().get_mpz_t());
    Integer root;
    mpz_root(root.get_mpz_t(), num.get_mpz_t(), 4);
    if (root >= cell_cap)
      throw ToleranceNotMet("fourier quadrature: partition cap hit");
    K = std::max<long>(4, root.get_si() + 1);
  }

  int mnode = m + 5;
  int mtrig = m + 5 + static_cast<int>(ceil_log2(B[0] + 2));
  long nodes = 2 * K + 1;
  std::vector<Interval> hv;
  hv.reserve(nodes);
  std::vector<Rational> us;
  us.reserve(nodes);
  for (long j = 0; j < nodes; ++j) {
    Rational u = Rational(j - K) / K;  // -1 + j/K
    us.push_back(u);
    hv.push_back(H.eval(u, Rational(0), mnode));
  }

  std::vector<Interval> out;
  for (size_t jidx = 0; jidx < jobs.size(); ++jidx) {
    const auto& job = jobs[jidx];
    Rational slo(0), shi(0);
    for (long j = 0; j < nodes; ++j) {
      Interval trig;
      if (job.n == 0) {
        trig = Interval(job.kind == TrigKind::Cos ? Rational(1) : Rational(0));
      } else {
        Rational arg = job.n * us[j];
        trig = job.kind == TrigKind::Sin ? sin_pi(arg, mtrig) : cos_pi(arg, mtrig);
      }
      Interval v = hv[j] * trig;
      long w = (j == 0 || j == nodes - 1) ? 1 : (j % 2 == 1 ? 4 : 2);
      slo += w * v.lo;
      shi += w * v.hi;
    }
    Interval sum(slo / (3 * K), shi / (3 * K));
    Rational err = alpha * c4s[jidx] / (Rational(K) * K * K * K);
    out.push_back(widen(sum, err));
  }
  return out;
}

constexpr long kCellCap = 1L << 20;

}  // namespace

PiFn series_partial_fn(const TrigSeries& S) {
  PiFn f;
  f.eval = [S](const Rational& u, const Rational& r, int m) {
    return eval_partial_at(S, u, r, m);
  };
  f.deriv_bounds = partial_deriv_bounds(S);
  return f;
}

PiFn series_smooth_fn(const TrigSeries& S) {
  PiFn f;
  f.eval = [S](const Rational& u, const Rational& r, int m) {
    return smooth_eval_at(S, u, r, m);
  };
  f.deriv_bounds = smooth_deriv_bounds(S);
  return f;
}

PiFn series_smooth_tail_fn(const TrigSeries& S, int tailM, const Rational& tailB) {
  if (tailM < 2) throw std::invalid_argument("tail mode: need M >= 2");
  if (sgn(tailB) < 0) throw std::invalid_argument("tail mode: B < 0");
  Rational slack = tailB / (tailM - 1);
  PiFn f;
  f.eval = [S, slack](const Rational& u, const Rational& r, int m) {
    return widen(smooth_eval_at(S, u, r, m), slack);
  };
  // The tail spoils the derivative bounds; no modulus is exposed.
  return f;
}

PiFn x_squared_fn() {
  PiFn f;
  f.eval = [](const Rational& u, const Rational& r, int m) {
    for (int mm = m + 2;; mm += 8) {
      Interval v = point_sq(u, r, mm);
      if (v.width() < pow2(-m)) return v;
    }
  };
  f.deriv_bounds = {kPiHi * kPiHi, 2 * kPiHi, Rational(2), Rational(0),
                    Rational(0)};
  return f;
}

std::pair<Interval, Interval> trig_enclosure(long n, const PiScaled& x, int m) {
  if (n < 0) throw std::invalid_argument("trig_enclosure: n < 0");
  Rational arg = n * x.u;
  return {sin_pi(arg, m), cos_pi(arg, m)};
}

Interval eval_partial(const TrigSeries& S, const PiScaled& x, int m) {
  return eval_partial_at(S, x.u, Rational(0), m);
}

Interval smooth_eval(const TrigSeries& S, const PiScaled& x, int m) {
  return smooth_eval_at(S, x.u, Rational(0), m);
}

Interval smooth_eval_tail(const TrigSeries& S, const PiScaled& x, int m, int tailM,
                          const Rational& tailB) {
  return series_smooth_tail_fn(S, tailM, tailB).eval(x.u, Rational(0), m);
}

Interval symmetric_quotient(const PiFn& H, const PiScaled& x, const Rational& h,
                            int order, int m) {
  if (sgn(h) <= 0) throw std::invalid_argument("symmetric_quotient: h <= 0");
  if (order != 1 && order != 2)
    throw std::invalid_argument("symmetric_quotient: order must be 1 or 2");
  if (!step_fits(x.u, h))
    throw DomainExceeded("symmetric_quotient: x +- h leaves [-pi, pi]");
  long hbits = std::max(0L, ceil_log2(Rational(1) / h));
  int mm = m + 3 + static_cast<int>(order * hbits);
  Interval num = H.eval(x.u, h, mm) + H.eval(x.u, -h, mm) -
                 2 * H.eval(x.u, Rational(0), mm);
  Rational denom = order == 2 ? h * h : h;
  return num / denom;
}

ProbeReport d2_probe(const TrigSeries& S, const PiScaled& x, const Rational& tol,
                     int steps) {
  return probe(S, x, tol, steps, 2);
}

ProbeReport d1_probe(const TrigSeries& S, const PiScaled& x, const Rational& tol,
                     int steps) {
  return probe(S, x, tol, steps, 1);
}

Interval fourier_coefficient(const PiFn& H, long n, TrigKind kind, int m) {
  if (n < 0 || (n == 0 && kind == TrigKind::Sin))
    throw std::invalid_argument("fourier_coefficient: bad frequency");
  return simpson_batch(H, {{n, kind}}, m, kCellCap)[0];
}

IntervalSeries recover_coefficients(const TrigSeries& S, const Rational& tol,
                                    int nmax) {
  if (sgn(tol) <= 0) throw std::invalid_argument("recover: tol <= 0");
  int N = nmax < 0 ? S.order() : nmax;
  PiFn G = series_smooth_fn(S);

  int ptol = static_cast<int>(precision_for_gap(tol));
  int mq = ptol + 5 + 2 * static_cast<int>(ceil_log2(Rational(N + 2)));
  std::vector<QuadJob> jobs;
  jobs.push_back({0, TrigKind::Cos});
  for (int n = 1; n <= N; ++n) {
    jobs.push_back({n, TrigKind::Sin});
    jobs.push_back({n, TrigKind::Cos});
  }
  std::vector<Interval> cs = simpson_batch(G, jobs, mq, kCellCap);

  // (1/pi) Int G = b0 pi^2 / 6, so b0 = 6 c0 / pi^2.
  Interval pi2 = sq(pi_interval(mq + 6));
  IntervalSeries out;
  out.b0 = div(rat(6) * cs[0], pi2);
  for (int n = 1; n <= N; ++n) {
    Rational nn(static_cast<long>(n) * n);
    Interval a = -(nn * cs[2 * n - 1]);
    // b_n = (-1)^n b0 - n^2 c_cos
    Interval b = (n % 2 == 0 ? out.b0 : -out.b0) - nn * cs[2 * n];
    out.terms.emplace_back(a, b);
  }
  return out;
}

KroneckerSeries kronecker_fold(const TrigSeries& S, const PiScaled& x, int m) {
  KroneckerSeries K;
  K.constant = Interval(S.b0);
  for (int n = 1; n <= S.order(); ++n) {
    auto [sn, cn] = trig_enclosure(n, x, m + 2);
    K.cos_terms.push_back(rat(2) * (S.a(n) * sn + S.b(n) * cn));
  }
  return K;
}

CLResult cantor_lebesgue_witness(
    const std::vector<std::pair<Rational, Rational>>& family,
    const std::vector<std::uint64_t>& zeta, int p, int budget) {
  for (size_t i = 0; i + 1 < zeta.size(); ++i)
    if (zeta[i] >= zeta[i + 1])
      throw std::invalid_argument("cantor_lebesgue_witness: zeta not increasing");
  if (!zeta.empty() && zeta.back() >= family.size())
    throw std::invalid_argument("cantor_lebesgue_witness: zeta exceeds family");

  // Nested construction on pi-scaled coordinates over (-1, 1). Each
  // selected frequency contributes a closed subinterval of radius
  // 3/(10 m) around a peak or trough of cos(m pi t + pi v_m), on which
  // |cos| >= cos(3 pi/10) > 1/2. Selection takes the first frequency
  // with m L > 2 and afterwards requires m > 3 m_prev, which keeps a
  // full half-period spacing of admissible centers inside the interval.
  Rational clo(-1), chi(1);
  std::vector<std::uint64_t> selected;
  std::uint64_t prev = 0;
  int steps = 0;
  for (std::uint64_t zi : zeta) {
    if (steps >= budget) break;
    std::uint64_t mfreq = zi;
    if (mfreq == 0) continue;
    Rational L = chi - clo;
    bool admissible = selected.empty()
                          ? Rational(static_cast<long>(mfreq)) * L > 2
                          : mfreq > 3 * prev;
    if (!admissible) continue;
    Rational mr(static_cast<long>(mfreq));
    Rational radius = rat(3, 10) / mr;
    const Rational& v = family[static_cast<size_t>(zi)].second;
    // Centers solve m t + v in Z: t = (k - v)/m, spacing 1/m.
    Rational lo_c = clo + radius;
    Integer k;
    {
      Rational scaled = v + mr * lo_c;
      mpz_cdiv_q(k.get_mpz_t(), scaled.get_num().get_mpz_t(),
                 scaled.get_den().get_mpz_t());
    }
    Rational center = (Rational(k) - v) / mr;
    if (center > chi - radius)
      throw std::logic_error("cantor_lebesgue_witness: no admissible center");
    clo = center - radius;
    chi = center + radius;
    selected.push_back(mfreq);
    prev = mfreq;
    ++steps;
  }
  if (selected.empty())
    throw std::invalid_argument("cantor_lebesgue_witness: no admissible frequency");

  Rational xu = (clo + chi) / 2;
  Rational threshold = pow2(-p);
  for (std::uint64_t mfreq : selected) {
    const auto& [r, v] = family[static_cast<size_t>(mfreq)];
    if (r < threshold) {
      Interval c = abs(cos_pi_plus(Rational(static_cast<long>(mfreq)) * xu + v,
                                   Rational(0), 30));
      if (c.lo < rat(1, 2))
        throw std::logic_error("cantor_lebesgue_witness: amplitude check failed");
      CLWitness w;
      w.x = PiScaled(xu);
      w.selected_index = mfreq;
      w.amplitude = c.lo;
      return CLResult{w, std::nullopt};
    }
  }
  return CLResult{std::nullopt, selected.back()};
}

}  // namespace exact

