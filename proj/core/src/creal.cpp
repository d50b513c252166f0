#include "exact/creal.hpp"

#include "exact/trig.hpp"

namespace exact {

struct CReal::Impl {
  virtual ~Impl() = default;
  // Any enclosure of the value with width < 2^-m.
  virtual Interval compute(int m) const = 0;

  mutable std::mutex mu;
  mutable std::optional<Interval> best;

  Interval refined(int m) const {
    std::lock_guard<std::mutex> lock(mu);
    if (best && best->width() < pow2(-m)) return *best;
    Interval fresh = compute(m);
    if (best) fresh = intersect(fresh, *best);
    best = fresh;
    return fresh;
  }
};

namespace {

using Impl = CReal::Impl;

struct RationalImpl final : Impl {
  Rational q;
  explicit RationalImpl(Rational v) : q(std::move(v)) {}
  Interval compute(int) const override { return Interval(q); }
};

struct GeneratorImpl final : Impl {
  std::function<Interval(int)> gen;
  explicit GeneratorImpl(std::function<Interval(int)> g) : gen(std::move(g)) {}
  Interval compute(int m) const override { return gen(m); }
};

struct PiImpl final : Impl {
  Interval compute(int m) const override { return pi_interval(m); }
};

struct AddImpl final : Impl {
  CReal a, b;
  bool negate_b;
  AddImpl(CReal x, CReal y, bool neg) : a(std::move(x)), b(std::move(y)), negate_b(neg) {}
  Interval compute(int m) const override {
    Interval ia = a.approx(m + 1), ib = b.approx(m + 1);
    return negate_b ? ia - ib : ia + ib;
  }
};

struct MulImpl final : Impl {
  CReal a, b;
  MulImpl(CReal x, CReal y) : a(std::move(x)), b(std::move(y)) {}
  Interval compute(int m) const override {
    // width(xy) <= |x| w(y) + |y| w(x) + w(x)w(y); refine by magnitude.
    Interval ca = a.approx(0), cb = b.approx(0);
    long bits_a = ceil_log2(ca.mag() + 2);
    long bits_b = ceil_log2(cb.mag() + 2);
    for (int extra = 2;; extra += 4) {
      int ma = m + extra + static_cast<int>(bits_b);
      int mb = m + extra + static_cast<int>(bits_a);
      Interval r = a.approx(ma) * b.approx(mb);
      if (r.width() < pow2(-m)) return r;
    }
  }
};

struct ScaleImpl final : Impl {
  CReal a;
  Rational q;
  ScaleImpl(CReal x, Rational s) : a(std::move(x)), q(std::move(s)) {}
  Interval compute(int m) const override {
    if (sgn(q) == 0) return Interval(Rational(0));
    long bits = ceil_log2(abs(q));
    int ma = m + 1 + static_cast<int>(bits > 0 ? bits : 0);
    return q * a.approx(ma);
  }
};

struct LatticeImpl final : Impl {
  CReal a, b;
  bool is_sup;
  LatticeImpl(CReal x, CReal y, bool s) : a(std::move(x)), b(std::move(y)), is_sup(s) {}
  Interval compute(int m) const override {
    Interval ia = a.approx(m), ib = b.approx(m);
    if (is_sup) return {max(ia.lo, ib.lo), max(ia.hi, ib.hi)};
    return {min(ia.lo, ib.lo), min(ia.hi, ib.hi)};
  }
};

}  // namespace

CReal::CReal() : impl_(std::make_shared<RationalImpl>(Rational(0))) {}

Interval CReal::approx(int m) const { return impl_->refined(m < 0 ? 0 : m); }

CReal CReal::from_rational(const Rational& q) {
  return CReal(std::make_shared<RationalImpl>(q));
}

CReal CReal::pi() { return CReal(std::make_shared<PiImpl>()); }

CReal CReal::from_generator(std::function<Interval(int)> gen) {
  return CReal(std::make_shared<GeneratorImpl>(std::move(gen)));
}

CReal operator+(const CReal& a, const CReal& b) {
  return CReal(std::make_shared<AddImpl>(a, b, false));
}

CReal operator-(const CReal& a, const CReal& b) {
  return CReal(std::make_shared<AddImpl>(a, b, true));
}

CReal operator*(const CReal& a, const CReal& b) {
  return CReal(std::make_shared<MulImpl>(a, b));
}

CReal CReal::scale(const Rational& q) const {
  return CReal(std::make_shared<ScaleImpl>(*this, q));
}

CReal CReal::sup(const CReal& a, const CReal& b) {
  return CReal(std::make_shared<LatticeImpl>(a, b, true));
}

CReal CReal::inf(const CReal& a, const CReal& b) {
  return CReal(std::make_shared<LatticeImpl>(a, b, false));
}

OrderVerdict compare(const CReal& x, const CReal& y, int budget) {
  for (int n = 0; n <= budget; ++n) {
    Interval ix = x.approx(n), iy = y.approx(n);
    if (ix.hi < iy.lo) return {OrderVerdict::Kind::Less, n};
    if (iy.hi < ix.lo) return {OrderVerdict::Kind::Greater, n};
  }
  return {OrderVerdict::Kind::Undecided, budget};
}

SplitResult cotransitive_split(const CReal& x, const CReal& z, int witness,
                               const CReal& y) {
  if (witness < 0) throw InvalidWitness("cotransitive_split: negative witness");
  Interval ix = x.approx(witness), iz = z.approx(witness);
  if (!(ix.hi < iz.lo))
    throw InvalidWitness("cotransitive_split: x''(n) < z'(n) fails");
  Rational g = iz.lo - ix.hi;
  int m = static_cast<int>(precision_for_gap(g / 3));
  Interval iy = y.approx(m);
  if (iy.lo > ix.hi) {
    // x <= x''(n) < y'(m) <= y, so x < y with gap y'(m) - x''(n).
    return {SplitResult::Side::LeftGap, iy.lo - ix.hi, (ix.hi + iy.lo) / 2};
  }
  // y <= y''(m) < y'(m) + g/3 <= x''(n) + g/3 < z'(n), so y < z.
  Rational gap = iz.lo - iy.hi;
  return {SplitResult::Side::RightGap, gap, (iy.hi + iz.lo) / 2};
}

}  // namespace exact
