#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>

#include "exact/interval.hpp"

namespace exact {

// A constructive real: a stream of nested rational intervals with
// vanishing width. approx(m) returns an enclosure of width < 2^-m;
// enclosures returned by successive calls are nested regardless of the
// order of the requested precisions (each value memoizes its best
// enclosure so far and only ever shrinks it).
//
// Values are immutable and cheap to copy; the internal memo is guarded,
// so shared values may be refined from several threads.
class CReal {
 public:
  CReal();  // zero

  Interval approx(int m) const;

  static CReal from_rational(const Rational& q);
  static CReal pi();

  // A value given by an arbitrary nested-enclosure generator. gen(m) must
  // return an enclosure of the same point of width < 2^-m; generators do
  // not need to return nested intervals themselves (results are
  // intersected with the memo).
  static CReal from_generator(std::function<Interval(int)> gen);

  friend CReal operator+(const CReal& a, const CReal& b);
  friend CReal operator-(const CReal& a, const CReal& b);
  friend CReal operator*(const CReal& a, const CReal& b);
  CReal scale(const Rational& q) const;

  static CReal sup(const CReal& a, const CReal& b);
  static CReal inf(const CReal& a, const CReal& b);

  struct Impl;

 private:
  explicit CReal(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct OrderVerdict {
  enum class Kind { Less, Greater, Undecided };
  Kind kind;
  // Witnessing precision index for Less/Greater; the exhausted budget
  // for Undecided.
  int index;

  bool decided() const { return kind != Kind::Undecided; }
};

// Refines both streams through precision indices 0..budget and reports
// the first index witnessing an order. Verdicts are permanent: once some
// index separates the enclosures, every larger budget reproduces a
// verdict at an index no larger. Undecided makes no equality claim.
OrderVerdict compare(const CReal& x, const CReal& y, int budget);

struct InvalidWitness : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SplitResult {
  enum class Side { LeftGap, RightGap };
  Side side;
  // Certified positive rational gap: LeftGap bounds y - x from below,
  // RightGap bounds z - y.
  Rational gap;
  // A rational strictly between the separated pair.
  Rational between;
};

// Co-transitivity made computational: given a witness index n with
// x''(n) < z'(n), places any y on one side of the gap. Deterministic:
// refine y until its width is below a third of the witnessed gap, then
// test y's lower bound against x's upper bound.
SplitResult cotransitive_split(const CReal& x, const CReal& z, int witness,
                               const CReal& y);

}  // namespace exact
