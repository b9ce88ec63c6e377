#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cobound/interval_exchange.h"
#include "cobound/norm.h"
#include "cobound/rational.h"
#include "cobound/vector.h"

namespace cobound {

// Vector-valued simple function on [0,1): value i holds on
// [breakpoints[i], breakpoints[i+1]). Adjacent equal values are kept as
// separate cells so that refinement is deterministic.
class StepFunction {
 public:
  // breakpoints: strictly increasing, 0 first, 1 last, one more entry than
  // values. Throws InvalidArgument otherwise.
  StepFunction(std::vector<Rational> breakpoints,
               std::vector<RationalVector> values);

  // n = values.size() cells of length 1/n.
  static StepFunction EqualIntervals(std::vector<RationalVector> values);
  static StepFunction Constant(RationalVector value);

  std::size_t size() const { return values_.size(); }
  std::size_t dim() const { return values_.front().dim(); }
  std::span<const Rational> breakpoints() const { return breakpoints_; }
  std::span<const RationalVector> values() const { return values_; }
  Interval cell(std::size_t i) const {
    return {breakpoints_[i], breakpoints_[i + 1]};
  }

  std::size_t CellIndex(const Rational& t) const;  // t in [0,1)
  const RationalVector& At(const Rational& t) const {
    return values_[CellIndex(t)];
  }
  // True for 0 and every interior breakpoint.
  bool IsBreakpoint(const Rational& t) const;

  // Σ length_i · value_i.
  RationalVector Mean() const;
  Magnitude SupNorm(NormKind kind) const;
  // n when the breakpoints are exactly k/n, k = 0..n.
  std::optional<std::size_t> EqualIntervalCount() const;

  // Same function on a finer partition containing `points`.
  StepFunction Refine(std::span<const Rational> points) const;

 private:
  std::vector<Rational> breakpoints_;
  std::vector<RationalVector> values_;
};

// h(t) = f(T(t)).
StepFunction Compose(const StepFunction& f, const IntervalExchange& T);

StepFunction Add(const StepFunction& a, const StepFunction& b);
StepFunction Subtract(const StepFunction& a, const StepFunction& b);

// Essential sup of ‖f‖ over the union of `region` (cells meeting the region
// in positive length). Zero when the region has measure zero.
Magnitude SupNormOver(const StepFunction& f, std::span<const Interval> region,
                      NormKind kind);

// Function on the finite set {0..n-1} with counting measure.
struct DiscreteFunction {
  std::vector<RationalVector> values;

  // Throws InvalidArgument on an empty or mixed-dimension value list.
  void Validate() const;
  std::size_t size() const { return values.size(); }
  std::size_t dim() const { return values.front().dim(); }
  RationalVector Total() const { return Sum(values, dim()); }
  Magnitude SupNorm(NormKind kind) const { return MaxNorm(values, kind); }
};

}  // namespace cobound
