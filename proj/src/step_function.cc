#include "cobound/step_function.h"

#include <algorithm>
#include <string>
#include <utility>

#include "cobound/errors.h"

namespace cobound {

namespace {

std::vector<Rational> MergeBreakpoints(std::span<const Rational> a,
                                       std::span<const Rational> b) {
  std::vector<Rational> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <typename Op>
StepFunction Pointwise(const StepFunction& a, const StepFunction& b, Op op) {
  std::vector<Rational> cuts = MergeBreakpoints(a.breakpoints(),
                                                b.breakpoints());
  std::vector<RationalVector> values;
  values.reserve(cuts.size() - 1);
  std::size_t ia = 0, ib = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    while (a.breakpoints()[ia + 1] <= cuts[i]) ++ia;
    while (b.breakpoints()[ib + 1] <= cuts[i]) ++ib;
    values.push_back(op(a.values()[ia], b.values()[ib]));
  }
  return StepFunction(std::move(cuts), std::move(values));
}

}  // namespace

StepFunction::StepFunction(std::vector<Rational> breakpoints,
                           std::vector<RationalVector> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty()) throw InvalidArgument("step function without cells");
  if (breakpoints_.size() != values_.size() + 1) {
    throw InvalidArgument("step function needs one more breakpoint (" +
                          std::to_string(breakpoints_.size()) +
                          ") than values (" + std::to_string(values_.size()) +
                          ")");
  }
  if (breakpoints_.front() != Rational(0) ||
      breakpoints_.back() != Rational(1)) {
    throw InvalidArgument("step function breakpoints must run from 0 to 1");
  }
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i] < breakpoints_[i + 1])) {
      throw InvalidArgument("breakpoints not strictly increasing at " +
                            breakpoints_[i].str());
    }
  }
  CommonDimension(values_);
}

StepFunction StepFunction::EqualIntervals(std::vector<RationalVector> values) {
  const std::size_t n = values.size();
  if (n == 0) throw InvalidArgument("step function without cells");
  std::vector<Rational> bps;
  bps.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) bps.emplace_back(k, n);
  return StepFunction(std::move(bps), std::move(values));
}

StepFunction StepFunction::Constant(RationalVector value) {
  return StepFunction({Rational(0), Rational(1)}, {std::move(value)});
}

std::size_t StepFunction::CellIndex(const Rational& t) const {
  if (t.sign() < 0 || t >= Rational(1)) {
    throw InvalidArgument("point " + t.str() + " outside [0,1)");
  }
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

bool StepFunction::IsBreakpoint(const Rational& t) const {
  return std::binary_search(breakpoints_.begin(), breakpoints_.end() - 1, t);
}

RationalVector StepFunction::Mean() const {
  RationalVector m = RationalVector::Zero(dim());
  for (std::size_t i = 0; i < size(); ++i) {
    m += values_[i] * cell(i).length();
  }
  return m;
}

Magnitude StepFunction::SupNorm(NormKind kind) const {
  return MaxNorm(values_, kind);
}

std::optional<std::size_t> StepFunction::EqualIntervalCount() const {
  const std::size_t n = size();
  for (std::size_t k = 0; k <= n; ++k) {
    if (breakpoints_[k] != Rational(k, n)) return std::nullopt;
  }
  return n;
}

StepFunction StepFunction::Refine(std::span<const Rational> points) const {
  std::vector<Rational> extra;
  for (const auto& p : points) {
    if (p.sign() > 0 && p < Rational(1)) extra.push_back(p);
  }
  std::sort(extra.begin(), extra.end());
  std::vector<Rational> cuts = MergeBreakpoints(breakpoints_, extra);
  std::vector<RationalVector> values;
  values.reserve(cuts.size() - 1);
  std::size_t j = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    while (breakpoints_[j + 1] <= cuts[i]) ++j;
    values.push_back(values_[j]);
  }
  return StepFunction(std::move(cuts), std::move(values));
}

StepFunction Compose(const StepFunction& f, const IntervalExchange& T) {
  std::vector<Rational> cuts;
  std::vector<RationalVector> values;
  const auto fb = f.breakpoints();
  for (const auto& p : T.pieces()) {
    const Rational img_lo = p.lo + p.shift;
    const Rational img_hi = p.hi + p.shift;
    std::vector<Rational> local{img_lo};
    auto it = std::upper_bound(fb.begin(), fb.end(), img_lo);
    for (; it != fb.end() && *it < img_hi; ++it) local.push_back(*it);
    local.push_back(img_hi);
    for (std::size_t i = 0; i + 1 < local.size(); ++i) {
      cuts.push_back(local[i] - p.shift);
      values.push_back(f.At(local[i]));
    }
  }
  cuts.push_back(Rational(1));
  return StepFunction(std::move(cuts), std::move(values));
}

StepFunction Add(const StepFunction& a, const StepFunction& b) {
  return Pointwise(a, b, [](const RationalVector& x, const RationalVector& y) {
    return x + y;
  });
}

StepFunction Subtract(const StepFunction& a, const StepFunction& b) {
  return Pointwise(a, b, [](const RationalVector& x, const RationalVector& y) {
    return x - y;
  });
}

Magnitude SupNormOver(const StepFunction& f, std::span<const Interval> region,
                      NormKind kind) {
  Magnitude best;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Interval c = f.cell(i);
    const bool meets = std::any_of(
        region.begin(), region.end(), [&](const Interval& r) {
          return std::max(r.lo, c.lo) < std::min(r.hi, c.hi);
        });
    if (!meets) continue;
    Magnitude n = Norm(f.values()[i], kind);
    if (n > best) best = std::move(n);
  }
  return best;
}

void DiscreteFunction::Validate() const {
  if (values.empty()) throw InvalidArgument("discrete function with n = 0");
  CommonDimension(values);
}

}  // namespace cobound
