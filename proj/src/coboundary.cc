#include "cobound/coboundary.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "cobound/errors.h"
#include "cobound/steinitz.h"

namespace cobound {

namespace {

void CheckMeanZero(const RationalVector& total, const char* what) {
  if (!total.is_zero()) {
    std::ostringstream os;
    os << what << " is " << total << ", not 0";
    throw NotMeanZero(os.str());
  }
}

}  // namespace

bool IsSingleCycle(std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  int at = 0;
  for (int step = 0; step < n; ++step) {
    if (at < 0 || at >= n || seen[at]) return false;
    seen[at] = true;
    at = sigma[at];
  }
  return at == 0;
}

Magnitude DiscreteResidual(const DiscreteFunction& f, const DiscreteFunction& g,
                           std::span<const int> sigma, NormKind kind) {
  Magnitude worst;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const RationalVector r =
        f.values[i] - (g.values[sigma[i]] - g.values[i]);
    worst = std::max(worst, Norm(r, kind));
  }
  return worst;
}

DiscreteSolution SolveDiscrete(const DiscreteFunction& f, NormKind kind) {
  f.Validate();
  CheckMeanZero(f.Total(), "sum of f");
  const int n = static_cast<int>(f.size());
  const std::size_t d = f.dim();

  std::vector<int> order(n);
  bool all_zero = std::all_of(f.values.begin(), f.values.end(),
                              [](const RationalVector& v) { return v.is_zero(); });
  if (all_zero) {
    for (int i = 0; i < n; ++i) order[i] = i;
  } else {
    order = SteinitzRearrange(f.values, kind).permutation;
  }

  DiscreteSolution sol;
  sol.sigma.assign(n, 0);
  sol.g.values.assign(n, RationalVector::Zero(d));
  RationalVector acc = RationalVector::Zero(d);
  for (int k = 0; k < n; ++k) {
    sol.sigma[order[k]] = order[(k + 1) % n];
    sol.g.values[order[k]] = acc;
    acc += f.values[order[k]];
  }
  sol.certified_bound = sol.g.SupNorm(kind);

  if (!IsSingleCycle(sol.sigma)) {
    throw BoundViolated("discrete solve: sigma is not a single cycle");
  }
  if (!DiscreteResidual(f, sol.g, sol.sigma, kind).is_zero()) {
    throw BoundViolated("discrete solve: nonzero residual");
  }
  const Magnitude fn = f.SupNorm(kind);
  if (!Within(sol.certified_bound, Rational(static_cast<long>(d)), fn)) {
    throw BoundViolated("discrete solve: ||g|| = " +
                        FormatDecimal(sol.certified_bound.approx()) +
                        " exceeds d*||f|| = " +
                        FormatDecimal(static_cast<double>(d) * fn.approx()));
  }
  return sol;
}

StepSolution SolveEqualIntervals(const StepFunction& f, NormKind kind) {
  CheckMeanZero(f.Mean(), "mean of f");
  if (!f.EqualIntervalCount()) {
    throw UnequalIntervals("step solve: breakpoints are not k/n");
  }
  DiscreteFunction discrete{
      std::vector<RationalVector>(f.values().begin(), f.values().end())};
  DiscreteSolution d = SolveDiscrete(discrete, kind);

  StepSolution sol{IntervalExchange::FromCellPermutation(d.sigma),
                   StepFunction::EqualIntervals(std::move(d.g.values)),
                   d.certified_bound};
  if (!VerifySolution(f, sol.g, sol.T, kind).is_zero()) {
    throw BoundViolated("step solve: nonzero residual");
  }
  return sol;
}

StepFunction Residual(const StepFunction& f, const StepFunction& g,
                      const IntervalExchange& T) {
  return Subtract(f, Subtract(Compose(g, T), g));
}

Magnitude VerifySolution(const StepFunction& f, const StepFunction& g,
                         const IntervalExchange& T, NormKind kind) {
  return Residual(f, g, T).SupNorm(kind);
}

std::vector<RationalVector> OrbitPartialSums(const StepFunction& f,
                                             const IntervalExchange& T,
                                             const Rational& t, int k_max) {
  if (t < Rational(0) || t >= Rational(1)) {
    throw InvalidArgument("orbit: t = " + t.str() + " outside [0,1)");
  }
  if (k_max < 0) throw InvalidArgument("orbit: k_max < 0");
  std::vector<RationalVector> sums;
  sums.reserve(k_max + 1);
  RationalVector acc = RationalVector::Zero(f.dim());
  Rational s = t;
  for (int j = 0; j <= k_max; ++j) {
    if (f.IsBreakpoint(s) || T.IsBoundary(s)) {
      throw BreakpointHit("orbit: T^" + std::to_string(j) + "(t) = " +
                          s.str() + " is a partition boundary");
    }
    acc += f.At(s);
    sums.push_back(acc);
    s = T.Apply(s);
  }
  return sums;
}

std::vector<Magnitude> BrowderSweep(const StepFunction& f,
                                    const IntervalExchange& T,
                                    std::span<const Interval> region,
                                    int k_max, NormKind kind) {
  if (k_max < 0) throw InvalidArgument("browder: k_max < 0");
  std::vector<Magnitude> sweep;
  sweep.reserve(k_max + 1);
  // S_k = f + S_{k−1}∘T = Σ_{j≤k} f∘Tʲ.
  StepFunction s = f;
  Magnitude running = SupNormOver(s, region, kind);
  sweep.push_back(running);
  for (int k = 1; k <= k_max; ++k) {
    s = Add(f, Compose(s, T));
    running = std::max(running, SupNormOver(s, region, kind));
    sweep.push_back(running);
  }
  return sweep;
}

Magnitude VerifyBrowder(const StepFunction& f, const IntervalExchange& T,
                        std::span<const Interval> region, int k_max,
                        NormKind kind) {
  return BrowderSweep(f, T, region, k_max, kind).back();
}

}  // namespace cobound
