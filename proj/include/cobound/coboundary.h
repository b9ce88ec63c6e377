#pragma once

#include <span>
#include <vector>

#include "cobound/interval_exchange.h"
#include "cobound/norm.h"
#include "cobound/step_function.h"

namespace cobound {

struct DiscreteSolution {
  // sigma[i] is the image of point i; a single n-cycle.
  std::vector<int> sigma;
  DiscreteFunction g;
  Magnitude certified_bound;  // ‖g‖∞
};

// f = g∘σ − g on a finite set with counting measure. The order π comes from
// SteinitzRearrange of the values; σ(π(k)) = π(k+1) cyclically and
// g(π(k)) = Σ_{i<k} f(π(i)). Checks the residual and ‖g‖ ≤ d‖f‖ before
// returning. f ≡ 0 gives the cycle 0 → 1 → … → n−1 → 0.
// Throws NotMeanZero, InvalidArgument, BoundViolated.
DiscreteSolution SolveDiscrete(const DiscreteFunction& f, NormKind kind);

// max_i ‖f(i) − (g(σ(i)) − g(i))‖.
Magnitude DiscreteResidual(const DiscreteFunction& f, const DiscreteFunction& g,
                           std::span<const int> sigma, NormKind kind);

// True when sigma is a permutation consisting of one cycle.
bool IsSingleCycle(std::span<const int> sigma);

struct StepSolution {
  IntervalExchange T;
  StepFunction g;
  Magnitude certified_bound;
};

// Same construction for f constant on [k/n, (k+1)/n): T translates cell k
// onto cell σ(k). Throws UnequalIntervals, NotMeanZero, BoundViolated.
StepSolution SolveEqualIntervals(const StepFunction& f, NormKind kind);

// f − (g∘T − g) on the common refinement.
StepFunction Residual(const StepFunction& f, const StepFunction& g,
                      const IntervalExchange& T);
Magnitude VerifySolution(const StepFunction& f, const StepFunction& g,
                         const IntervalExchange& T, NormKind kind);

// [Σ_{j≤k} f(Tʲ(t))] for k = 0..k_max. Throws BreakpointHit when some Tʲ(t)
// is a breakpoint of f or a piece boundary of T.
std::vector<RationalVector> OrbitPartialSums(const StepFunction& f,
                                             const IntervalExchange& T,
                                             const Rational& t, int k_max);

// Entry k is max_{k' ≤ k} ess sup over X of ‖Σ_{j≤k'} f∘Tʲ‖, k = 0..k_max.
std::vector<Magnitude> BrowderSweep(const StepFunction& f,
                                    const IntervalExchange& T,
                                    std::span<const Interval> region,
                                    int k_max, NormKind kind);
// Last entry of BrowderSweep.
Magnitude VerifyBrowder(const StepFunction& f, const IntervalExchange& T,
                        std::span<const Interval> region, int k_max,
                        NormKind kind);

}  // namespace cobound
