#pragma once

#include <span>
#include <vector>

#include "cobound/norm.h"
#include "cobound/vector.h"

namespace cobound {

struct RearrangementResult {
  // permutation[k] is the input index placed at position k (0-based).
  std::vector<int> permutation;
  // max_k ‖Σ_{i≤k} x_{π(i)} − ((k−d)/n)·x‖, recomputed from `permutation`.
  Magnitude achieved_bound;
  // x = Σ x_i.
  RationalVector anchor;
};

// Grinberg–Sevast'yanov rearrangement. Keeps nested index sets B_k with
// weights λ ∈ [0,1]^{B_k}, Σλ = k−d and Σλ_i x_i = ((k−d)/n)·x; at each step
// the scaled-down weights are pushed to a vertex of that polytope by exact
// null-space moves and an index of weight 0 (highest first) takes position
// k. The result satisfies achieved_bound ≤ d·max‖x_i‖ for every norm, and
// this is checked before returning (BoundViolated otherwise).
//
// Throws EmptyInput for an empty family.
RearrangementResult SteinitzRearrange(std::span<const RationalVector> vectors,
                                      NormKind kind);

// max over k = 1..n of ‖Σ_{i≤k} x_{perm[i]} − ((k−d)/n)·x‖.
Magnitude AnchoredDeviation(std::span<const RationalVector> vectors,
                            std::span<const int> perm, NormKind kind);

// max over k = 1..n of ‖Σ_{i≤k} x_{perm[i]}‖.
Magnitude MaxPrefixNorm(std::span<const RationalVector> vectors,
                        std::span<const int> perm, NormKind kind);

inline constexpr int kMaxOracleSize = 12;

struct OracleResult {
  // min over permutations of the max prefix norm.
  Magnitude optimal_bound;
  // Lexicographically least permutation attaining it.
  std::vector<int> witness;
};

// Exact Steinitz optimum of a zero-sum family by branch and bound. The first
// position is searched in parallel; the witness is schedule independent.
// Throws NotMeanZero, EmptyInput, or TooLarge (n > kMaxOracleSize).
OracleResult SteinitzOracle(std::span<const RationalVector> vectors,
                            NormKind kind);

// Serial full enumeration over all n! orders; reference for SteinitzOracle.
OracleResult SteinitzOracleReference(std::span<const RationalVector> vectors,
                                     NormKind kind);

}  // namespace cobound
