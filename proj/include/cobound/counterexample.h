#pragma once

#include <cstdint>
#include <vector>

#include "cobound/rational.h"
#include "cobound/vector.h"

namespace cobound {

inline constexpr int kMaxSimplexExponent = 8;
// Largest d for which every multiset is enumerated.
inline constexpr int kMaxExhaustiveSimplexDim = 8;

// Vertices x_k = e_k − (1/d)·1 of the centred regular simplex, d = 2^n.
std::vector<RationalVector> SimplexVertices(int n);

// Multiplicities c_k (Σ c_k = d/2) of a multiset of vertices together with
// ‖Σ c_k x_k‖² in the Euclidean norm.
struct HalfSum {
  std::vector<int> counts;
  Rational norm_sq;
};

// min over all multisets of d/2 vertices; lexicographically least counts on
// ties. The search splits on the first two multiplicities in parallel.
// Throws DimensionTooLarge for d > 16.
HalfSum MinHalfSumExhaustive(int d);
// Serial enumeration; reference for the above.
HalfSum MinHalfSumExhaustiveReference(int d);

// ‖Σ c_k x_k‖² summed vertex by vertex in exact arithmetic.
Rational HalfSumNormSq(const std::vector<RationalVector>& vertices,
                       const std::vector<int>& counts);

struct SimplexReport {
  int n = 0;
  int d = 0;
  std::vector<RationalVector> vertices;
  Rational vertex_norm_sq;  // common ‖x_k‖², checked equal to (d−1)/d
  bool sums_to_zero = false;
  bool exhaustive = false;
  int samples = 0;          // random multisets tried when not exhaustive
  HalfSum minimum;          // exact minimum, or best found when sampled
  Rational threshold;       // d/8
  bool above_threshold = false;
};

// Checks ‖x_k‖² = (d−1)/d and Σ x_k = 0 exactly, then bounds the smallest
// half-sum: exhaustive for d ≤ kMaxExhaustiveSimplexDim, otherwise
// `samples` seeded random multisets plus the all-distinct subset.
// Throws DimensionTooLarge for n outside 1..kMaxSimplexExponent.
SimplexReport SimplexCounterexample(int n, std::uint64_t seed, int samples);

}  // namespace cobound
