#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cobound/norm.h"
#include "cobound/rational.h"
#include "cobound/vector.h"

namespace cobound {

// Seeded zero-sum families for oracle experiments. Entries are multiples of
// 1/16 in [−1, 1]; the last vector closes the sum.
std::vector<RationalVector> RandomZeroSumFamily(std::mt19937_64& rng, int n,
                                                int dim);

// Planar zig-zag: one vertical vector (0, 2Ph) followed by P copies of
// (c, −h) and P copies of (−c, −h), where (c, h) is the rational point of
// the unit circle with parameter t, so that c² + h² = 1. With t ≤ 1/(4P)
// every vector has norm at most 1.
std::vector<RationalVector> ZigZagFamily(int P, const Rational& t);

struct SearchConfig {
  std::uint64_t seed = 0;
  int dim = 2;
  int trials = 100;
  int max_n = 8;  // at most kMaxOracleSize
  NormKind kind = NormKind::kL2;
};

struct SearchRecord {
  int trial = 0;
  std::string family;  // "generic" or "zigzag"
  std::vector<RationalVector> vectors;
  Magnitude optimum;   // exact Steinitz optimum
  Magnitude max_norm;
  Rational ratio_sq;   // (optimum / max_norm)²
};

struct SearchReport {
  std::vector<Rational> running_max_sq;  // best ratio² after each trial
  SearchRecord best;
};

// Every fourth trial in the Euclidean plane draws a zig-zag family, the
// rest are RandomZeroSumFamily with n uniform in 2..max_n.
SearchReport OracleSearch(const SearchConfig& config);

}  // namespace cobound
