#pragma once

// Helpers shared by the test binaries. The oracles here are deliberately
// naive re-implementations that do not call into the library's own norm or
// prefix-sum code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cobound/norm.h"
#include "cobound/rational.h"
#include "cobound/vector.h"

namespace support {

using cobound::NormKind;
using cobound::Rational;
using cobound::RationalVector;

inline Rational Q(long p, long q = 1) { return Rational(p, q); }

inline RationalVector Vec(std::initializer_list<Rational> xs) {
  return RationalVector(std::vector<Rational>(xs));
}

// Uniform multiple of 1/den in [−1, 1].
inline Rational RandomEntry(std::mt19937_64& rng, long den) {
  const long span = 2 * den + 1;
  return Rational(static_cast<long>(rng() % span) - den, den);
}

inline RationalVector RandomVector(std::mt19937_64& rng, int d, long den) {
  std::vector<Rational> e(d);
  for (auto& x : e) x = RandomEntry(rng, den);
  return RationalVector(std::move(e));
}

// n vectors in dimension d summing to zero, each with L∞ norm at most 1.
inline std::vector<RationalVector> RandomZeroSum(std::mt19937_64& rng, int n,
                                                 int d, long den) {
  std::vector<RationalVector> vs;
  for (;;) {
    vs.clear();
    RationalVector total = RationalVector::Zero(d);
    for (int i = 0; i + 1 < n; ++i) {
      vs.push_back(RandomVector(rng, d, den));
      total += vs.back();
    }
    vs.push_back(-total);
    bool small = true;
    for (const auto& x : vs.back().entries()) small = small && x.abs() <= Q(1);
    if (small) return vs;
  }
}

// ‖v‖² computed from scratch.
inline Rational NormSq(const RationalVector& v, NormKind kind) {
  Rational acc(0);
  switch (kind) {
    case NormKind::kL1:
      for (const auto& x : v.entries()) acc += x.abs();
      return acc * acc;
    case NormKind::kL2:
      for (const auto& x : v.entries()) acc += x * x;
      return acc;
    case NormKind::kLinf:
      for (const auto& x : v.entries()) acc = std::max(acc, x.abs());
      return acc * acc;
  }
  return acc;
}

inline Rational MaxNormSq(const std::vector<RationalVector>& vs,
                          NormKind kind) {
  Rational m(0);
  for (const auto& v : vs) m = std::max(m, NormSq(v, kind));
  return m;
}

inline Rational MaxPrefixSq(const std::vector<RationalVector>& vs,
                            const std::vector<int>& perm, NormKind kind) {
  RationalVector acc = RationalVector::Zero(vs.front().dim());
  Rational m(0);
  for (int i : perm) {
    acc += vs[i];
    m = std::max(m, NormSq(acc, kind));
  }
  return m;
}

// min over all n! orders of the max prefix norm², by plain enumeration.
inline Rational BruteSteinitzSq(const std::vector<RationalVector>& vs,
                                NormKind kind) {
  std::vector<int> perm(vs.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational best = MaxPrefixSq(vs, perm, kind);
  while (std::next_permutation(perm.begin(), perm.end())) {
    best = std::min(best, MaxPrefixSq(vs, perm, kind));
  }
  return best;
}

inline bool IsPermutation(const std::vector<int>& p) {
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) return false;
  }
  return true;
}

inline constexpr NormKind kAllNorms[] = {NormKind::kL1, NormKind::kL2,
                                         NormKind::kLinf};

}  // namespace support
