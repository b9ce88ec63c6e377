#include <gtest/gtest.h>

#include <random>

#include "cobound/errors.h"
#include "cobound/oracle_search.h"
#include "cobound/steinitz.h"
#include "support.h"

namespace cobound {
namespace {

using support::Q;
using support::Vec;

// (1,0), (−½, ±0.866025) with the last vector nudged so the triple sums to 0.
std::vector<RationalVector> Triple120() {
  const Rational s(866025, 1000000);
  return {Vec({Q(1), Q(0)}), Vec({Q(-1, 2), s}), Vec({Q(-1, 2), -s})};
}

TEST(Steinitz, SingleZeroVector) {
  const std::vector<RationalVector> vs{Vec({Q(0)})};
  const auto r = SteinitzRearrange(vs, NormKind::kL2);
  EXPECT_EQ(r.permutation, std::vector<int>{0});
  EXPECT_TRUE(r.achieved_bound.is_zero());
}

TEST(Steinitz, EmptyInputThrows) {
  EXPECT_THROW(SteinitzRearrange({}, NormKind::kL2), EmptyInput);
  EXPECT_THROW(SteinitzOracle({}, NormKind::kL2), EmptyInput);
}

TEST(Steinitz, Triple120WithinTwiceMaxNorm) {
  const auto vs = Triple120();
  const auto r = SteinitzRearrange(vs, NormKind::kL2);
  EXPECT_TRUE(support::IsPermutation(r.permutation));
  EXPECT_TRUE(Within(r.achieved_bound, Q(2), MaxNorm(vs, NormKind::kL2)));
}

TEST(Steinitz, RandomFamiliesMeetDimensionBound) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = 1 + trial % 3;
    const int n = 1 + static_cast<int>(rng() % 25);
    std::vector<RationalVector> vs;
    for (int i = 0; i < n; ++i) vs.push_back(support::RandomVector(rng, d, 6));
    for (NormKind kind : support::kAllNorms) {
      const auto r = SteinitzRearrange(vs, kind);
      ASSERT_TRUE(support::IsPermutation(r.permutation));
      // Recompute the anchored deviation independently.
      RationalVector total = RationalVector::Zero(d);
      for (const auto& v : vs) total += v;
      RationalVector acc = RationalVector::Zero(d);
      Rational worst(0);
      for (int k = 1; k <= n; ++k) {
        acc += vs[r.permutation[k - 1]];
        const RationalVector dev = acc - Rational(k - d, n) * total;
        worst = std::max(worst, support::NormSq(dev, kind));
      }
      EXPECT_EQ(r.achieved_bound.squared(), worst);
      EXPECT_LE(worst, Rational(d * d) * support::MaxNormSq(vs, kind));
    }
  }
}

TEST(Steinitz, ZeroSumReducesToPrefixBound) {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 4;
    const auto vs = support::RandomZeroSum(rng, 2 + trial % 20, d, 8);
    const auto r = SteinitzRearrange(vs, NormKind::kL2);
    EXPECT_EQ(r.achieved_bound, AnchoredDeviation(vs, r.permutation, NormKind::kL2));
    EXPECT_LE(support::MaxPrefixSq(vs, r.permutation, NormKind::kL2),
              Rational(d * d) * support::MaxNormSq(vs, NormKind::kL2));
  }
}

TEST(Steinitz, ScaleInvariantOrder) {
  std::mt19937_64 rng(103);
  const auto vs = support::RandomZeroSum(rng, 9, 2, 5);
  std::vector<RationalVector> scaled;
  for (const auto& v : vs) scaled.push_back(v * Q(7, 3));
  EXPECT_EQ(SteinitzRearrange(vs, NormKind::kLinf).permutation,
            SteinitzRearrange(scaled, NormKind::kLinf).permutation);
}

TEST(SteinitzOracle, PlusMinusPair) {
  const auto v = Vec({Q(3), Q(-4)});
  const std::vector<RationalVector> vs{v, -v};
  const auto r = SteinitzOracle(vs, NormKind::kL2);
  EXPECT_EQ(r.optimal_bound, Magnitude::FromValue(Q(5)));
  EXPECT_EQ(r.witness, (std::vector<int>{0, 1}));
}

TEST(SteinitzOracle, Triple120IsNearOne) {
  const auto r = SteinitzOracle(Triple120(), NormKind::kL2);
  EXPECT_NEAR(r.optimal_bound.approx(), 1.0, 1e-3);
}

TEST(SteinitzOracle, AgreesWithBruteForce) {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 7;
    const auto vs = support::RandomZeroSum(rng, n, 1 + trial % 3, 4);
    for (NormKind kind : support::kAllNorms) {
      const auto fast = SteinitzOracle(vs, kind);
      const auto ref = SteinitzOracleReference(vs, kind);
      EXPECT_EQ(fast.optimal_bound.squared(), support::BruteSteinitzSq(vs, kind));
      EXPECT_EQ(fast.optimal_bound, ref.optimal_bound);
      EXPECT_EQ(fast.witness, ref.witness);
      EXPECT_EQ(support::MaxPrefixSq(vs, fast.witness, kind),
                fast.optimal_bound.squared());
    }
  }
}

TEST(SteinitzOracle, NeverAboveConstruction) {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2;
    const auto vs = support::RandomZeroSum(rng, 2 + trial % 7, d, 16);
    const auto opt = SteinitzOracle(vs, NormKind::kL2);
    const auto cons = SteinitzRearrange(vs, NormKind::kL2);
    EXPECT_LE(opt.optimal_bound,
              MaxPrefixNorm(vs, cons.permutation, NormKind::kL2));
    EXPECT_TRUE(Within(opt.optimal_bound, Q(d), MaxNorm(vs, NormKind::kL2)));
  }
}

TEST(SteinitzOracle, Contracts) {
  std::vector<RationalVector> not_zero{Vec({Q(1)}), Vec({Q(1)})};
  EXPECT_THROW(SteinitzOracle(not_zero, NormKind::kL2), NotMeanZero);
  std::vector<RationalVector> big(kMaxOracleSize + 1, Vec({Q(0)}));
  EXPECT_THROW(SteinitzOracle(big, NormKind::kL2), TooLarge);
}

TEST(OracleSearch, ZigZagFamilyIsUnitBoundedAndZeroSum) {
  for (int P = 3; P <= 5; ++P) {
    const auto vs = ZigZagFamily(P, Rational(1, 4 * P));
    RationalVector total = RationalVector::Zero(2);
    for (const auto& v : vs) {
      total += v;
      EXPECT_LE(support::NormSq(v, NormKind::kL2), Q(1));
    }
    EXPECT_TRUE(total.is_zero());
  }
}

TEST(OracleSearch, DeterministicPerSeed) {
  SearchConfig c;
  c.seed = 9;
  c.trials = 12;
  c.max_n = 6;
  const SearchReport a = OracleSearch(c);
  const SearchReport b = OracleSearch(c);
  EXPECT_EQ(a.running_max_sq, b.running_max_sq);
  EXPECT_EQ(a.best.vectors, b.best.vectors);
  for (std::size_t i = 1; i < a.running_max_sq.size(); ++i) {
    EXPECT_GE(a.running_max_sq[i], a.running_max_sq[i - 1]);
  }
  EXPECT_LE(a.best.ratio_sq, Q(5, 4));
}

}  // namespace
}  // namespace cobound
