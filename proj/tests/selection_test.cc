#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cobound/errors.h"
#include "cobound/selection.h"
#include "support.h"

namespace cobound {
namespace {

using support::Q;
using support::Vec;
using Sets = std::vector<std::vector<RationalVector>>;

// Random sets whose convex hull contains 0: a few random points plus the
// negative of their (positive-weight) average.
std::vector<RationalVector> RandomBalancedSet(std::mt19937_64& rng, int size,
                                              int d) {
  std::vector<RationalVector> s;
  RationalVector total = RationalVector::Zero(d);
  for (int i = 0; i + 1 < size; ++i) {
    s.push_back(support::RandomVector(rng, d, 4));
    total += s.back();
  }
  s.push_back(-total / Rational(std::max(1, size - 1)));
  std::shuffle(s.begin(), s.end(), rng);
  return s;
}

Magnitude MaxSetNorm(const Sets& sets, NormKind kind) {
  Magnitude m;
  for (const auto& s : sets) m = std::max(m, MaxNorm(s, kind));
  return m;
}

Rational PrefixSq(const Sets& sets, const std::vector<int>& choice,
                  NormKind kind) {
  RationalVector acc = RationalVector::Zero(sets.front().front().dim());
  Rational m(0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    acc += sets[i][choice[i]];
    m = std::max(m, support::NormSq(acc, kind));
  }
  return m;
}

TEST(BgSelect, AllZeroSets) {
  const Sets sets(4, {Vec({Q(0), Q(0)})});
  const auto r = BgSelect(sets, NormKind::kL2);
  EXPECT_EQ(r.choice, std::vector<int>(4, 0));
  EXPECT_TRUE(r.achieved_bound.is_zero());
}

TEST(BgSelect, SignsAlternate) {
  const Sets sets(6, {Vec({Q(1)}), Vec({Q(-1)})});
  const auto r = BgSelect(sets, NormKind::kL1);
  EXPECT_LE(r.achieved_bound, Magnitude::FromValue(Q(1)));
  RationalVector acc = RationalVector::Zero(1);
  for (const auto& c : r.chosen) {
    acc += c;
    EXPECT_LE(acc[0].abs(), Q(1));
  }
}

TEST(BgSelect, Triple120Sets) {
  const Rational s(866025, 1000000);
  const std::vector<RationalVector> tri{Vec({Q(1), Q(0)}), Vec({Q(-1, 2), s}),
                                        Vec({Q(-1, 2), -s})};
  const Sets sets(5, tri);
  const auto r = BgSelect(sets, NormKind::kL2);
  EXPECT_TRUE(Within(r.achieved_bound, Q(4), MaxSetNorm(sets, NormKind::kL2)));
  // Exhaustive feasibility over 3⁵ selections.
  EXPECT_LE(SelectionOracleReference(sets, NormKind::kL2).optimal_bound,
            r.achieved_bound);
}

TEST(BgSelect, RandomSetsWithinTwiceDimension) {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = 1 + trial % 3;
    const int n = 1 + static_cast<int>(rng() % 12);
    Sets sets;
    for (int i = 0; i < n; ++i) {
      sets.push_back(RandomBalancedSet(rng, 2 + static_cast<int>(rng() % 4), d));
    }
    for (NormKind kind : support::kAllNorms) {
      const auto r = BgSelect(sets, kind);
      ASSERT_EQ(r.choice.size(), sets.size());
      const Rational got = PrefixSq(sets, r.choice, kind);
      EXPECT_EQ(r.achieved_bound.squared(), got);
      EXPECT_LE(got, Rational(4 * d * d) * MaxSetNorm(sets, kind).squared());
    }
  }
}

TEST(BgSelect, RejectsSetsMissingTheOrigin) {
  const Sets bad{{Vec({Q(1), Q(0)}), Vec({Q(1), Q(1)})}};
  EXPECT_THROW(BgSelect(bad, NormKind::kL2), ConvexHullViolation);
  const Sets empty{{}};
  EXPECT_THROW(BgSelect(empty, NormKind::kL2), EmptyInput);
}

TEST(SelectionOracle, MatchesReference) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 30; ++trial) {
    Sets sets;
    const int n = 1 + trial % 6;
    for (int i = 0; i < n; ++i) sets.push_back(RandomBalancedSet(rng, 3, 2));
    for (NormKind kind : support::kAllNorms) {
      const auto a = SelectionOracle(sets, kind);
      const auto b = SelectionOracleReference(sets, kind);
      EXPECT_EQ(a.optimal_bound, b.optimal_bound);
      EXPECT_EQ(a.witness, b.witness);
      EXPECT_EQ(PrefixSq(sets, a.witness, kind), a.optimal_bound.squared());
    }
  }
}

// ---------------------------------------------------------------------------

VectorMatrix RandomMatrix(std::mt19937_64& rng, int n, int m, int d,
                          NormKind kind, bool zero_rows) {
  std::vector<std::vector<RationalVector>> rows;
  for (int i = 0; i < n; ++i) {
    if (zero_rows && m > 1) {
      rows.push_back(support::RandomZeroSum(rng, m, d, 6));
    } else if (zero_rows) {
      rows.push_back({RationalVector::Zero(d)});
    } else {
      std::vector<RationalVector> row;
      for (int j = 0; j < m; ++j) row.push_back(support::RandomVector(rng, d, 6));
      rows.push_back(std::move(row));
    }
  }
  return VectorMatrix::FromRows(rows, kind);
}

// max_{k,j} ‖Σ_{i≤k} v_{i,π_i(j)} − x_k‖² recomputed from scratch.
Rational DeviationSq(const VectorMatrix& m,
                     const std::vector<std::vector<int>>& perms) {
  const int d = static_cast<int>(m.dim());
  Rational worst(0);
  RationalVector x = RationalVector::Zero(d);
  std::vector<RationalVector> thread(m.cols(), RationalVector::Zero(d));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) x += m.at(i, j) / Rational(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
      thread[j] += m.at(i, perms[i][j]);
      worst = std::max(worst, support::NormSq(thread[j] - x, m.norm()));
    }
  }
  return worst;
}

TEST(Kwapien, ConstantValues) {
  EXPECT_NEAR(KwapienConstant(1), 19.7304, 1e-4);
  EXPECT_NEAR(KwapienConstant(2), 78.9218, 1e-4);
}

TEST(Kwapien, CenteredHalfHasZeroRows) {
  std::mt19937_64 rng(203);
  const VectorMatrix m = RandomMatrix(rng, 4, 5, 2, NormKind::kL2, false);
  const VectorMatrix c = CenteredHalf(m);
  for (int i = 0; i < c.rows(); ++i) EXPECT_TRUE(c.RowSum(i).is_zero());
  // 2v' = v − row mean.
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      EXPECT_EQ(Q(2) * c.at(i, j), m.at(i, j) - m.RowSum(i) / Q(5));
    }
  }
}

TEST(KwapienScalar, TwoRowsOfSigns) {
  const VectorMatrix m = VectorMatrix::FromRows(
      {{Vec({Q(1)}), Vec({Q(-1)})}, {Vec({Q(1)}), Vec({Q(-1)})}},
      NormKind::kL1);
  const auto r = KwapienScalar(m);
  EXPECT_EQ(r.perms[0], (std::vector<int>{0, 1}));
  EXPECT_EQ(r.perms[1], (std::vector<int>{1, 0}));
  EXPECT_EQ(r.achieved_bound, Magnitude::FromValue(Q(1)));
}

TEST(KwapienScalar, ZeroRowsGiveIdentity) {
  const VectorMatrix m = VectorMatrix::FromRows(
      {{Vec({Q(0)}), Vec({Q(0)}), Vec({Q(0)})}}, NormKind::kL2);
  const auto r = KwapienScalar(m);
  EXPECT_EQ(r.perms[0], (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(r.achieved_bound.is_zero());
}

TEST(KwapienScalar, RandomWithinTwiceMax) {
  std::mt19937_64 rng(204);
  for (int trial = 0; trial < 60; ++trial) {
    const VectorMatrix m = RandomMatrix(rng, 1 + trial % 8, 1 + trial % 7, 1,
                                        NormKind::kL2, true);
    const auto r = KwapienScalar(m);
    const Rational dev = DeviationSq(m, r.perms);
    EXPECT_EQ(dev, r.achieved_bound.squared());
    EXPECT_LE(dev, Q(4) * m.MaxEntryNorm().squared());
  }
  const VectorMatrix bad =
      VectorMatrix::FromRows({{Vec({Q(1)}), Vec({Q(0)})}}, NormKind::kL2);
  EXPECT_THROW(KwapienScalar(bad), RowNotMeanZero);
}

TEST(KwapienSplit, WholeRowIsExact) {
  std::mt19937_64 rng(205);
  const VectorMatrix m = RandomMatrix(rng, 3, 4, 2, NormKind::kL2, true);
  const auto r = KwapienSplitZero(m, 4);
  for (const auto& s : r.subsets) EXPECT_EQ(s, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_TRUE(r.achieved_bound.is_zero());
}

TEST(KwapienSplit, ZeroRowsWithinFourDSquared) {
  std::mt19937_64 rng(206);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 3;
    const int cols = 2 + trial % 6;
    const VectorMatrix m =
        RandomMatrix(rng, 1 + trial % 7, cols, d, NormKind::kLinf, true);
    const int p = 1 + static_cast<int>(rng() % cols);
    const auto r = KwapienSplitZero(m, p);
    ASSERT_EQ(static_cast<int>(r.subsets.size()), m.rows());
    for (const auto& s : r.subsets) {
      EXPECT_EQ(static_cast<int>(s.size()), p);
      EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
      EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
    }
    EXPECT_EQ(r.achieved_bound, SplitDeviationZero(m, r.subsets));
    EXPECT_TRUE(Within(r.achieved_bound, Rational(4 * d * d), m.MaxEntryNorm()));
  }
}

TEST(KwapienSplit, GeneralWithinEightDSquared) {
  std::mt19937_64 rng(207);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + trial % 3;
    const int cols = 1 + trial % 6;
    const VectorMatrix m =
        RandomMatrix(rng, 1 + trial % 5, cols, d, NormKind::kL2, false);
    const int p = 1 + static_cast<int>(rng() % cols);
    const auto r = KwapienSplitGeneral(m, p);
    EXPECT_EQ(r.achieved_bound, SplitDeviationGeneral(m, r.subsets));
    EXPECT_TRUE(Within(r.achieved_bound, Rational(8 * d * d), m.MaxEntryNorm()));
  }
  std::mt19937_64 rng2(208);
  const VectorMatrix m = RandomMatrix(rng2, 2, 3, 1, NormKind::kL2, false);
  EXPECT_THROW(KwapienSplitGeneral(m, 0), InvalidArgument);
  EXPECT_THROW(KwapienSplitGeneral(m, 4), InvalidArgument);
}

TEST(KwapienSplit, SingleSignRowExhaustive) {
  // d=1, rows [1,−1], p=1: every singleton choice stays within 4·M.
  const VectorMatrix m = VectorMatrix::FromRows(
      {{Vec({Q(1)}), Vec({Q(-1)})}, {Vec({Q(1)}), Vec({Q(-1)})}},
      NormKind::kL2);
  const auto r = KwapienSplitZero(m, 1);
  EXPECT_LE(r.achieved_bound, Magnitude::FromValue(Q(4)));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      EXPECT_LE(SplitDeviationZero(m, {{a}, {b}}), Magnitude::FromValue(Q(4)));
    }
  }
}

TEST(KwapienPermutations, SingleColumnIsIdentity) {
  std::mt19937_64 rng(209);
  const VectorMatrix m = RandomMatrix(rng, 5, 1, 2, NormKind::kL2, false);
  const auto r = KwapienPermutations(m);
  for (const auto& p : r.perms) EXPECT_EQ(p, std::vector<int>{0});
  EXPECT_TRUE(r.achieved_bound.is_zero());
}

TEST(KwapienPermutations, EqualEntriesHaveNoDeviation) {
  const auto v = Vec({Q(1, 3), Q(-2)});
  const VectorMatrix m = VectorMatrix::FromRows(
      std::vector<std::vector<RationalVector>>(3, std::vector<RationalVector>(4, v)),
      NormKind::kL1);
  EXPECT_TRUE(KwapienPermutations(m).achieved_bound.is_zero());
}

TEST(KwapienPermutations, TwoColumnsZeroRows) {
  std::mt19937_64 rng(210);
  for (int trial = 0; trial < 20; ++trial) {
    const VectorMatrix m = RandomMatrix(rng, 1 + trial % 9, 2, 1, NormKind::kL2, true);
    const auto r = KwapienPermutations(m);
    EXPECT_TRUE(Within(r.achieved_bound, Q(4), m.MaxEntryNorm()));
  }
}

TEST(KwapienPermutations, RandomWithinConstant) {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 3;
    const VectorMatrix m = RandomMatrix(rng, 1 + trial % 10, 1 + trial % 11, d,
                                        support::kAllNorms[trial % 3], false);
    const auto r = KwapienPermutations(m);
    for (const auto& p : r.perms) EXPECT_TRUE(support::IsPermutation(p));
    const Rational dev = DeviationSq(m, r.perms);
    EXPECT_EQ(dev, r.achieved_bound.squared());
    EXPECT_LE(std::sqrt(dev.to_double()),
              KwapienConstant(d) * m.MaxEntryNorm().approx() + 1e-9);
  }
}

}  // namespace
}  // namespace cobound
