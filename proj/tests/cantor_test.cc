#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cobound/cantor.h"
#include "cobound/coboundary.h"
#include "cobound/errors.h"
#include "support.h"

namespace cobound {
namespace {

using support::Q;
using support::Vec;

CantorStep RandomCantor(std::mt19937_64& rng, int q, int depth, int d) {
  const int cells = q << depth;
  CantorStep f{q, Rational(1), depth,
               cells == 1 ? std::vector<RationalVector>{RationalVector::Zero(d)}
                          : support::RandomZeroSum(rng, cells, d, 8)};
  return f;
}

std::vector<int> FullSchedule(int depth) {
  std::vector<int> s(depth + 1);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

TEST(Recode, FrozenValues) {
  EXPECT_EQ(RecodeAddress({1, 1}), 1);
  EXPECT_EQ(RecodeAddress({2, 1}), 2);
  EXPECT_EQ(RecodeAddress({2, 2}), 4);
}

TEST(Recode, Bijection) {
  for (int m = 0; m <= 8; ++m) {
    std::vector<bool> hit((1u << m) + 1, false);
    for (long code = 1; code <= (1L << m); ++code) {
      const auto digits = DecodeAddress(code, m);
      ASSERT_EQ(static_cast<int>(digits.size()), m);
      EXPECT_EQ(RecodeAddress(digits), code);
      hit[code] = true;
    }
    EXPECT_EQ(std::count(hit.begin() + 1, hit.end(), true), 1L << m);
  }
  EXPECT_THROW(RecodeAddress({3}), InvalidArgument);
  EXPECT_THROW(DecodeAddress(5, 2), InvalidArgument);
}

TEST(Labels, RoundTrip) {
  for (int q = 1; q <= 3; ++q) {
    for (int depth = 0; depth <= 4; ++depth) {
      for (std::size_t i = 0; i < static_cast<std::size_t>(q << depth); ++i) {
        EXPECT_EQ(LabelToIndex(IndexToLabel(i, q, depth), q), i);
      }
    }
  }
  EXPECT_EQ(LabelToIndex({2, {1, 2}}, 3), 5u);
}

TEST(CantorStep, MeasureAndIntegral) {
  CantorStep f{3, Q(3, 2), 2, std::vector<RationalVector>(12, Vec({Q(2)}))};
  EXPECT_EQ(f.CellMeasure(), Q(1, 8));
  EXPECT_EQ(f.Integral(), Vec({Q(3)}));
  CantorStep bad{2, Q(1), 1, std::vector<RationalVector>(3, Vec({Q(0)}))};
  EXPECT_THROW(bad.Validate(), InvalidArgument);
}

TEST(Coarsen, Levels) {
  std::mt19937_64 rng(401);
  const CantorStep f = RandomCantor(rng, 2, 2, 2);
  EXPECT_EQ(Coarsen(f, 2).values, f.values);
  const CantorStep one = Coarsen(f, 1);
  for (std::size_t c = 0; c < one.cells(); ++c) {
    EXPECT_EQ(one.values[c], (f.values[2 * c] + f.values[2 * c + 1]) / Q(2));
  }
  const RationalVector v = Vec({Q(5, 3)});
  const CantorStep pm{1, Q(1), 1, {v, -v}};
  EXPECT_TRUE(Coarsen(pm, 0).values.front().is_zero());
  EXPECT_THROW(Coarsen(f, 3), InvalidArgument);
}

TEST(Tower, ZeroFunction) {
  const CantorStep f{2, Q(1), 2, std::vector<RationalVector>(8, Vec({Q(0)}))};
  const TowerSolution t = BuildTower(f, FullSchedule(2), NormKind::kL2);
  for (const auto& level : t.levels) {
    for (const auto& g : level.g) EXPECT_TRUE(g.is_zero());
  }
  EXPECT_TRUE(IsSingleCycle(t.successor));
  const EmbeddedTower e = TowerToIntervalExchange(t, f);
  Rational total(0);
  for (const auto& p : e.T.pieces()) total += p.hi - p.lo;
  EXPECT_EQ(total, Q(1));
  EXPECT_TRUE(e.g.SupNorm(NormKind::kL2).is_zero());
}

TEST(Tower, DepthZeroSwapsBranches) {
  const RationalVector v = Vec({Q(1), Q(-2)});
  const CantorStep f{2, Q(1), 0, {v, -v}};
  const TowerSolution t = BuildTower(f, {0}, NormKind::kL2);
  EXPECT_EQ(t.successor, (std::vector<int>{1, 0}));
  EXPECT_TRUE(t.g.values[t.start_branch].is_zero());
  EXPECT_EQ(t.g.values[1 - t.start_branch], f.values[t.start_branch]);
  const TowerAudit a = AuditTower(f, t, NormKind::kL2);
  EXPECT_TRUE(a.conditions());
  EXPECT_TRUE(a.residual.is_zero());
}

TEST(Tower, DepthOneEmbedsInFourIntervals) {
  std::mt19937_64 rng(402);
  const CantorStep f = RandomCantor(rng, 2, 1, 1);
  const TowerSolution t = BuildTower(f, FullSchedule(1), NormKind::kL2);
  const EmbeddedTower e = TowerToIntervalExchange(t, f);
  EXPECT_EQ(e.f.EqualIntervalCount(), 4u);
  EXPECT_TRUE(VerifySolution(e.f, e.g, e.T, NormKind::kL2).is_zero());
}

TEST(Tower, RandomFunctionsPassAudit) {
  std::mt19937_64 rng(403);
  for (int trial = 0; trial < 24; ++trial) {
    const int q = 2 + trial % 2;
    const int depth = trial % 4;
    const int d = 1 + trial % 2;
    const NormKind kind = support::kAllNorms[trial % 3];
    const CantorStep f = RandomCantor(rng, q, depth, d);
    for (const auto& schedule : {FullSchedule(depth), ProofSchedule(f, kind)}) {
      const TowerSolution t = BuildTower(f, schedule, kind);
      const TowerAudit a = AuditTower(f, t, kind);
      EXPECT_TRUE(a.conditions());
      EXPECT_TRUE(a.residual.is_zero());
      // Independent residual on the cells.
      for (std::size_t c = 0; c < f.cells(); ++c) {
        EXPECT_EQ(f.values[c], t.g.values[t.successor[c]] - t.g.values[c]);
      }
      EXPECT_TRUE(IsSingleCycle(t.successor));
    }
  }
}

TEST(Tower, AuditCatchesTampering) {
  std::mt19937_64 rng(404);
  const CantorStep f = RandomCantor(rng, 2, 2, 1);
  TowerSolution t = BuildTower(f, FullSchedule(2), NormKind::kL2);
  t.g.values[3] += Vec({Q(1, 5)});
  EXPECT_FALSE(AuditTower(f, t, NormKind::kL2).residual.is_zero());
  TowerSolution u = BuildTower(f, FullSchedule(2), NormKind::kL2);
  std::swap(u.levels[1].cycle[0], u.levels[1].cycle[1]);
  EXPECT_FALSE(AuditTower(f, u, NormKind::kL2).conditions());
}

TEST(Tower, ScheduleContracts) {
  std::mt19937_64 rng(405);
  const CantorStep f = RandomCantor(rng, 2, 2, 1);
  EXPECT_THROW(BuildTower(f, {1, 2}, NormKind::kL2), InvalidArgument);
  EXPECT_THROW(BuildTower(f, {0, 2, 1}, NormKind::kL2), InvalidArgument);
  EXPECT_THROW(BuildTower(f, {0, 3}, NormKind::kL2), InvalidArgument);
  CantorStep biased = f;
  biased.values[0] += Vec({Q(1)});
  EXPECT_THROW(BuildTower(biased, {0}, NormKind::kL2), NotMeanZero);
  const auto s = ProofSchedule(f, NormKind::kL2);
  EXPECT_EQ(s.front(), 0);
  EXPECT_EQ(s.back(), 2);
}

}  // namespace
}  // namespace cobound
