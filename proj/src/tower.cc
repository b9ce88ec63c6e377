#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "cobound/cantor.h"
#include "cobound/errors.h"
#include "cobound/selection.h"
#include "cobound/steinitz.h"

namespace cobound {

namespace {

void CheckSchedule(const CantorStep& f, const std::vector<int>& schedule) {
  if (schedule.empty() || schedule.front() != 0) {
    throw InvalidArgument("tower: schedule must start at 0");
  }
  for (std::size_t k = 1; k < schedule.size(); ++k) {
    if (schedule[k] <= schedule[k - 1]) {
      throw InvalidArgument("tower: schedule must be strictly increasing");
    }
  }
  if (schedule.back() > f.depth) {
    throw InvalidArgument("tower: schedule exceeds depth " +
                          std::to_string(f.depth));
  }
}

// Order of a zero-sum family with bounded prefix sums; identity for zeros.
std::vector<int> SteinitzOrder(const std::vector<RationalVector>& vs,
                               NormKind kind) {
  return SteinitzRearrange(vs, kind).permutation;
}

// g along `cycle`: 0 on cycle[0], then running sums of h.
std::vector<RationalVector> PartialSums(const std::vector<int>& cycle,
                                        const std::vector<RationalVector>& h) {
  std::vector<RationalVector> g(h.size());
  RationalVector acc = RationalVector::Zero(h.front().dim());
  for (int c : cycle) {
    g[c] = acc;
    acc += h[c];
  }
  return g;
}

std::vector<int> SuccessorOf(const std::vector<int>& cycle) {
  std::vector<int> succ(cycle.size());
  for (std::size_t p = 0; p < cycle.size(); ++p) {
    succ[cycle[p]] = cycle[(p + 1) % cycle.size()];
  }
  return succ;
}

bool IsPermutationOf(const std::vector<int>& cycle, std::size_t cells) {
  if (cycle.size() != cells) return false;
  std::vector<bool> seen(cells, false);
  for (int c : cycle) {
    if (c < 0 || static_cast<std::size_t>(c) >= cells || seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

std::size_t CellsAt(const CantorStep& f, int depth) {
  return static_cast<std::size_t>(f.q) << depth;
}

}  // namespace

std::vector<int> ProofSchedule(const CantorStep& f, NormKind kind) {
  f.Validate();
  const double c_v = CascadeConstant(f.dim());
  const double diam = BranchDiameter(f, kind).approx();
  std::vector<int> schedule{0};
  for (int k = 1; schedule.back() < f.depth; ++k) {
    const double limit = std::ldexp(diam / c_v, -k - 2);
    int n = schedule.back() + 1;
    for (; n < f.depth; ++n) {
      const CantorStep fn = Lift(Coarsen(f, n), f.depth);
      Magnitude err;
      for (std::size_t c = 0; c < f.cells(); ++c) {
        err = std::max(err, Norm(fn.values[c] - f.values[c], kind));
      }
      if (err.approx() <= limit) break;
    }
    schedule.push_back(n);
  }
  return schedule;
}

TowerSolution BuildTower(const CantorStep& f, const std::vector<int>& schedule,
                         NormKind kind) {
  f.Validate();
  const RationalVector integral = f.Integral();
  if (!integral.is_zero()) {
    std::ostringstream os;
    os << "tower: integral of f is " << integral << ", not 0";
    throw NotMeanZero(os.str());
  }
  CheckSchedule(f, schedule);
  const long d = static_cast<long>(f.dim());
  const double c_v = CascadeConstant(f.dim());

  TowerSolution tower;
  tower.schedule = schedule;

  CantorStep previous = Coarsen(f, 0);
  {
    TowerLevel level;
    level.depth = 0;
    level.h = previous.values;
    level.cycle = SteinitzOrder(level.h, kind);
    level.g = PartialSums(level.cycle, level.h);
    level.h_norm = MaxNorm(level.h, kind);
    level.g_norm = MaxNorm(level.g, kind);
    if (!Within(level.g_norm, Rational(d), level.h_norm)) {
      throw BoundViolated("tower: level 0 exceeds d*||h_0||");
    }
    tower.levels.push_back(std::move(level));
  }

  for (std::size_t k = 1; k < schedule.size(); ++k) {
    const TowerLevel& parent = tower.levels.back();
    const CantorStep current = Coarsen(f, schedule[k]);
    const int rows = static_cast<int>(parent.cycle.size());
    const int m = 1 << (schedule[k] - parent.depth);

    TowerLevel level;
    level.depth = schedule[k];
    level.h.resize(current.cells());
    for (std::size_t c = 0; c < current.cells(); ++c) {
      level.h[c] = current.values[c] - previous.values[c / m];
    }

    // Row i is the i-th cell of the parent cycle, its entries the children.
    std::vector<RationalVector> entries;
    entries.reserve(level.h.size());
    for (int cell : parent.cycle) {
      for (int j = 0; j < m; ++j) {
        entries.push_back(level.h[static_cast<std::size_t>(cell) * m + j]);
      }
    }
    const VectorMatrix a(rows, m, std::move(entries), kind);
    const PermutationFamily family = KwapienPermutations(a);

    std::vector<RationalVector> thread_sums(m, RationalVector::Zero(f.dim()));
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < rows; ++i) thread_sums[j] += a.at(i, family.perms[i][j]);
    }
    const std::vector<int> stitch = SteinitzOrder(thread_sums, kind);

    level.cycle.reserve(current.cells());
    for (int p = 0; p < m; ++p) {
      for (int i = 0; i < rows; ++i) {
        level.cycle.push_back(parent.cycle[i] * m + family.perms[i][stitch[p]]);
      }
    }
    level.g = PartialSums(level.cycle, level.h);
    level.h_norm = MaxNorm(level.h, kind);
    level.g_norm = MaxNorm(level.g, kind);
    if (!WithinApprox(level.g_norm, c_v, level.h_norm)) {
      throw BoundViolated("tower: level " + std::to_string(k) + " has ||g|| = " +
                          FormatDecimal(level.g_norm.approx()) +
                          " above C_V*||h||");
    }
    tower.levels.push_back(std::move(level));
    previous = current;
  }

  const TowerLevel& last = tower.levels.back();
  const std::vector<int> coarse = SuccessorOf(last.cycle);
  const int spread = 1 << (f.depth - last.depth);
  tower.successor.resize(f.cells());
  for (std::size_t c = 0; c < f.cells(); ++c) {
    tower.successor[c] = coarse[c / spread] * spread + static_cast<int>(c % spread);
  }

  tower.g = CantorStep{f.q, f.r, f.depth,
                       std::vector<RationalVector>(f.cells(),
                                                   RationalVector::Zero(f.dim()))};
  for (const TowerLevel& level : tower.levels) {
    const CantorStep lifted =
        Lift(CantorStep{f.q, f.r, level.depth, level.g}, f.depth);
    for (std::size_t c = 0; c < f.cells(); ++c) tower.g.values[c] += lifted.values[c];
  }
  tower.start_branch = tower.levels.front().cycle.front();
  return tower;
}

TowerAudit AuditTower(const CantorStep& f, const TowerSolution& tower,
                      NormKind kind, double tolerance) {
  f.Validate();
  TowerAudit audit;
  const long d = static_cast<long>(f.dim());
  audit.c_v = CascadeConstant(f.dim());
  audit.a = BranchDiameterRatio(f, kind);
  audit.f_norm = f.SupNorm(kind);

  const auto& levels = tower.levels;
  audit.single_cycles = !levels.empty();
  audit.level_constant = !levels.empty();
  audit.level_coboundary = !levels.empty();
  audit.level_bounds = !levels.empty();
  for (std::size_t k = 0; k < levels.size(); ++k) {
    const TowerLevel& level = levels[k];
    const std::size_t cells = CellsAt(f, level.depth);
    if (!IsPermutationOf(level.cycle, cells)) {
      audit.single_cycles = false;
      audit.level_constant = audit.level_coboundary = audit.level_bounds = false;
      continue;
    }
    audit.level_constant &= level.g.size() == cells && level.h.size() == cells;
    if (level.g.size() != cells || level.h.size() != cells) continue;
    const std::vector<int> succ = SuccessorOf(level.cycle);
    for (std::size_t c = 0; c < cells; ++c) {
      audit.level_coboundary &= level.h[c] == level.g[succ[c]] - level.g[c];
    }
    const Magnitude g_norm = MaxNorm(level.g, kind);
    const Magnitude h_norm = MaxNorm(level.h, kind);
    audit.level_bounds &= k == 0 ? Within(g_norm, Rational(d), h_norm)
                                 : WithinApprox(g_norm, audit.c_v, h_norm,
                                                tolerance);
  }

  // (ii), including the final extension to f.depth.
  audit.refines = audit.single_cycles;
  auto check_refinement = [&](const std::vector<int>& coarse_succ,
                              const std::vector<int>& fine_succ, int spread) {
    for (std::size_t c = 0; c < fine_succ.size(); ++c) {
      if (fine_succ[c] / spread != coarse_succ[c / spread]) return false;
    }
    return true;
  };
  if (audit.refines) {
    for (std::size_t k = 1; k < levels.size(); ++k) {
      audit.refines &= check_refinement(
          SuccessorOf(levels[k - 1].cycle), SuccessorOf(levels[k].cycle),
          1 << (levels[k].depth - levels[k - 1].depth));
    }
    audit.refines &= tower.successor.size() == f.cells() &&
                     IsPermutationOf(tower.successor, f.cells()) &&
                     check_refinement(SuccessorOf(levels.back().cycle),
                                      tower.successor,
                                      1 << (f.depth - levels.back().depth));
  }

  // h_k = f_{n_k} − f_{n_{k−1}} and Σ h_k = f_{n_K}.
  audit.telescopes = audit.level_constant;
  if (audit.telescopes) {
    std::vector<RationalVector> total(f.cells(), RationalVector::Zero(f.dim()));
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const CantorStep fk = Coarsen(f, levels[k].depth);
      const CantorStep lifted =
          Lift(CantorStep{f.q, f.r, levels[k].depth, levels[k].h}, f.depth);
      if (k == 0) {
        audit.telescopes &= levels[0].h == fk.values;
      } else {
        const CantorStep fprev = Lift(Coarsen(f, levels[k - 1].depth),
                                      levels[k].depth);
        for (std::size_t c = 0; c < fk.cells(); ++c) {
          audit.telescopes &= levels[k].h[c] == fk.values[c] - fprev.values[c];
        }
      }
      for (std::size_t c = 0; c < f.cells(); ++c) total[c] += lifted.values[c];
    }
    const CantorStep top = Lift(Coarsen(f, levels.back().depth), f.depth);
    audit.telescopes &= total == top.values;
  }

  Magnitude residual;
  const bool usable = tower.g.values.size() == f.cells() &&
                      IsPermutationOf(tower.successor, f.cells());
  if (usable) {
    for (std::size_t c = 0; c < f.cells(); ++c) {
      const RationalVector r =
          f.values[c] -
          (tower.g.values[tower.successor[c]] - tower.g.values[c]);
      residual = std::max(residual, Norm(r, kind));
    }
    audit.g_norm = tower.g.SupNorm(kind);
    const std::size_t per_branch = f.cells() / static_cast<std::size_t>(f.q);
    const std::size_t lo = static_cast<std::size_t>(tower.start_branch) * per_branch;
    for (std::size_t c = lo; c < lo + per_branch && c < f.cells(); ++c) {
      audit.start_cell_norm =
          std::max(audit.start_cell_norm, Norm(tower.g.values[c], kind));
    }
  }
  audit.residual = residual;

  const double fn = audit.f_norm.approx();
  const double diam = BranchDiameter(f, kind).approx();
  audit.global_bound =
      usable && audit.g_norm.approx() <=
                    static_cast<double>(d) * fn + (1 + audit.c_v) * diam + tolerance;
  audit.start_cell_bound =
      usable && audit.start_cell_norm.approx() <= (1 + audit.c_v) * diam + tolerance;
  return audit;
}

}  // namespace cobound
