#pragma once

#include <cstddef>
#include <vector>

#include "cobound/interval_exchange.h"
#include "cobound/norm.h"
#include "cobound/rational.h"
#include "cobound/step_function.h"
#include "cobound/vector.h"

namespace cobound {

// Cylinder of C(q,r) = {1..q} × {1,2}^N over (branch; digits), 1-based.
struct CantorLabel {
  int branch = 1;
  std::vector<int> digits;

  int depth() const { return static_cast<int>(digits.size()); }
  friend bool operator==(const CantorLabel&, const CantorLabel&) = default;
};

// Position in the lexicographic order of depth-level cylinders (0-based;
// branch first, then digits with the first digit most significant).
std::size_t LabelToIndex(const CantorLabel& label, int q);
CantorLabel IndexToLabel(std::size_t index, int q, int depth);

// φ(i_1..i_m) = 1 + Σ_k 2^{k−1}(i_k − 1), a bijection {1,2}^m → 1..2^m.
long RecodeAddress(const std::vector<int>& digits);
std::vector<int> DecodeAddress(long code, int m);

// A function on C(q,r) constant on the cylinders of depth `depth`; values
// are in lexicographic cylinder order. Total measure is r.
struct CantorStep {
  int q = 1;
  Rational r{1};
  int depth = 0;
  std::vector<RationalVector> values;

  // Throws InvalidArgument on a malformed header or value count.
  void Validate() const;
  std::size_t cells() const { return values.size(); }
  std::size_t dim() const { return values.front().dim(); }
  // (r/q)·2^{−depth}.
  Rational CellMeasure() const;
  // Σ measure · value.
  RationalVector Integral() const;
  Magnitude SupNorm(NormKind kind) const { return MaxNorm(values, kind); }
};

// Depth-level conditional averages. Throws InvalidArgument if level is
// outside 0..f.depth.
CantorStep Coarsen(const CantorStep& f, int level);
// The same function written on the cylinders of a deeper level.
CantorStep Lift(const CantorStep& f, int depth);

// max over branches of the diameter of the value set on that branch.
Magnitude BranchDiameter(const CantorStep& f, NormKind kind);
// BranchDiameter / ‖f‖, the a of the tower bounds (0 for f ≡ 0).
double BranchDiameterRatio(const CantorStep& f, NormKind kind);

// 8d²/ln(1.5)·(d + 1).
double CascadeConstant(std::size_t dim);

struct TowerLevel {
  int depth = 0;
  // Depth-`depth` cells in the order T_k visits them; cycle[0] carries g = 0.
  std::vector<int> cycle;
  std::vector<RationalVector> h;  // by cell
  std::vector<RationalVector> g;  // by cell
  Magnitude h_norm;
  Magnitude g_norm;
};

struct TowerSolution {
  std::vector<int> schedule;
  std::vector<TowerLevel> levels;
  // T on the cells of f.depth: successor[c] = T(c). When the schedule stops
  // short of f.depth the last level is extended by keeping the suffix.
  std::vector<int> successor;
  CantorStep g;            // Σ_k g_k on the cells of f.depth
  int start_branch = 0;    // X_1, 0-based
};

// n_0 = 0 and then, for k = 1, 2, …, the smallest n > n_{k−1} with
// ‖f_n − f‖ ≤ 2^{−k−2}·C_V^{−1}·a·‖f‖, until n = f.depth.
std::vector<int> ProofSchedule(const CantorStep& f, NormKind kind);

// Finite-depth tower: level 0 orders the branches by SteinitzRearrange of
// the branch averages; level k+1 splits every level-k cell of the cycle
// into its children, picks Kwapień permutations for the rows h_{k+1} and
// stitches the threads with a Steinitz order of the thread sums. g_k is the
// sum of h_k along the cycle from its start cell.
// Throws NotMeanZero, InvalidArgument (bad schedule), BoundViolated.
TowerSolution BuildTower(const CantorStep& f, const std::vector<int>& schedule,
                         NormKind kind);

struct TowerAudit {
  bool single_cycles = false;     // (i)
  bool refines = false;           // (ii)
  bool level_bounds = false;      // (iii), level 0 against d
  bool level_constant = false;    // (iv)
  bool level_coboundary = false;  // (v)
  bool telescopes = false;        // Σ h_k = f_{n_K}
  Magnitude residual;             // ‖f − (g∘T − g)‖
  Magnitude f_norm;
  Magnitude g_norm;
  Magnitude start_cell_norm;      // ‖g|X_1‖
  double a = 0;
  double c_v = 0;
  bool global_bound = false;      // ‖g‖ ≤ (d + a(1+C_V))‖f‖
  bool start_cell_bound = false;  // ‖g|X_1‖ ≤ (1+C_V)a‖f‖

  bool conditions() const {
    return single_cycles && refines && level_bounds && level_constant &&
           level_coboundary && telescopes;
  }
};

// Recomputes every property of a tower from its stored data.
TowerAudit AuditTower(const CantorStep& f, const TowerSolution& tower,
                      NormKind kind, double tolerance = kIrrationalTolerance);

struct EmbeddedTower {
  StepFunction f;
  StepFunction g;
  IntervalExchange T;
};

// Cell c of depth f.depth becomes [c/N, (c+1)/N), N = q·2^depth.
EmbeddedTower TowerToIntervalExchange(const TowerSolution& tower,
                                      const CantorStep& f);

}  // namespace cobound
