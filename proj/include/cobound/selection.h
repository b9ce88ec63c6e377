#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cobound/norm.h"
#include "cobound/vector.h"

namespace cobound {

// ---------------------------------------------------------------------------
// Bárány–Grinberg selection.

struct SelectionResult {
  std::vector<int> choice;             // index into sets[i]
  std::vector<RationalVector> chosen;  // sets[i][choice[i]]
  Magnitude achieved_bound;            // max_p ‖Σ_{i≤p} c_i‖
};

// Picks c_i ∈ C_i with every prefix sum of norm at most 2d·M, M the largest
// norm in any set. Greedy first (the element that minimises the running
// prefix norm, lowest index on ties); if the greedy path breaks the bound,
// an exact depth-first search over selections takes over.
//
// Throws EmptyInput for an empty set, ConvexHullViolation when 0 is not in
// Conv(C_i) (decided by exact linear feasibility), BoundViolated if no
// selection is found.
SelectionResult BgSelect(std::span<const std::vector<RationalVector>> sets,
                         NormKind kind);

// max_p ‖Σ_{i≤p} sets[i][choice[i]]‖.
Magnitude SelectionPrefixBound(std::span<const std::vector<RationalVector>> sets,
                               std::span<const int> choice, NormKind kind);

struct SelectionOracleResult {
  Magnitude optimal_bound;  // min over selections of the max prefix norm
  std::vector<int> witness;  // lexicographically least optimal choice
};

// Upper limit on Π|C_i| for the exhaustive searches.
inline constexpr std::int64_t kMaxSelectionSpace = 20'000'000;

// Exact optimum by branch and bound, first set searched in parallel.
SelectionOracleResult SelectionOracle(
    std::span<const std::vector<RationalVector>> sets, NormKind kind);
// Serial plain enumeration of every selection; reference for the above.
SelectionOracleResult SelectionOracleReference(
    std::span<const std::vector<RationalVector>> sets, NormKind kind);

// ---------------------------------------------------------------------------
// Matrices of vectors and the Kwapień constructions.

class VectorMatrix {
 public:
  // entries in row-major order, rows*cols of them, common dimension.
  VectorMatrix(int rows, int cols, std::vector<RationalVector> entries,
               NormKind kind);
  static VectorMatrix FromRows(
      const std::vector<std::vector<RationalVector>>& rows, NormKind kind);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t dim() const { return entries_.front().dim(); }
  NormKind norm() const { return kind_; }

  const RationalVector& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  std::span<const RationalVector> row(int i) const {
    return std::span<const RationalVector>(entries_).subspan(
        static_cast<std::size_t>(i) * cols_, cols_);
  }

  Magnitude MaxEntryNorm() const { return MaxNorm(entries_, kind_); }
  RationalVector RowSum(int i) const;
  // x_k = (1/m) Σ_{i≤k} Σ_j v_{i,j}; element k-1 holds x_k.
  std::vector<RationalVector> Anchors() const;

  VectorMatrix Scaled(const Rational& c) const;
  // Row i keeps the columns columns[i] (all of equal length), in that order.
  VectorMatrix Gather(const std::vector<std::vector<int>>& columns) const;

 private:
  int rows_;
  int cols_;
  std::vector<RationalVector> entries_;
  NormKind kind_;
};

struct SplitResult {
  std::vector<std::vector<int>> subsets;  // I_i, sorted column indices
  int cardinality = 0;                    // p
  Magnitude achieved_bound;
};

struct PermutationFamily {
  // perms[i][j] = π_i(j): the column of row i on thread j.
  std::vector<std::vector<int>> perms;
  Magnitude achieved_bound;
};

// 8d²/ln(1.5).
double KwapienConstant(std::size_t dim);

// v'_{i,j} = ½v_{i,j} − (1/2m) Σ_t v_{i,t}.
VectorMatrix CenteredHalf(const VectorMatrix& m);

// max_k ‖Σ_{i≤k} Σ_{j∈I_i} a_{i,j}‖.
Magnitude SplitDeviationZero(const VectorMatrix& m,
                             const std::vector<std::vector<int>>& subsets);
// max_k ‖Σ_{i≤k} Σ_{j∈I_i} v_{i,j} − p·x_k‖ with p = |I_1|.
Magnitude SplitDeviationGeneral(const VectorMatrix& m,
                                const std::vector<std::vector<int>>& subsets);
// max_{k,j} ‖Σ_{i≤k} v_{i,π_i(j)} − x_k‖.
Magnitude FamilyDeviation(const VectorMatrix& m,
                          const std::vector<std::vector<int>>& perms);

// Real-valued Kwapień lemma (d = 1): threads are kept within 2C by pairing,
// row by row, the largest entries with the threads of smallest running sum.
// Throws RowNotMeanZero, InvalidArgument for d != 1, BoundViolated.
PermutationFamily KwapienScalar(const VectorMatrix& m);

// Equal-size subsets with prefix sums ≤ 4d²·M for zero-row-sum matrices:
// per-row Steinitz relabeling, column replication to lcm(m,p), block sums,
// then Bárány–Grinberg over the blocks. Throws RowNotMeanZero,
// InvalidArgument (p out of range), BoundViolated.
SplitResult KwapienSplitZero(const VectorMatrix& m, int p);

// Same for arbitrary rows, deviation from p·x_k ≤ 8d²·M, via CenteredHalf.
SplitResult KwapienSplitGeneral(const VectorMatrix& m, int p);

// Permutations with every thread within 8d²/ln(1.5)·M of the anchors x_k.
// m = 1 identity; m = 2 sign choice by Bárány–Grinberg on the centred pairs;
// m > 2 split with p = ⌈m/2⌉ and recurse on both halves.
PermutationFamily KwapienPermutations(const VectorMatrix& m);

}  // namespace cobound
