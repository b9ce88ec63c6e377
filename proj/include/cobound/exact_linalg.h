#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cobound/rational.h"
#include "cobound/vector.h"

namespace cobound {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RowEchelon {
  RationalMatrix rows;          // reduced row echelon form
  std::vector<int> pivot_cols;  // pivot column of row r, r < rank
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// Gauss-Jordan elimination in exact arithmetic. Columns are scanned left to
// right and the first row with a nonzero entry is taken as pivot row.
RowEchelon ReduceRowEchelon(RationalMatrix a, int cols);

// A nonzero z with a·z = 0, or nullopt when the columns are independent.
// z has a 1 in the first non-pivot column and zeros in the other free ones.
std::optional<std::vector<Rational>> NullVector(const RationalMatrix& a,
                                                int cols);

// Weights λ ≥ 0 with Σλ = 1 and Σ λ_i points[i] = target, found with an
// exact phase-one simplex (Bland's rule), or nullopt if target is outside
// the convex hull.
std::optional<std::vector<Rational>> ConvexCombination(
    std::span<const RationalVector> points, const RationalVector& target);

}  // namespace cobound
