#include "cobound/exact_linalg.h"

#include <utility>

#include "cobound/errors.h"

namespace cobound {

RowEchelon ReduceRowEchelon(RationalMatrix a, int cols) {
  RowEchelon out;
  const int rows = static_cast<int>(a.size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!a[i][c].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    const Rational inv = Rational(1) / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational factor = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rows = std::move(a);
  return out;
}

std::optional<std::vector<Rational>> NullVector(const RationalMatrix& a,
                                                int cols) {
  RowEchelon e = ReduceRowEchelon(a, cols);
  if (e.rank() == cols) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> z(cols, Rational(0));
  z[free_col] = Rational(1);
  for (int r = 0; r < e.rank(); ++r) {
    z[e.pivot_cols[r]] = -e.rows[r][free_col];
  }
  return z;
}

std::optional<std::vector<Rational>> ConvexCombination(
    std::span<const RationalVector> points, const RationalVector& target) {
  const int n = static_cast<int>(points.size());
  if (n == 0) return std::nullopt;
  const int d = static_cast<int>(target.dim());
  const int m = d + 1;
  // Constraint rows: coordinates, then Σλ = 1. Columns: n weights,
  // m artificials, right-hand side.
  const int width = n + m + 1;
  const int rhs = width - 1;
  RationalMatrix t(m, std::vector<Rational>(width, Rational(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (points[j].dim() != target.dim()) {
        throw InvalidArgument("convex combination: dimension mismatch");
      }
      t[i][j] = i < d ? points[j][i] : Rational(1);
    }
    t[i][rhs] = i < d ? target[i] : Rational(1);
    if (t[i][rhs].sign() < 0) {
      for (int j = 0; j < n; ++j) t[i][j] = -t[i][j];
      t[i][rhs] = -t[i][rhs];
    }
    t[i][n + i] = Rational(1);
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  // Reduced costs of the phase-one objective Σ artificials.
  auto reduced_cost = [&](int j) {
    Rational c = j >= n ? Rational(1) : Rational(0);
    for (int i = 0; i < m; ++i) {
      if (basis[i] >= n) c -= t[i][j];
    }
    return c;
  };

  for (;;) {
    int entering = -1;
    for (int j = 0; j < n + m; ++j) {
      bool in_basis = false;
      for (int b : basis) in_basis |= (b == j);
      if (!in_basis && reduced_cost(j).sign() < 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;
    int leave = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t[i][entering].sign() <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][entering];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave < 0) break;  // unbounded; cannot happen in phase one
    const Rational inv = Rational(1) / t[leave][entering];
    for (auto& x : t[leave]) x *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][entering].is_zero()) continue;
      const Rational factor = t[i][entering];
      for (int j = 0; j < width; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = entering;
  }

  std::vector<Rational> lambda(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] >= n) {
      if (!t[i][rhs].is_zero()) return std::nullopt;
    } else {
      lambda[basis[i]] = t[i][rhs];
    }
  }
  return lambda;
}

}  // namespace cobound
