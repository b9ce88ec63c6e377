#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "cobound/errors.h"
#include "cobound/selection.h"
#include "cobound/steinitz.h"

namespace cobound {

namespace {

void CheckZeroRows(const VectorMatrix& m, const char* who) {
  for (int i = 0; i < m.rows(); ++i) {
    RationalVector s = m.RowSum(i);
    if (!s.is_zero()) {
      std::ostringstream os;
      os << who << ": row " << i + 1 << " sums to " << s << ", not 0";
      throw RowNotMeanZero(os.str());
    }
  }
}

void CheckCardinality(const VectorMatrix& m, int p) {
  if (p < 1 || p > m.cols()) {
    throw InvalidArgument("split cardinality p = " + std::to_string(p) +
                          " outside 1.." + std::to_string(m.cols()));
  }
}

std::vector<int> Identity(int m) {
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

std::vector<std::vector<int>> BuildPermutations(const VectorMatrix& v);

}  // namespace

VectorMatrix::VectorMatrix(int rows, int cols,
                           std::vector<RationalVector> entries, NormKind kind)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), kind_(kind) {
  if (rows_ < 1 || cols_ < 1) {
    throw InvalidArgument("vector matrix needs at least one row and column");
  }
  if (entries_.size() != static_cast<std::size_t>(rows_) * cols_) {
    throw InvalidArgument("vector matrix: entry count does not match shape");
  }
  CommonDimension(entries_);
}

VectorMatrix VectorMatrix::FromRows(
    const std::vector<std::vector<RationalVector>>& rows, NormKind kind) {
  if (rows.empty()) throw InvalidArgument("vector matrix without rows");
  const std::size_t cols = rows.front().size();
  std::vector<RationalVector> entries;
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidArgument("ragged vector matrix");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return VectorMatrix(static_cast<int>(rows.size()), static_cast<int>(cols),
                      std::move(entries), kind);
}

RationalVector VectorMatrix::RowSum(int i) const { return Sum(row(i), dim()); }

std::vector<RationalVector> VectorMatrix::Anchors() const {
  std::vector<RationalVector> anchors;
  anchors.reserve(rows_);
  RationalVector acc = RationalVector::Zero(dim());
  for (int i = 0; i < rows_; ++i) {
    acc += RowSum(i);
    anchors.push_back(acc / Rational(cols_));
  }
  return anchors;
}

VectorMatrix VectorMatrix::Scaled(const Rational& c) const {
  std::vector<RationalVector> scaled;
  scaled.reserve(entries_.size());
  for (const auto& e : entries_) scaled.push_back(e * c);
  return VectorMatrix(rows_, cols_, std::move(scaled), kind_);
}

VectorMatrix VectorMatrix::Gather(
    const std::vector<std::vector<int>>& columns) const {
  const int width = static_cast<int>(columns.front().size());
  std::vector<RationalVector> out;
  out.reserve(static_cast<std::size_t>(rows_) * width);
  for (int i = 0; i < rows_; ++i) {
    for (int j : columns[i]) out.push_back(at(i, j));
  }
  return VectorMatrix(rows_, width, std::move(out), kind_);
}

double KwapienConstant(std::size_t dim) {
  const double d = static_cast<double>(dim);
  return 8.0 * d * d / std::log(1.5);
}

VectorMatrix CenteredHalf(const VectorMatrix& m) {
  std::vector<RationalVector> out;
  out.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  const Rational half(1, 2);
  for (int i = 0; i < m.rows(); ++i) {
    const RationalVector shift = m.RowSum(i) / Rational(2 * m.cols());
    for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(i, j) * half - shift);
  }
  return VectorMatrix(m.rows(), m.cols(), std::move(out), m.norm());
}

Magnitude SplitDeviationZero(const VectorMatrix& m,
                             const std::vector<std::vector<int>>& subsets) {
  RationalVector acc = RationalVector::Zero(m.dim());
  Magnitude worst;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j : subsets[i]) acc += m.at(i, j);
    worst = std::max(worst, Norm(acc, m.norm()));
  }
  return worst;
}

Magnitude SplitDeviationGeneral(const VectorMatrix& m,
                                const std::vector<std::vector<int>>& subsets) {
  const Rational p(static_cast<long>(subsets.front().size()));
  const auto anchors = m.Anchors();
  RationalVector acc = RationalVector::Zero(m.dim());
  Magnitude worst;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j : subsets[i]) acc += m.at(i, j);
    worst = std::max(worst, Norm(acc - anchors[i] * p, m.norm()));
  }
  return worst;
}

Magnitude FamilyDeviation(const VectorMatrix& m,
                          const std::vector<std::vector<int>>& perms) {
  const auto anchors = m.Anchors();
  Magnitude worst;
  for (int j = 0; j < m.cols(); ++j) {
    RationalVector thread = RationalVector::Zero(m.dim());
    for (int i = 0; i < m.rows(); ++i) {
      thread += m.at(i, perms[i][j]);
      worst = std::max(worst, Norm(thread - anchors[i], m.norm()));
    }
  }
  return worst;
}

PermutationFamily KwapienScalar(const VectorMatrix& m) {
  if (m.dim() != 1) {
    throw InvalidArgument("scalar Kwapien lemma needs d = 1, got d = " +
                          std::to_string(m.dim()));
  }
  CheckZeroRows(m, "scalar Kwapien");
  const int cols = m.cols();
  std::vector<Rational> sums(cols, Rational(0));
  PermutationFamily family;
  family.perms.assign(m.rows(), std::vector<int>(cols));
  for (int i = 0; i < m.rows(); ++i) {
    std::vector<int> threads = Identity(cols);
    std::stable_sort(threads.begin(), threads.end(),
                     [&](int a, int b) { return sums[a] < sums[b]; });
    std::vector<int> entries = Identity(cols);
    std::stable_sort(entries.begin(), entries.end(), [&](int a, int b) {
      return m.at(i, a)[0] > m.at(i, b)[0];
    });
    for (int t = 0; t < cols; ++t) {
      family.perms[i][threads[t]] = entries[t];
      sums[threads[t]] += m.at(i, entries[t])[0];
    }
  }
  family.achieved_bound = FamilyDeviation(m, family.perms);
  const Magnitude c = m.MaxEntryNorm();
  if (!Within(family.achieved_bound, Rational(2), c)) {
    throw BoundViolated("scalar Kwapien: deviation " +
                        FormatDecimal(family.achieved_bound.approx()) +
                        " exceeds 2C = " + FormatDecimal(2 * c.approx()));
  }
  return family;
}

SplitResult KwapienSplitZero(const VectorMatrix& a, int p) {
  CheckZeroRows(a, "split");
  CheckCardinality(a, p);
  const int n = a.rows();
  const int m = a.cols();
  const long d = static_cast<long>(a.dim());
  const Magnitude max_norm = a.MaxEntryNorm();

  // Relabel each row so that its own prefix sums stay within d·M.
  std::vector<std::vector<int>> relabel(n);
  for (int i = 0; i < n; ++i) {
    relabel[i] = SteinitzRearrange(a.row(i), a.norm()).permutation;
  }

  const int m1 = std::lcm(m, p);
  const int m2 = m1 / p;
  // Replicated column r (0-based) is relabelled column r mod m.
  std::vector<std::vector<RationalVector>> blocks(n);
  const Magnitude block_bound = max_norm.scaled(Rational(2 * d));
  for (int i = 0; i < n; ++i) {
    blocks[i].reserve(m2);
    for (int j = 0; j < m2; ++j) {
      RationalVector b = RationalVector::Zero(a.dim());
      for (int r = j * p; r < (j + 1) * p; ++r) {
        b += a.at(i, relabel[i][r % m]);
      }
      if (Norm(b, a.norm()) > block_bound) {
        throw BoundViolated("split: block sum exceeds 2d*M");
      }
      blocks[i].push_back(std::move(b));
    }
  }

  const SelectionResult pick = BgSelect(blocks, a.norm());
  SplitResult result;
  result.cardinality = p;
  result.subsets.resize(n);
  for (int i = 0; i < n; ++i) {
    const int j = pick.choice[i];
    for (int r = j * p; r < (j + 1) * p; ++r) {
      result.subsets[i].push_back(relabel[i][r % m]);
    }
    std::sort(result.subsets[i].begin(), result.subsets[i].end());
  }
  result.achieved_bound = SplitDeviationZero(a, result.subsets);
  if (!Within(result.achieved_bound, Rational(4 * d * d), max_norm)) {
    throw BoundViolated("split: deviation " +
                        FormatDecimal(result.achieved_bound.approx()) +
                        " exceeds 4d^2*M");
  }
  return result;
}

SplitResult KwapienSplitGeneral(const VectorMatrix& v, int p) {
  CheckCardinality(v, p);
  const long d = static_cast<long>(v.dim());
  SplitResult result = KwapienSplitZero(CenteredHalf(v), p);
  result.achieved_bound = SplitDeviationGeneral(v, result.subsets);
  if (!Within(result.achieved_bound, Rational(8 * d * d), v.MaxEntryNorm())) {
    throw BoundViolated("split: deviation " +
                        FormatDecimal(result.achieved_bound.approx()) +
                        " exceeds 8d^2*M");
  }
  return result;
}

namespace {

std::vector<std::vector<int>> BuildPermutations(const VectorMatrix& v) {
  const int n = v.rows();
  const int m = v.cols();
  if (m == 1) return std::vector<std::vector<int>>(n, std::vector<int>{0});

  if (m == 2) {
    std::vector<std::vector<RationalVector>> pairs(n);
    for (int i = 0; i < n; ++i) {
      const RationalVector mid = (v.at(i, 0) + v.at(i, 1)) / Rational(2);
      pairs[i] = {v.at(i, 0) - mid, v.at(i, 1) - mid};
    }
    const SelectionResult pick = BgSelect(pairs, v.norm());
    std::vector<std::vector<int>> perms(n);
    for (int i = 0; i < n; ++i) {
      perms[i] = {pick.choice[i], 1 - pick.choice[i]};
    }
    return perms;
  }

  const int p = (m + 1) / 2;
  const SplitResult split = KwapienSplitGeneral(v, p);
  // order[i] lists I_i first, then the complement, both ascending.
  std::vector<std::vector<int>> first(n), second(n), order(n);
  for (int i = 0; i < n; ++i) {
    std::vector<bool> in(m, false);
    for (int j : split.subsets[i]) in[j] = true;
    for (int j = 0; j < m; ++j) (in[j] ? first[i] : second[i]).push_back(j);
    order[i] = first[i];
    order[i].insert(order[i].end(), second[i].begin(), second[i].end());
  }
  const auto left = BuildPermutations(v.Gather(first));
  const auto right = BuildPermutations(v.Gather(second));

  std::vector<std::vector<int>> perms(n, std::vector<int>(m));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) perms[i][j] = order[i][left[i][j]];
    for (int j = p; j < m; ++j) perms[i][j] = order[i][p + right[i][j - p]];
  }
  return perms;
}

}  // namespace

PermutationFamily KwapienPermutations(const VectorMatrix& v) {
  PermutationFamily family;
  family.perms = BuildPermutations(v);
  family.achieved_bound = FamilyDeviation(v, family.perms);
  const double limit = KwapienConstant(v.dim());
  if (!WithinApprox(family.achieved_bound, limit, v.MaxEntryNorm())) {
    throw BoundViolated("Kwapien permutations: deviation " +
                        FormatDecimal(family.achieved_bound.approx()) +
                        " exceeds 8d^2/ln(1.5)*M");
  }
  return family;
}

}  // namespace cobound
