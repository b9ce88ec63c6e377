#include "cobound/cantor.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cobound/errors.h"

namespace cobound {

std::size_t LabelToIndex(const CantorLabel& label, int q) {
  if (label.branch < 1 || label.branch > q) {
    throw InvalidArgument("cantor label: branch " +
                          std::to_string(label.branch) + " outside 1.." +
                          std::to_string(q));
  }
  std::size_t index = static_cast<std::size_t>(label.branch - 1);
  for (int digit : label.digits) {
    if (digit != 1 && digit != 2) {
      throw InvalidArgument("cantor label: digit " + std::to_string(digit) +
                            " is not 1 or 2");
    }
    index = 2 * index + static_cast<std::size_t>(digit - 1);
  }
  return index;
}

CantorLabel IndexToLabel(std::size_t index, int q, int depth) {
  const std::size_t per_branch = std::size_t{1} << depth;
  if (index >= per_branch * static_cast<std::size_t>(q)) {
    throw InvalidArgument("cantor label: index " + std::to_string(index) +
                          " out of range");
  }
  CantorLabel label;
  label.branch = static_cast<int>(index / per_branch) + 1;
  label.digits.resize(depth);
  std::size_t rest = index % per_branch;
  for (int k = depth - 1; k >= 0; --k) {
    label.digits[k] = static_cast<int>(rest % 2) + 1;
    rest /= 2;
  }
  return label;
}

long RecodeAddress(const std::vector<int>& digits) {
  long code = 1;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (digits[k] != 1 && digits[k] != 2) {
      throw InvalidArgument("address digit " + std::to_string(digits[k]) +
                            " is not 1 or 2");
    }
    code += static_cast<long>(digits[k] - 1) << k;
  }
  return code;
}

std::vector<int> DecodeAddress(long code, int m) {
  if (m < 0 || m > 62 || code < 1 || code > (1L << m)) {
    throw InvalidArgument("address code " + std::to_string(code) +
                          " outside 1..2^" + std::to_string(m));
  }
  std::vector<int> digits(m);
  long rest = code - 1;
  for (int k = 0; k < m; ++k) {
    digits[k] = static_cast<int>(rest & 1) + 1;
    rest >>= 1;
  }
  return digits;
}

void CantorStep::Validate() const {
  if (q < 1) throw InvalidArgument("cantor: q must be positive");
  if (r.sign() <= 0) throw InvalidArgument("cantor: r must be positive");
  if (depth < 0 || depth > 30) {
    throw InvalidArgument("cantor: depth " + std::to_string(depth) +
                          " outside 0..30");
  }
  const std::size_t expected = static_cast<std::size_t>(q) << depth;
  if (values.size() != expected) {
    throw InvalidArgument("cantor: expected q*2^depth = " +
                          std::to_string(expected) + " values, got " +
                          std::to_string(values.size()));
  }
  CommonDimension(values);
}

Rational CantorStep::CellMeasure() const {
  return r / Rational(static_cast<long>(q) << depth);
}

RationalVector CantorStep::Integral() const {
  return Sum(values, dim()) * CellMeasure();
}

CantorStep Coarsen(const CantorStep& f, int level) {
  if (level < 0 || level > f.depth) {
    throw InvalidArgument("coarsen: level " + std::to_string(level) +
                          " outside 0.." + std::to_string(f.depth));
  }
  const std::size_t group = std::size_t{1} << (f.depth - level);
  CantorStep out{f.q, f.r, level, {}};
  out.values.reserve(f.cells() / group);
  for (std::size_t c = 0; c < f.cells(); c += group) {
    std::span<const RationalVector> children(f.values.data() + c, group);
    out.values.push_back(Sum(children, f.dim()) /
                         Rational(static_cast<long>(group)));
  }
  return out;
}

CantorStep Lift(const CantorStep& f, int depth) {
  if (depth < f.depth) {
    throw InvalidArgument("lift: depth " + std::to_string(depth) +
                          " is coarser than " + std::to_string(f.depth));
  }
  const std::size_t group = std::size_t{1} << (depth - f.depth);
  CantorStep out{f.q, f.r, depth, {}};
  out.values.reserve(f.cells() * group);
  for (const auto& v : f.values) out.values.insert(out.values.end(), group, v);
  return out;
}

Magnitude BranchDiameter(const CantorStep& f, NormKind kind) {
  const std::size_t per_branch = f.cells() / static_cast<std::size_t>(f.q);
  Magnitude diam;
  for (std::size_t b = 0; b < f.cells(); b += per_branch) {
    for (std::size_t i = b; i < b + per_branch; ++i) {
      for (std::size_t j = i + 1; j < b + per_branch; ++j) {
        diam = std::max(diam, Norm(f.values[i] - f.values[j], kind));
      }
    }
  }
  return diam;
}

double BranchDiameterRatio(const CantorStep& f, NormKind kind) {
  const Magnitude norm = f.SupNorm(kind);
  if (norm.is_zero()) return 0.0;
  return BranchDiameter(f, kind).approx() / norm.approx();
}

double CascadeConstant(std::size_t dim) {
  const double d = static_cast<double>(dim);
  return 8.0 * d * d / std::log(1.5) * (d + 1.0);
}

EmbeddedTower TowerToIntervalExchange(const TowerSolution& tower,
                                      const CantorStep& f) {
  if (tower.successor.size() != f.cells() || tower.g.cells() != f.cells()) {
    throw InvalidArgument("tower does not match the function's depth");
  }
  return EmbeddedTower{StepFunction::EqualIntervals(f.values),
                       StepFunction::EqualIntervals(tower.g.values),
                       IntervalExchange::FromCellPermutation(tower.successor)};
}

}  // namespace cobound
