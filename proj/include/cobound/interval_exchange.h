#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cobound/rational.h"

namespace cobound {

// Half-open interval [lo, hi).
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  bool contains(const Rational& t) const { return lo <= t && t < hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// [lo, hi) is translated by `shift`.
struct ExchangePiece {
  Rational lo;
  Rational hi;
  Rational shift;

  friend bool operator==(const ExchangePiece&, const ExchangePiece&) = default;
};

// Measure-preserving piecewise translation of [0,1). Both the source pieces
// and their images partition [0,1); this is checked exactly on construction.
class IntervalExchange {
 public:
  // Pieces may be given in any order; they are stored sorted by `lo`.
  // Throws InvalidArgument if sources or images fail to partition [0,1).
  explicit IntervalExchange(std::vector<ExchangePiece> pieces);

  static IntervalExchange Identity();
  // Splits [0,1) into n = target.size() equal cells and sends cell i onto
  // cell target[i] by translation. `target` must be a permutation of 0..n-1.
  static IntervalExchange FromCellPermutation(std::span<const int> target);

  std::span<const ExchangePiece> pieces() const { return pieces_; }

  // t must lie in [0,1).
  Rational Apply(const Rational& t) const;
  std::size_t PieceIndex(const Rational& t) const;

  IntervalExchange Inverse() const;

  // Left endpoints of all pieces (including 0).
  std::vector<Rational> Boundaries() const;
  bool IsBoundary(const Rational& t) const;

  // True when every piece has shift 0.
  bool IsIdentity() const;

 private:
  std::vector<ExchangePiece> pieces_;
};

// outer ∘ inner, refined so that every piece is a single translation.
IntervalExchange Compose(const IntervalExchange& outer,
                         const IntervalExchange& inner);

}  // namespace cobound
