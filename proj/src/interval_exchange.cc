#include "cobound/interval_exchange.h"

#include <algorithm>
#include <string>
#include <utility>

#include "cobound/errors.h"

namespace cobound {

namespace {

// Checks that the intervals, sorted by lo, tile [0,1) without gaps.
void CheckPartition(std::vector<Interval> cells, const char* what) {
  std::sort(cells.begin(), cells.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  Rational cursor(0);
  for (const auto& c : cells) {
    if (c.hi <= c.lo) {
      throw InvalidArgument(std::string(what) + ": empty or reversed piece [" +
                            c.lo.str() + ", " + c.hi.str() + ")");
    }
    if (c.lo != cursor) {
      throw InvalidArgument(std::string(what) + ": gap or overlap at " +
                            cursor.str());
    }
    cursor = c.hi;
  }
  if (cursor != Rational(1)) {
    throw InvalidArgument(std::string(what) + ": total length " +
                          cursor.str() + " != 1");
  }
}

}  // namespace

IntervalExchange::IntervalExchange(std::vector<ExchangePiece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InvalidArgument("interval exchange: no pieces");
  std::sort(pieces_.begin(), pieces_.end(),
            [](const ExchangePiece& a, const ExchangePiece& b) {
              return a.lo < b.lo;
            });
  std::vector<Interval> sources, images;
  sources.reserve(pieces_.size());
  images.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    sources.push_back({p.lo, p.hi});
    images.push_back({p.lo + p.shift, p.hi + p.shift});
  }
  CheckPartition(std::move(sources), "interval exchange sources");
  CheckPartition(std::move(images), "interval exchange images");
}

IntervalExchange IntervalExchange::Identity() {
  return IntervalExchange({{Rational(0), Rational(1), Rational(0)}});
}

IntervalExchange IntervalExchange::FromCellPermutation(
    std::span<const int> target) {
  const int n = static_cast<int>(target.size());
  if (n == 0) throw InvalidArgument("empty cell permutation");
  std::vector<ExchangePiece> pieces;
  pieces.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (target[i] < 0 || target[i] >= n) {
      throw InvalidArgument("cell permutation entry out of range");
    }
    pieces.push_back({Rational(i, n), Rational(i + 1, n),
                      Rational(target[i] - i, n)});
  }
  return IntervalExchange(std::move(pieces));
}

std::size_t IntervalExchange::PieceIndex(const Rational& t) const {
  if (t.sign() < 0 || t >= Rational(1)) {
    throw InvalidArgument("point " + t.str() + " outside [0,1)");
  }
  auto it = std::upper_bound(
      pieces_.begin(), pieces_.end(), t,
      [](const Rational& x, const ExchangePiece& p) { return x < p.lo; });
  return static_cast<std::size_t>(it - pieces_.begin()) - 1;
}

Rational IntervalExchange::Apply(const Rational& t) const {
  return t + pieces_[PieceIndex(t)].shift;
}

IntervalExchange IntervalExchange::Inverse() const {
  std::vector<ExchangePiece> inv;
  inv.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    inv.push_back({p.lo + p.shift, p.hi + p.shift, -p.shift});
  }
  return IntervalExchange(std::move(inv));
}

std::vector<Rational> IntervalExchange::Boundaries() const {
  std::vector<Rational> b;
  b.reserve(pieces_.size());
  for (const auto& p : pieces_) b.push_back(p.lo);
  return b;
}

bool IntervalExchange::IsBoundary(const Rational& t) const {
  auto it = std::lower_bound(
      pieces_.begin(), pieces_.end(), t,
      [](const ExchangePiece& p, const Rational& x) { return p.lo < x; });
  return it != pieces_.end() && it->lo == t;
}

bool IntervalExchange::IsIdentity() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const ExchangePiece& p) { return p.shift.is_zero(); });
}

IntervalExchange Compose(const IntervalExchange& outer,
                         const IntervalExchange& inner) {
  const auto outer_bounds = outer.Boundaries();
  std::vector<ExchangePiece> out;
  for (const auto& p : inner.pieces()) {
    const Rational img_lo = p.lo + p.shift;
    const Rational img_hi = p.hi + p.shift;
    // Split the image [img_lo, img_hi) at outer's boundaries.
    std::vector<Rational> cuts{img_lo};
    auto it = std::upper_bound(outer_bounds.begin(), outer_bounds.end(),
                               img_lo);
    for (; it != outer_bounds.end() && *it < img_hi; ++it) cuts.push_back(*it);
    cuts.push_back(img_hi);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const Rational& u = cuts[i];
      const Rational total = p.shift + outer.pieces()[outer.PieceIndex(u)].shift;
      out.push_back({u - p.shift, cuts[i + 1] - p.shift, total});
    }
  }
  return IntervalExchange(std::move(out));
}

}  // namespace cobound
