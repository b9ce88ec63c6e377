#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "cobound/rational.h"

namespace cobound {

// A d-tuple of exact rationals. The dimension is fixed at construction.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<Rational> entries);
  RationalVector(std::initializer_list<Rational> entries);

  static RationalVector Zero(std::size_t dim);

  std::size_t dim() const { return entries_.size(); }
  // Coordinate projection P_i.
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const;

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  RationalVector& operator*=(const Rational& c);
  RationalVector& operator/=(const Rational& c);

  friend RationalVector operator+(RationalVector a, const RationalVector& b) {
    return a += b;
  }
  friend RationalVector operator-(RationalVector a, const RationalVector& b) {
    return a -= b;
  }
  friend RationalVector operator-(RationalVector a) {
    return a *= Rational(-1);
  }
  friend RationalVector operator*(RationalVector a, const Rational& c) {
    return a *= c;
  }
  friend RationalVector operator*(const Rational& c, RationalVector a) {
    return a *= c;
  }
  friend RationalVector operator/(RationalVector a, const Rational& c) {
    return a /= c;
  }
  friend bool operator==(const RationalVector&,
                         const RationalVector&) = default;

 private:
  void CheckSameDim(const RationalVector& o) const;

  std::vector<Rational> entries_;
};

// Euclidean inner product.
Rational Dot(const RationalVector& a, const RationalVector& b);

// Sum of a non-empty family; `dim` is used when the family is empty.
RationalVector Sum(std::span<const RationalVector> vs, std::size_t dim);

// Common dimension of a family; throws InvalidArgument on mismatch or if
// the family is empty.
std::size_t CommonDimension(std::span<const RationalVector> vs);

std::ostream& operator<<(std::ostream& os, const RationalVector& v);

}  // namespace cobound
