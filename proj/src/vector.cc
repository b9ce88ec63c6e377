#include "cobound/vector.h"

#include <string>
#include <utility>

#include "cobound/errors.h"

namespace cobound {

RationalVector::RationalVector(std::vector<Rational> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("vector of dimension 0");
}

RationalVector::RationalVector(std::initializer_list<Rational> entries)
    : RationalVector(std::vector<Rational>(entries)) {}

RationalVector RationalVector::Zero(std::size_t dim) {
  return RationalVector(std::vector<Rational>(dim, Rational(0)));
}

bool RationalVector::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

void RationalVector::CheckSameDim(const RationalVector& o) const {
  if (dim() != o.dim()) {
    throw InvalidArgument("dimension mismatch: " + std::to_string(dim()) +
                          " vs " + std::to_string(o.dim()));
  }
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  CheckSameDim(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  CheckSameDim(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

RationalVector& RationalVector::operator/=(const Rational& c) {
  for (auto& e : entries_) e /= c;
  return *this;
}

Rational Dot(const RationalVector& a, const RationalVector& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector Sum(std::span<const RationalVector> vs, std::size_t dim) {
  RationalVector s = RationalVector::Zero(dim);
  for (const auto& v : vs) s += v;
  return s;
}

std::size_t CommonDimension(std::span<const RationalVector> vs) {
  if (vs.empty()) throw EmptyInput("empty vector family");
  const std::size_t d = vs.front().dim();
  for (const auto& v : vs) {
    if (v.dim() != d) throw InvalidArgument("vectors of mixed dimension");
  }
  return d;
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ')';
}

}  // namespace cobound
