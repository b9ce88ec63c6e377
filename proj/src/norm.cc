#include "cobound/norm.h"

#include <cmath>
#include <string>
#include <utility>

#include "cobound/errors.h"

namespace cobound {

NormKind ParseNormKind(std::string_view name) {
  if (name == "l1") return NormKind::kL1;
  if (name == "l2") return NormKind::kL2;
  if (name == "linf") return NormKind::kLinf;
  throw ParseError("unknown norm \"" + std::string(name) +
                   "\" (expected l1, l2 or linf)");
}

std::string_view NormName(NormKind kind) {
  switch (kind) {
    case NormKind::kL1:
      return "l1";
    case NormKind::kL2:
      return "l2";
    case NormKind::kLinf:
      return "linf";
  }
  return "?";
}

Magnitude Magnitude::FromSquare(Rational square) {
  if (square.sign() < 0) throw InvalidArgument("negative squared magnitude");
  Magnitude m;
  m.square_ = std::move(square);
  return m;
}

Magnitude Magnitude::FromValue(const Rational& value) {
  if (value.sign() < 0) throw InvalidArgument("negative magnitude");
  return FromSquare(value * value);
}

std::optional<Rational> Magnitude::exact() const {
  if (!square_.is_perfect_square()) return std::nullopt;
  return square_.sqrt_exact();
}

double Magnitude::approx() const {
  if (auto e = exact()) return e->to_double();
  return std::sqrt(square_.to_double());
}

Magnitude Magnitude::scaled(const Rational& c) const {
  if (c.sign() < 0) throw InvalidArgument("negative scale factor");
  return FromSquare(square_ * c * c);
}

Magnitude Norm(const RationalVector& v, NormKind kind) {
  switch (kind) {
    case NormKind::kL1: {
      Rational s;
      for (const auto& e : v.entries()) s += e.abs();
      return Magnitude::FromValue(s);
    }
    case NormKind::kL2:
      return Magnitude::FromSquare(Dot(v, v));
    case NormKind::kLinf: {
      Rational m;
      for (const auto& e : v.entries()) {
        Rational a = e.abs();
        if (a > m) m = std::move(a);
      }
      return Magnitude::FromValue(m);
    }
  }
  throw InvalidArgument("unknown norm kind");
}

Magnitude MaxNorm(std::span<const RationalVector> vs, NormKind kind) {
  Magnitude best;
  for (const auto& v : vs) {
    Magnitude n = Norm(v, kind);
    if (n > best) best = std::move(n);
  }
  return best;
}

bool Within(const Magnitude& lhs, const Rational& factor,
            const Magnitude& scale) {
  return lhs <= scale.scaled(factor);
}

bool WithinApprox(const Magnitude& lhs, double factor, const Magnitude& scale,
                  double tolerance) {
  return lhs.approx() <= factor * scale.approx() + tolerance;
}

}  // namespace cobound
