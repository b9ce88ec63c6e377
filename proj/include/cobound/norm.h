#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cobound/rational.h"
#include "cobound/vector.h"

namespace cobound {

enum class NormKind { kL1, kL2, kLinf };

NormKind ParseNormKind(std::string_view name);  // "l1" | "l2" | "linf"
std::string_view NormName(NormKind kind);

// Absolute tolerance for bound checks whose threshold is irrational.
inline constexpr double kIrrationalTolerance = 1e-9;

// A nonnegative real number held as its exact square. Norms in all three
// kinds are representable this way (for L1/Linf the square of a rational,
// for L2 the exact sum of squares), so every comparison between two norms
// or between a norm and a rational multiple of a norm is exact.
class Magnitude {
 public:
  Magnitude() = default;

  static Magnitude FromSquare(Rational square);
  static Magnitude FromValue(const Rational& value);

  const Rational& squared() const { return square_; }
  // The value itself when it is rational.
  std::optional<Rational> exact() const;
  double approx() const;

  // c * this, for rational c >= 0.
  Magnitude scaled(const Rational& c) const;

  bool is_zero() const { return square_.is_zero(); }

  friend bool operator==(const Magnitude&, const Magnitude&) = default;
  friend std::strong_ordering operator<=>(const Magnitude& a,
                                          const Magnitude& b) {
    return a.square_ <=> b.square_;
  }

 private:
  Rational square_;
};

Magnitude Norm(const RationalVector& v, NormKind kind);

// Largest norm of a family (zero for an empty family).
Magnitude MaxNorm(std::span<const RationalVector> vs, NormKind kind);

// lhs <= factor * scale, decided exactly (factor rational, >= 0).
bool Within(const Magnitude& lhs, const Rational& factor,
            const Magnitude& scale);

// lhs <= factor * scale + kIrrationalTolerance, for irrational factors.
bool WithinApprox(const Magnitude& lhs, double factor, const Magnitude& scale,
                  double tolerance = kIrrationalTolerance);

}  // namespace cobound
