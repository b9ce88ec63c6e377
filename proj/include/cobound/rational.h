#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace cobound {

// Exact rational number in canonical form (positive denominator, reduced).
// Thin value wrapper over GMP's mpq_class so that the rest of the code never
// sees a non-canonical fraction.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT

  template <std::integral N, std::integral D>
  Rational(N num, D den) : value_(static_cast<long>(num), 1) {
    if (den == 0) ThrowZeroDenominator();
    value_ /= mpq_class(static_cast<long>(den));
  }

  explicit Rational(mpq_class value);

  // Accepts "p/q" or "p" with optional leading '-'. Throws ParseError.
  static Rational Parse(std::string_view text);

  // Always "p/q", including "0/1" and "5/1".
  std::string str() const;
  // Decimal rendering with the given number of significant digits.
  std::string decimal(int significant_digits = 12) const;

  double to_double() const { return value_.get_d(); }
  const mpq_class& raw() const { return value_; }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  // True when the denominator is a power of two.
  bool is_dyadic() const;

  Rational abs() const;
  Rational floor() const;
  Rational ceil() const;
  // Is this the square of a rational?
  bool is_perfect_square() const;
  // Exact square root; only valid when is_perfect_square().
  Rational sqrt_exact() const;

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.value_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  [[noreturn]] static void ThrowZeroDenominator();

  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Renders a double with `significant_digits` significant digits ("%.*g").
std::string FormatDecimal(double value, int significant_digits = 12);

}  // namespace cobound
