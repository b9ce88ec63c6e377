#include "cobound/rational.h"

#include <cstdio>
#include <string>
#include <utility>

#include "cobound/errors.h"

namespace cobound {

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

void Rational::ThrowZeroDenominator() {
  throw InvalidArgument("rational with zero denominator");
}

Rational Rational::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigits(num) || !IsDigits(den)) {
    throw ParseError("not a rational literal: \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int significant_digits) const {
  return FormatDecimal(to_double(), significant_digits);
}

bool Rational::is_dyadic() const {
  const mpz_class& den = value_.get_den();
  // A power of two has exactly one set bit.
  return mpz_popcount(den.get_mpz_t()) == 1;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

bool Rational::is_perfect_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(value_.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(value_.get_den_mpz_t()) != 0;
}

Rational Rational::sqrt_exact() const {
  if (!is_perfect_square()) {
    throw InvalidArgument("sqrt_exact of a non-square rational " + str());
  }
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), value_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

std::string FormatDecimal(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
  return buf;
}

}  // namespace cobound
