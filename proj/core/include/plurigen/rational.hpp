#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace plurigen {

using Integer = mpz_class;

/// Exact fraction kept in lowest terms with a positive denominator.
///
/// Every constructor and arithmetic operator returns the canonical form, so
/// two rationals are equal iff their numerators and denominators are equal.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT(implicit)

  /// Throws std::domain_error("division by zero") when den == 0.
  Rational(Integer num, Integer den);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return sgn(num_); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string() const;

 private:
  void canonicalize();

  Integer num_;
  Integer den_;
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

Rational apply(ArithOp op, const Rational& x, const Rational& y);

/// Returns the integer value of x; throws InconsistentDataError
/// ("non-integral value") when x has a denominator other than 1.
Integer to_integer(const Rational& x);

/// Accepts "n", "n/d" with optional sign and surrounding whitespace.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace plurigen
