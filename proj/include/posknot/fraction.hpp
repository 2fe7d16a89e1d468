#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "posknot/integer.hpp"

namespace posknot {

/// Exact rational number in lowest terms with positive denominator.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}
  Fraction(Integer n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(Integer n, Integer d);  // throws ZeroDenominator when d == 0

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == Integer(1); }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }
  Integer floor() const { return floor_div(num_, den_); }
  double to_double() const;
  /// "n/d", or "n" when the denominator is 1.
  std::string to_string() const;

  Fraction operator-() const { return Fraction(-num_, den_, Normalized{}); }
  Fraction reciprocal() const;  // throws ZeroDenominator on zero

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);

  friend bool operator==(const Fraction& a, const Fraction& b) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  struct Normalized {};
  Fraction(Integer n, Integer d, Normalized) : num_(std::move(n)), den_(std::move(d)) {}

  Integer num_;
  Integer den_;
};

Fraction abs(const Fraction& f);
std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace posknot
