#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posknot/fraction.hpp"
#include "posknot/integer.hpp"

namespace posknot {

/// Integer Laurent polynomial sum_k c_k x^k, stored densely from the lowest
/// nonzero exponent. The zero polynomial has no coefficients.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(Integer constant);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(int low_exponent, std::vector<Integer> coefficients);

  static LaurentPolynomial monomial(Integer c, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int low_exponent() const { return low_; }
  int high_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Integer coefficient(int exponent) const;
  const std::vector<Integer>& coefficients() const { return coeffs_; }

  /// Multiply by x^k.
  LaurentPolynomial shifted(int k) const;
  /// Substitute x -> x^-1.
  LaurentPolynomial inverted() const;

  Integer sum_of_coefficients() const;  // value at x = 1
  Integer value_at_minus_one() const;
  /// k-th derivative at x = 1: sum_e c_e * e(e-1)...(e-k+1).
  Integer derivative_at_one(int k) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

/// Exact quotient a / b; throws std::domain_error if b does not divide a.
LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b);

}  // namespace posknot
