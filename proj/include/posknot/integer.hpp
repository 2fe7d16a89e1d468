#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace posknot {

/// Arbitrary precision integer with an inline 64-bit fast path.
///
/// Values that fit in int64_t are stored inline; arithmetic is overflow-checked
/// and promotes to a GMP integer only when the result does not fit. Results
/// that fit again are demoted, so each value has exactly one representation.
class Integer {
 public:
  Integer() = default;

  template <typename T>
    requires std::is_integral_v<T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T> || sizeof(T) < sizeof(std::int64_t)) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      if (v <= static_cast<T>(INT64_MAX)) {
        small_ = static_cast<std::int64_t>(v);
      } else {
        big_ = std::make_unique<mpz_class>(std::to_string(v));
      }
    }
  }

  explicit Integer(const mpz_class& v);
  explicit Integer(std::string_view decimal);

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;

  bool is_small() const { return !big_; }
  bool fits_int64() const { return !big_; }
  std::int64_t to_int64() const;  // throws std::overflow_error when !fits_int64()
  double to_double() const;
  mpz_class to_mpz() const;
  std::string to_string() const;

  int sign() const;
  bool is_zero() const { return !big_ && small_ == 0; }
  bool is_even() const;
  bool is_odd() const { return !is_even(); }

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  /// Approximate heap + inline footprint, used for memo accounting.
  std::size_t footprint_bytes() const;

  std::size_t hash() const;

 private:
  void normalize();

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

Integer abs(const Integer& a);
/// Floor division: largest k with k*b <= a. Throws std::domain_error on b == 0.
Integer floor_div(const Integer& a, const Integer& b);
/// Non-negative remainder in [0, |b|).
Integer mod(const Integer& a, const Integer& b);
/// Exact division; throws std::domain_error if b does not divide a.
Integer div_exact(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
/// Inverse of a modulo m in [0, m). Throws std::domain_error when gcd(a, m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

std::ostream& operator<<(std::ostream& os, const Integer& v);

struct IntegerHash {
  std::size_t operator()(const Integer& v) const { return v.hash(); }
};

}  // namespace posknot
