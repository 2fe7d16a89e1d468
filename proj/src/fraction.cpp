#include "posknot/fraction.hpp"

#include <ostream>

#include "posknot/errors.hpp"

namespace posknot {

Fraction::Fraction(Integer n, Integer d) {
  if (d.is_zero()) throw ZeroDenominator("fraction with zero denominator");
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  Integer g = gcd(n, d);
  if (g != Integer(1)) {
    n = div_exact(n, g);
    d = div_exact(d, g);
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

double Fraction::to_double() const {
  if (num_.is_small() && den_.is_small()) return num_.to_double() / den_.to_double();
  mpq_class q(num_.to_mpz(), den_.to_mpz());
  return q.get_d();
}

std::string Fraction::to_string() const {
  return is_integer() ? num_.to_string() : num_.to_string() + "/" + den_.to_string();
}

Fraction Fraction::reciprocal() const {
  if (num_.is_zero()) throw ZeroDenominator("reciprocal of zero");
  return Fraction(den_, num_);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.num_.is_zero()) throw ZeroDenominator("division by zero fraction");
  return Fraction(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Fraction abs(const Fraction& f) { return f.sign() < 0 ? -f : f; }

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

}  // namespace posknot
