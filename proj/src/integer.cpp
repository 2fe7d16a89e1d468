#include "posknot/integer.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace posknot {

namespace {

mpz_class from_int64(std::int64_t v) {
  // mpz_class has no long long constructor on every platform; go through the limbs.
  std::uint64_t mag = v < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(v)
                            : static_cast<std::uint64_t>(v);
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (v < 0) r = -r;
  return r;
}

bool mpz_fits_int64(const mpz_class& v) {
  static const mpz_class lo = from_int64(INT64_MIN);
  static const mpz_class hi = from_int64(INT64_MAX);
  return v >= lo && v <= hi;
}

std::int64_t mpz_to_int64(const mpz_class& v) {
  std::uint64_t mag = 0;
  std::size_t count = 0;
  mpz_export(&mag, &count, 1, sizeof(mag), 0, 0, v.get_mpz_t());
  if (sgn(v) < 0) return static_cast<std::int64_t>(static_cast<std::uint64_t>(0) - mag);
  return static_cast<std::int64_t>(mag);
}

}  // namespace

Integer::Integer(const mpz_class& v) : big_(std::make_unique<mpz_class>(v)) { normalize(); }

Integer::Integer(std::string_view decimal) {
  mpz_class v;
  if (decimal.empty() || v.set_str(std::string(decimal), 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(decimal) + "'");
  }
  big_ = std::make_unique<mpz_class>(std::move(v));
  normalize();
}

void Integer::normalize() {
  if (big_ && mpz_fits_int64(*big_)) {
    small_ = mpz_to_int64(*big_);
    big_.reset();
  }
}

std::int64_t Integer::to_int64() const {
  if (big_) throw std::overflow_error("integer does not fit in 64 bits: " + to_string());
  return small_;
}

double Integer::to_double() const { return big_ ? big_->get_d() : static_cast<double>(small_); }

mpz_class Integer::to_mpz() const { return big_ ? *big_ : from_int64(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

int Integer::sign() const {
  if (big_) return sgn(*big_);
  return (small_ > 0) - (small_ < 0);
}

bool Integer::is_even() const { return big_ ? mpz_even_p(big_->get_mpz_t()) != 0 : (small_ % 2) == 0; }

Integer Integer::operator-() const {
  if (!big_ && small_ != INT64_MIN) return Integer(-small_);
  return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() + o.to_mpz());
  normalize();
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() - o.to_mpz());
  normalize();
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (!big_ && !o.big_) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(to_mpz() * o.to_mpz());
  normalize();
  return *this;
}

bool operator==(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never equals a small one
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Integer::footprint_bytes() const {
  if (!big_) return sizeof(Integer);
  return sizeof(Integer) + sizeof(mpz_class) +
         mpz_size(big_->get_mpz_t()) * sizeof(mp_limb_t);
}

std::size_t Integer::hash() const {
  if (!big_) return std::hash<std::int64_t>{}(small_);
  return std::hash<std::string>{}(big_->get_str(16));
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() && !(a.to_int64() == INT64_MIN && b.to_int64() == -1)) {
    std::int64_t x = a.to_int64(), y = b.to_int64();
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return Integer(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer mod(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("modulus is zero");
  if (a.is_small() && b.is_small() && b.to_int64() != INT64_MIN) {
    std::int64_t m = b.to_int64() < 0 ? -b.to_int64() : b.to_int64();
    std::int64_t r = a.to_int64() % m;
    return Integer(r < 0 ? r + m : r);
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(r);
}

Integer div_exact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (!mod(a, b).is_zero()) {
    throw std::domain_error(a.to_string() + " is not divisible by " + b.to_string());
  }
  if (a.is_small() && b.is_small() && !(a.to_int64() == INT64_MIN && b.to_int64() == -1)) {
    return Integer(a.to_int64() / b.to_int64());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.to_int64() != INT64_MIN && b.to_int64() != INT64_MIN) {
    std::int64_t x = a.to_int64() < 0 ? -a.to_int64() : a.to_int64();
    std::int64_t y = b.to_int64() < 0 ? -b.to_int64() : b.to_int64();
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  mpz_class r;
  if (m.is_zero() || mpz_invert(r.get_mpz_t(), a.to_mpz().get_mpz_t(), m.to_mpz().get_mpz_t()) == 0) {
    throw std::domain_error(a.to_string() + " has no inverse modulo " + m.to_string());
  }
  return mod(Integer(r), m);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace posknot
