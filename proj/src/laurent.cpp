#include "posknot/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace posknot {

LaurentPolynomial::LaurentPolynomial(Integer constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

LaurentPolynomial::LaurentPolynomial(int low_exponent, std::vector<Integer> coefficients)
    : low_(low_exponent), coeffs_(std::move(coefficients)) {
  trim();
}

LaurentPolynomial LaurentPolynomial::monomial(Integer c, int exponent) {
  return LaurentPolynomial(exponent, {std::move(c)});
}

void LaurentPolynomial::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back().is_zero()) coeffs_.pop_back();
}

Integer LaurentPolynomial::coefficient(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high_exponent()) return Integer(0);
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPolynomial LaurentPolynomial::inverted() const {
  if (is_zero()) return {};
  std::vector<Integer> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPolynomial(-high_exponent(), std::move(rev));
}

Integer LaurentPolynomial::sum_of_coefficients() const {
  Integer s(0);
  for (const auto& c : coeffs_) s += c;
  return s;
}

Integer LaurentPolynomial::value_at_minus_one() const {
  Integer s(0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    int e = low_ + static_cast<int>(i);
    if (e % 2 == 0) {
      s += coeffs_[i];
    } else {
      s -= coeffs_[i];
    }
  }
  return s;
}

Integer LaurentPolynomial::derivative_at_one(int k) const {
  Integer s(0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Integer falling(1);
    Integer e(low_ + static_cast<int>(i));
    for (int j = 0; j < k; ++j) falling *= e - Integer(j);
    s += coeffs_[i] * falling;
  }
  return s;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high_exponent(), o.high_exponent());
  std::vector<Integer> r(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(r);
  trim();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPolynomial(a.low_ + b.low_, std::move(r));
}

LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  // Long division from the top; exactness means the remainder vanishes.
  std::vector<Integer> rem = a.coefficients();
  const auto& bc = b.coefficients();
  if (rem.size() < bc.size()) throw std::domain_error("polynomial division is not exact");
  std::size_t qlen = rem.size() - bc.size() + 1;
  std::vector<Integer> q(qlen);
  for (std::size_t k = qlen; k-- > 0;) {
    const Integer& top = rem[k + bc.size() - 1];
    if (top.is_zero()) continue;
    Integer c = div_exact(top, bc.back());
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= c * bc[j];
    q[k] = std::move(c);
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  }
  return LaurentPolynomial(a.low_exponent() - b.low_exponent(), std::move(q));
}

std::string LaurentPolynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c.is_zero()) continue;
    int e = low_ + static_cast<int>(i);
    Integer mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Integer(1);
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace posknot
