#include "posknot/rational_cf.hpp"

#include <charconv>
#include <climits>
#include <numeric>
#include <optional>

#include "posknot/errors.hpp"

namespace posknot {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view token, std::string_view context) {
  token = trim(token);
  std::string_view digits = token;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("bad integer '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  if (token.front() == '+') token.remove_prefix(1);
  return Integer(token);
}

// Regular continued fraction of p/q for p, q > 0.
std::vector<Integer> regular_expansion(Integer p, Integer q) {
  std::vector<Integer> out;
  while (!q.is_zero()) {
    Integer a = floor_div(p, q);
    Integer r = p - a * q;
    out.push_back(std::move(a));
    p = std::move(q);
    q = std::move(r);
  }
  return out;
}

std::optional<ContinuedFraction> as_positive_form(const std::vector<Integer>& entries) {
  ContinuedFraction cf;
  for (const auto& e : entries) {
    if (e.sign() <= 0 || e > Integer(INT_MAX)) return std::nullopt;
    cf.entries.push_back(static_cast<int>(e.to_int64()));
  }
  if (!is_positive_knot_form(cf)) return std::nullopt;
  return cf;
}

}  // namespace

Rational eval_cf(const ContinuedFraction& cf) {
  if (cf.entries.empty()) throw InvalidInput("empty continued fraction");
  // Running tail value num/den, evaluated from the last entry outward.
  Integer num(cf.entries.back());
  Integer den(1);
  for (auto it = cf.entries.rbegin() + 1; it != cf.entries.rend(); ++it) {
    if (num.is_zero()) {
      throw ZeroDenominator("continued fraction " + format_cf(cf) + " has a zero tail");
    }
    Integer next = Integer(*it) * num + den;
    den = std::move(num);
    num = std::move(next);
  }
  Fraction f(num, den);
  return {f.num(), f.den()};
}

bool is_positive_knot_form(const ContinuedFraction& cf) {
  const auto& a = cf.entries;
  if (a.size() % 2 == 0) return false;
  long long sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) return false;
    if (i % 2 == 1 && a[i] % 2 != 0) return false;  // entries a2, a4, ... (1-based) must be even
    sum += a[i];
  }
  return sum % 2 == 1 && sum >= 3;
}

int crossing_count(const ContinuedFraction& cf) {
  return std::accumulate(cf.entries.begin(), cf.entries.end(), 0);
}

EvenContinuedFraction to_even_cf(const Rational& r) {
  const Integer& p = r.p;
  Integer q = r.q;
  if (abs(p) <= abs(q) || p.is_even() || gcd(p, q) != Integer(1)) {
    throw InvalidInput("even continued fraction needs |p| > |q|, p odd, gcd 1; got " + format_rational(r));
  }
  if (q.is_odd()) {
    Integer minus = q - p, plus = q + p;
    bool minus_ok = abs(minus) < abs(p), plus_ok = abs(plus) < abs(p);
    if (minus_ok && plus_ok) {
      q = minus.sign() < 0 ? minus : plus;
    } else {
      q = minus_ok ? minus : plus;
    }
  }
  EvenContinuedFraction out;
  Fraction x(p, q);
  for (;;) {
    Integer f = x.floor();
    Integer a = f.is_even() ? f : f + Integer(1);
    Fraction rest = x - Fraction(a);
    out.entries.push_back(std::move(a));
    if (rest.is_zero()) break;
    x = rest.reciprocal();
  }
  if (out.entries.size() % 2 != 0) {
    throw std::logic_error("odd-length even continued fraction for " + format_rational(r));
  }
  return out;
}

Rational eval_even_cf(const EvenContinuedFraction& ecf) {
  if (ecf.entries.empty()) throw InvalidInput("empty even continued fraction");
  Fraction x(ecf.entries.back());
  for (auto it = ecf.entries.rbegin() + 1; it != ecf.entries.rend(); ++it) {
    x = Fraction(*it) + x.reciprocal();
  }
  return {x.num(), x.den()};
}

CanonicalKnotKey canonical_key(const Rational& r) {
  Integer qm = mod(r.q, r.p);
  Integer qi = mod_inverse(qm, r.p);
  return {r.p, qm < qi ? qm : qi};
}

ContinuedFraction positive_cf_from_rational(const Rational& r) {
  if (r.p.sign() <= 0 || r.p.is_even() || gcd(r.p, r.q) != Integer(1)) {
    throw InvalidInput("expected p > 0 odd and gcd(p, q) = 1; got " + format_rational(r));
  }
  if (r.p == Integer(1)) throw NotPositiveKnot("C(1, q) is the unknot");
  Integer q = mod(r.q, r.p);
  // Every positive-entry expansion of p/q is one of the two regular ones
  // ([..., a] and [..., a - 1, 1]); at most one has odd length.
  std::vector<Integer> regular = regular_expansion(r.p, q);
  if (auto cf = as_positive_form(regular)) return *cf;
  if (regular.back() > Integer(1)) {
    std::vector<Integer> alt = regular;
    alt.back() -= Integer(1);
    alt.emplace_back(1);
    if (auto cf = as_positive_form(alt)) return *cf;
  }
  throw NotPositiveKnot("C(" + r.p.to_string() + "," + r.q.to_string() +
                        ") has no positive continued fraction form");
}

ContinuedFraction parse_cf(std::string_view text) {
  ContinuedFraction cf;
  std::string_view rest = trim(text);
  if (rest.empty()) throw ParseError("empty continued fraction");
  for (;;) {
    auto comma = rest.find(',');
    std::string_view token = trim(rest.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("bad continued fraction entry '" + std::string(token) + "' in '" +
                       std::string(text) + "'");
    }
    cf.entries.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return cf;
}

std::string format_cf(const ContinuedFraction& cf) {
  std::string out;
  for (std::size_t i = 0; i < cf.entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(cf.entries[i]);
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw ParseError("expected p/q, got '" + std::string(text) + "'");
  Integer p = parse_integer(text.substr(0, slash), text);
  Integer q = parse_integer(text.substr(slash + 1), text);
  if (q.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return {std::move(p), std::move(q)};
}

std::string format_rational(const Rational& r) { return r.p.to_string() + "/" + r.q.to_string(); }

}  // namespace posknot
