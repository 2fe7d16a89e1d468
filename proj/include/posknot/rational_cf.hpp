#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "posknot/fraction.hpp"
#include "posknot/integer.hpp"

namespace posknot {

/// Twist-region word [a1, ..., am] of a 4-plat diagram. Entry i counts the
/// half twists in box i; odd-indexed boxes sit on the bottom row.
struct ContinuedFraction {
  std::vector<int> entries;

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
  friend auto operator<=>(const ContinuedFraction&, const ContinuedFraction&) = default;
};

/// A pair (p, q) naming the 2-bridge knot or link C(p, q).
struct Rational {
  Integer p;
  Integer q;

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// All-even, even-length expansion [2b1, 2c1, ..., 2bn, 2cn].
struct EvenContinuedFraction {
  std::vector<Integer> entries;

  friend bool operator==(const EvenContinuedFraction&, const EvenContinuedFraction&) = default;
};

/// (p, min(q mod p, q^-1 mod p)); equal for every presentation of one knot.
struct CanonicalKnotKey {
  Integer p;
  Integer q_star;

  friend bool operator==(const CanonicalKnotKey&, const CanonicalKnotKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKnotKey& a, const CanonicalKnotKey& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.q_star <=> b.q_star;
  }
};

/// Nested-fraction value a1 + 1/(a2 + 1/(...)) in lowest terms, q > 0.
/// Throws ZeroDenominator if a reciprocal of zero is required, InvalidInput on an empty word.
Rational eval_cf(const ContinuedFraction& cf);

/// Odd length, all entries >= 1, even-indexed entries even, odd sum >= 3.
bool is_positive_knot_form(const ContinuedFraction& cf);

int crossing_count(const ContinuedFraction& cf);

/// Even continued fraction of C(p, q); for odd q, q is first shifted by p into (-|p|, |p|).
/// Throws InvalidInput unless |p| > |q|, p odd and gcd(p, q) = 1.
EvenContinuedFraction to_even_cf(const Rational& r);

/// Nested-fraction value of an even continued fraction.
Rational eval_even_cf(const EvenContinuedFraction& ecf);

CanonicalKnotKey canonical_key(const Rational& r);

/// The positive-form word whose value is p / (q mod p). Throws NotPositiveKnot when none exists.
ContinuedFraction positive_cf_from_rational(const Rational& r);

/// "2,2,1" <-> {2,2,1}. parse_cf throws ParseError.
ContinuedFraction parse_cf(std::string_view text);
std::string format_cf(const ContinuedFraction& cf);

/// "7/3" <-> {7,3}. parse_rational throws ParseError.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

}  // namespace posknot
