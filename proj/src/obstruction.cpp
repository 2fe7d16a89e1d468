#include "posknot/obstruction.hpp"

#include <string>

#include "posknot/errors.hpp"

namespace posknot {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ExcludedTorus:
      return "ExcludedTorus";
    case Verdict::ObstructionHolds:
      return "ObstructionHolds";
    case Verdict::ObstructionInconclusive:
      return "ObstructionInconclusive";
  }
  return "?";
}

Integer lhs(const InvariantSet& inv) {
  if (inv.det.is_even()) throw InvalidInput("knot determinant must be odd, got " + inv.det.to_string());
  return inv.v3 * (div_exact(inv.det - Integer(5), Integer(2)) + Integer(3 * inv.genus));
}

Integer rhs(const InvariantSet& inv) {
  return Integer(7) * inv.a2 * inv.a2 - inv.a2 - Integer(10) * inv.a4;
}

bool is_two_strand_torus(const CanonicalKnotKey& key) { return key.q_star == Integer(1); }

ObstructionRecord make_record(const ContinuedFraction& cf, const InvariantSet& inv) {
  if (inv.v3.is_zero()) throw std::logic_error("v3 = 0 for " + format_cf(cf));
  ObstructionRecord r;
  r.key = canonical_key(eval_cf(cf));
  r.cf = cf;
  r.inv = inv;
  r.lhs = lhs(inv);
  r.rhs = rhs(inv);
  if (is_two_strand_torus(r.key)) {
    r.verdict = Verdict::ExcludedTorus;
  } else {
    r.verdict = r.lhs == r.rhs ? Verdict::ObstructionInconclusive : Verdict::ObstructionHolds;
  }
  r.complexity = r.key.p + r.key.q_star;
  if (!r.rhs.is_zero()) {
    r.quotient = Fraction(abs(r.lhs), abs(r.rhs));
    r.s_k = *r.quotient / Fraction(r.key.q_star);
  }
  return r;
}

ObstructionRecord check(const ContinuedFraction& cf, MemoStore* memo) {
  return make_record(cf, compute_invariants(cf, memo));
}

std::string Slope::to_string() const {
  if (den.is_zero()) return "inf";
  return num.to_string() + "/" + den.to_string();
}

std::pair<Slope, Slope> torus_cc_slopes(int n, int m) {
  if (n < 1 || m < 0) throw InvalidInput("torus_cc_slopes needs n >= 1 and m >= 0");
  const Integer odd(2 * static_cast<long long>(m) + 1);
  const Integer numerator = Integer(2) * Integer(n) * Integer(n) * odd;
  auto slope = [&](const Integer& den) -> Slope {
    if (den.is_zero()) return {Integer(1), Integer(0)};
    Fraction f(numerator, den);
    return {f.num(), f.den()};
  };
  const Integer base = Integer(n) * odd;
  return {slope(base + Integer(1)), slope(base - Integer(1))};
}

}  // namespace posknot
