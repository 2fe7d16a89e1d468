#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "posknot/conway_skein.hpp"
#include "posknot/fraction.hpp"
#include "posknot/invariants.hpp"
#include "posknot/rational_cf.hpp"

namespace posknot {

enum class Verdict {
  ExcludedTorus,            // (2, 2n+1) torus knot; the formula does not apply
  ObstructionHolds,         // lhs != rhs: no chirally cosmetic surgery
  ObstructionInconclusive,  // lhs == rhs
};

std::string_view to_string(Verdict v);

/// Per-knot result. `q` below always means the canonical key's q_star, so two
/// presentations of one knot give records that differ only in `cf`.
struct ObstructionRecord {
  CanonicalKnotKey key;
  ContinuedFraction cf;
  InvariantSet inv;
  Integer lhs;
  Integer rhs;
  Verdict verdict = Verdict::ObstructionHolds;
  Integer complexity;              // p + q
  std::optional<Fraction> quotient;  // |lhs| / |rhs|; empty when rhs == 0
  std::optional<Fraction> s_k;       // quotient / q

  int crossings() const { return crossing_count(cf); }
  bool rhs_zero() const { return rhs.is_zero(); }
  friend bool operator==(const ObstructionRecord&, const ObstructionRecord&) = default;
};

/// v3 * ((det - 5)/2 + 3g). Throws InvalidInput for even det.
Integer lhs(const InvariantSet& inv);
/// 7 a2^2 - a2 - 10 a4.
Integer rhs(const InvariantSet& inv);

bool is_two_strand_torus(const CanonicalKnotKey& key);

ObstructionRecord make_record(const ContinuedFraction& cf, const InvariantSet& inv);
ObstructionRecord check(const ContinuedFraction& cf, MemoStore* memo);

/// A surgery slope; den == 0 stands for infinity.
struct Slope {
  Integer num;
  Integer den;
  friend bool operator==(const Slope&, const Slope&) = default;
  std::string to_string() const;
};

/// Chirally cosmetic slope pair 2n^2(2m+1) / (n(2m+1) + 1) and
/// 2n^2(2m+1) / (n(2m+1) - 1) of the (2, 2n+1) torus knot.
std::pair<Slope, Slope> torus_cc_slopes(int n, int m);

}  // namespace posknot
