#pragma once

#include "posknot/conway_skein.hpp"
#include "posknot/integer.hpp"
#include "posknot/rational_cf.hpp"

namespace posknot {

struct InvariantSet {
  Integer a2;
  Integer a4;
  Integer det;
  int genus = 0;
  Integer v3;

  friend bool operator==(const InvariantSet&, const InvariantSet&) = default;
};

/// (a1 + a3 + ... - 1) / 2 for a positive-form word.
int genus_closed(const ContinuedFraction& cf);

/// Half the length of the even continued fraction.
int genus_even(const EvenContinuedFraction& ecf);

/// For ecf = [2b1, 2c1, ..., 2bn, 2cn]:
///   v3 = ( sum_k c_k (b_1 + ... + b_k)^2 - sum_k b_k (c_k + ... + c_n)^2 ) / 2
/// Throws NonIntegerResult when the bracket is odd and InvalidInput on a
/// malformed fraction.
Integer v3_even(const EvenContinuedFraction& ecf);

/// Invariants of a positive-form word: a2, a4 and det from the Conway
/// polynomial, genus and v3 from the even continued fraction.
///
/// Cross-checks that are cheap enough for the sweep loop run here and throw
/// std::logic_error on disagreement: det = p, genus_closed = genus_even,
/// deg(nabla) = 2g, and v3 != 0.
InvariantSet compute_invariants(const ContinuedFraction& cf, MemoStore* memo);

}  // namespace posknot
