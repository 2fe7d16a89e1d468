#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "posknot/conway_skein.hpp"
#include "posknot/integer.hpp"
#include "posknot/laurent.hpp"
#include "posknot/rational_cf.hpp"

// Ground-truth invariants computed by routes that share nothing with the
// skein recursion or the even continued fraction. Validation paths only.
namespace posknot {

/// Square integer matrix, row-major.
struct SeifertMatrix {
  std::size_t dim = 0;
  std::vector<Integer> cells;

  const Integer& at(std::size_t i, std::size_t j) const { return cells[i * dim + j]; }
  Integer& at(std::size_t i, std::size_t j) { return cells[i * dim + j]; }
  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;
};

/// Alexander polynomial in t, centred so the exponents run from -d to d and
/// signed so that Delta(1) = 1.
struct AlexanderPolynomial {
  LaurentPolynomial poly;
  friend bool operator==(const AlexanderPolynomial&, const AlexanderPolynomial&) = default;
};

struct JonesPolynomial {
  LaurentPolynomial poly;
  friend bool operator==(const JonesPolynomial&, const JonesPolynomial&) = default;
};

/// Lower-bidiagonal Seifert form of a positive-form word: diagonal blocks of
/// a_i - 1 entries -1 for odd i, single entries -1 - a_i/2 for even i, and 1
/// on the whole subdiagonal. Dimension is 2 * genus.
SeifertMatrix seifert_matrix(const ContinuedFraction& cf);

/// det(tS - S^T) by fraction-free elimination over Z[t], then normalized.
AlexanderPolynomial alexander_from_seifert(const SeifertMatrix& s);

/// Substitutes z^2 = t - 2 + t^-1. Throws InvalidInput on odd powers.
AlexanderPolynomial alexander_from_conway(const ConwayPolynomial& poly);

/// Centre and sign a raw determinant. Throws std::logic_error when the
/// exponent span is odd or Delta(1) is not +-1.
AlexanderPolynomial normalize_alexander(const LaurentPolynomial& raw);

/// Explicit 4-plat diagram. Strands are numbered 0..3 from the top; odd
/// 1-based regions twist strands 1 and 2, even ones strands 0 and 1, with
/// opposite handedness so the diagram alternates. The ends are capped
/// (0,1) and (2,3) on both sides.
struct PlatCrossing {
  int upper_strand;  // twists strands upper_strand and upper_strand + 1
  int in_top, in_bottom, out_top, out_bottom;  // edge ids left/right of the crossing
  bool over_from_top;  // the strand entering at in_top passes over
  int sign;            // +1 / -1 under the traced orientation
};

struct PlatDiagram {
  int edge_count = 0;
  std::vector<PlatCrossing> crossings;
  std::array<std::pair<int, int>, 2> left_caps{};
  std::array<std::pair<int, int>, 2> right_caps{};
  std::vector<int> edge_direction;  // +1 left-to-right, -1 right-to-left
};

/// Builds and orients the diagram. Throws InvalidInput for negative entries
/// or when the closure has more than one component.
PlatDiagram plat_diagram(const ContinuedFraction& cf);
int writhe(const PlatDiagram& d);

/// Kauffman bracket in A, normalized so the round circle is 1.
LaurentPolynomial kauffman_bracket(const PlatDiagram& d);

/// V(t) = (-A^3)^(-w) <D> at A = t^(-1/4). Positive diagrams give
/// positive-degree polynomials, e.g. t + t^3 - t^4 for [3].
JonesPolynomial jones_poly(const ContinuedFraction& cf);

/// -V'''(1)/36 - V''(1)/12, exactly. Throws NonIntegerResult.
Integer v3_from_jones(const JonesPolynomial& v);

}  // namespace posknot
