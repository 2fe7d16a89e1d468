#include "posknot/oracles.hpp"

#include <map>
#include <string>

#include "posknot/errors.hpp"

namespace posknot {

SeifertMatrix seifert_matrix(const ContinuedFraction& cf) {
  if (!is_positive_knot_form(cf)) throw InvalidInput(format_cf(cf) + " is not a positive knot form");
  std::vector<Integer> diagonal;
  for (std::size_t i = 0; i < cf.entries.size(); ++i) {
    int a = cf.entries[i];
    if (i % 2 == 0) {
      for (int k = 0; k < a - 1; ++k) diagonal.emplace_back(-1);
    } else {
      diagonal.emplace_back(-1 - a / 2);
    }
  }
  SeifertMatrix s;
  s.dim = diagonal.size();
  s.cells.assign(s.dim * s.dim, Integer(0));
  for (std::size_t k = 0; k < s.dim; ++k) {
    s.at(k, k) = diagonal[k];
    if (k > 0) s.at(k, k - 1) = Integer(1);
  }
  return s;
}

namespace {

// Bareiss elimination; every division is exact in Z[t].
LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPolynomial(Integer(1));
  LaurentPolynomial previous(Integer(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      }
    }
    previous = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

AlexanderPolynomial normalize_alexander(const LaurentPolynomial& raw) {
  if (raw.is_zero()) throw std::logic_error("Alexander polynomial vanishes");
  int span = raw.high_exponent() - raw.low_exponent();
  if (span % 2 != 0) throw std::logic_error("Alexander polynomial has odd span: " + raw.to_string());
  LaurentPolynomial centred = raw.shifted(-raw.low_exponent() - span / 2);
  Integer at_one = centred.sum_of_coefficients();
  if (at_one == Integer(-1)) {
    centred = -centred;
  } else if (at_one != Integer(1)) {
    throw std::logic_error("Delta(1) = " + at_one.to_string() + " for " + raw.to_string());
  }
  return {centred};
}

AlexanderPolynomial alexander_from_seifert(const SeifertMatrix& s) {
  const LaurentPolynomial t = LaurentPolynomial::monomial(Integer(1), 1);
  std::vector<std::vector<LaurentPolynomial>> m(s.dim, std::vector<LaurentPolynomial>(s.dim));
  for (std::size_t i = 0; i < s.dim; ++i) {
    for (std::size_t j = 0; j < s.dim; ++j) {
      m[i][j] = t * LaurentPolynomial(s.at(i, j)) - LaurentPolynomial(s.at(j, i));
    }
  }
  return normalize_alexander(determinant(std::move(m)));
}

AlexanderPolynomial alexander_from_conway(const ConwayPolynomial& poly) {
  if (!poly.has_only_even_powers()) throw InvalidInput("Conway polynomial of a knot has only even powers");
  const LaurentPolynomial z_squared(-1, {Integer(1), Integer(-2), Integer(1)});
  LaurentPolynomial sum, power(Integer(1));
  for (std::size_t k = 0; k < poly.coefficients().size(); k += 2) {
    sum += LaurentPolynomial(poly.coefficients()[k]) * power;
    power = power * z_squared;
  }
  return normalize_alexander(sum);
}

// ---------------------------------------------------------------------------
// 4-plat diagram

PlatDiagram plat_diagram(const ContinuedFraction& cf) {
  PlatDiagram d;
  std::array<int, 4> current{};
  for (int& e : current) e = d.edge_count++;
  d.left_caps = {{{current[0], current[1]}, {current[2], current[3]}}};

  for (std::size_t i = 0; i < cf.entries.size(); ++i) {
    if (cf.entries[i] < 0) throw InvalidInput("plat diagram needs non-negative entries: " + format_cf(cf));
    const bool odd_region = i % 2 == 0;
    const int upper = odd_region ? 1 : 0;
    for (int k = 0; k < cf.entries[i]; ++k) {
      PlatCrossing c{};
      c.upper_strand = upper;
      c.in_top = current[upper];
      c.in_bottom = current[upper + 1];
      c.out_top = d.edge_count++;
      c.out_bottom = d.edge_count++;
      c.over_from_top = odd_region;
      current[upper] = c.out_top;
      current[upper + 1] = c.out_bottom;
      d.crossings.push_back(c);
    }
  }
  d.right_caps = {{{current[0], current[1]}, {current[2], current[3]}}};

  // Each edge has a left end (2e) and a right end (2e + 1); join ends that
  // meet at caps and crossings, then walk the single component.
  std::vector<int> joined(2 * static_cast<std::size_t>(d.edge_count), -1);
  auto join = [&](int a, int b) {
    joined[static_cast<std::size_t>(a)] = b;
    joined[static_cast<std::size_t>(b)] = a;
  };
  for (const auto& [a, b] : d.left_caps) join(2 * a, 2 * b);
  for (const auto& [a, b] : d.right_caps) join(2 * a + 1, 2 * b + 1);
  for (const auto& c : d.crossings) {
    join(2 * c.in_top + 1, 2 * c.out_bottom);
    join(2 * c.in_bottom + 1, 2 * c.out_top);
  }

  d.edge_direction.assign(static_cast<std::size_t>(d.edge_count), 0);
  int end = 0;  // enter edge 0 at its left end
  int visited = 0;
  while (d.edge_direction[static_cast<std::size_t>(end / 2)] == 0) {
    const int edge = end / 2;
    const bool entered_left = end % 2 == 0;
    d.edge_direction[static_cast<std::size_t>(edge)] = entered_left ? 1 : -1;
    ++visited;
    end = joined[static_cast<std::size_t>(entered_left ? 2 * edge + 1 : 2 * edge)];
  }
  if (visited != d.edge_count) throw InvalidInput(format_cf(cf) + " closes to a link, not a knot");

  for (auto& c : d.crossings) {
    // Plane coordinates with y up: in_top -> out_bottom runs along (1, -1).
    const int da = d.edge_direction[static_cast<std::size_t>(c.in_top)];
    const int db = d.edge_direction[static_cast<std::size_t>(c.in_bottom)];
    const std::array<int, 2> strand_a{da, -da};
    const std::array<int, 2> strand_b{db, db};
    const auto& over = c.over_from_top ? strand_a : strand_b;
    const auto& under = c.over_from_top ? strand_b : strand_a;
    c.sign = over[0] * under[1] - over[1] * under[0] > 0 ? 1 : -1;
  }
  return d;
}

int writhe(const PlatDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings) w += c.sign;
  return w;
}

LaurentPolynomial kauffman_bracket(const PlatDiagram& d) {
  // Left of any vertical cut the diagram is a tangle meeting the cut in four
  // points; its bracket is a combination of the two planar matchings of
  // those points. Sweep the crossings left to right updating that pair.
  using Matching = std::array<int, 4>;
  const LaurentPolynomial a_weight = LaurentPolynomial::monomial(Integer(1), 1);
  const LaurentPolynomial b_weight = LaurentPolynomial::monomial(Integer(1), -1);
  const LaurentPolynomial loop = LaurentPolynomial(-2, {Integer(-1), Integer(0), Integer(0), Integer(0), Integer(-1)});

  std::map<Matching, LaurentPolynomial> state;
  state[{1, 0, 3, 2}] = LaurentPolynomial(Integer(1));

  for (const auto& c : d.crossings) {
    const int i = c.upper_strand, j = c.upper_strand + 1;
    std::map<Matching, LaurentPolynomial> next;
    for (const auto& [m, coeff] : state) {
      // Smoothing that keeps the strands running left to right.
      const LaurentPolynomial& through = c.over_from_top ? a_weight : b_weight;
      next[m] += coeff * through;

      // Smoothing that caps i with j on both sides.
      const LaurentPolynomial& capped = c.over_from_top ? b_weight : a_weight;
      if (m[i] == j) {
        next[m] += coeff * capped * loop;
      } else {
        Matching r = m;
        r[m[i]] = m[j];
        r[m[j]] = m[i];
        r[i] = j;
        r[j] = i;
        next[r] += coeff * capped;
      }
    }
    state = std::move(next);
  }

  LaurentPolynomial bracket;
  for (const auto& [m, coeff] : state) {
    const bool two_loops = m[0] == 1 && m[2] == 3;  // closes against caps (0,1) and (2,3)
    bracket += two_loops ? coeff * loop : coeff;
  }
  return bracket;
}

JonesPolynomial jones_poly(const ContinuedFraction& cf) {
  const PlatDiagram d = plat_diagram(cf);
  const int w = writhe(d);
  LaurentPolynomial f = kauffman_bracket(d).shifted(-3 * w);
  if (w % 2 != 0) f = -f;
  std::vector<Integer> coeffs;
  if (f.is_zero()) return {};
  // A^e -> t^(-e/4)
  for (int e = f.low_exponent(); e <= f.high_exponent(); ++e) {
    const Integer c = f.coefficient(e);
    if (!c.is_zero() && e % 4 != 0) throw std::logic_error("fractional power of t in Jones polynomial of " + format_cf(cf));
  }
  for (int e = f.high_exponent(); e >= f.low_exponent(); e -= 4) coeffs.push_back(f.coefficient(e));
  return {LaurentPolynomial(-f.high_exponent() / 4, std::move(coeffs))};
}

Integer v3_from_jones(const JonesPolynomial& v) {
  const Integer second = v.poly.derivative_at_one(2);
  const Integer third = v.poly.derivative_at_one(3);
  const Integer numerator = -(third + Integer(3) * second);
  if (!mod(numerator, Integer(36)).is_zero()) {
    throw NonIntegerResult("v3 = " + numerator.to_string() + "/36 is not an integer");
  }
  return div_exact(numerator, Integer(36));
}

}  // namespace posknot
