#include "posknot/invariants.hpp"

#include <string>

#include "posknot/errors.hpp"

namespace posknot {

int genus_closed(const ContinuedFraction& cf) {
  int odd_sum = 0;
  for (std::size_t i = 0; i < cf.entries.size(); i += 2) odd_sum += cf.entries[i];
  return (odd_sum - 1) / 2;
}

int genus_even(const EvenContinuedFraction& ecf) { return static_cast<int>(ecf.entries.size() / 2); }

Integer v3_even(const EvenContinuedFraction& ecf) {
  const auto& e = ecf.entries;
  if (e.empty() || e.size() % 2 != 0) throw InvalidInput("even continued fraction must have even length");
  const std::size_t n = e.size() / 2;
  std::vector<Integer> b(n), c(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (e[2 * k].is_odd() || e[2 * k + 1].is_odd() || e[2 * k].is_zero() || e[2 * k + 1].is_zero()) {
      throw InvalidInput("even continued fraction entries must be even and nonzero");
    }
    b[k] = div_exact(e[2 * k], Integer(2));
    c[k] = div_exact(e[2 * k + 1], Integer(2));
  }

  Integer first(0), prefix_b(0);
  for (std::size_t k = 0; k < n; ++k) {
    prefix_b += b[k];
    first += c[k] * prefix_b * prefix_b;
  }
  Integer second(0), suffix_c(0);
  for (std::size_t k = n; k-- > 0;) {
    suffix_c += c[k];
    second += b[k] * suffix_c * suffix_c;
  }
  Integer twice = first - second;
  if (twice.is_odd()) throw NonIntegerResult("v3 bracket " + twice.to_string() + " is odd");
  return div_exact(twice, Integer(2));
}

InvariantSet compute_invariants(const ContinuedFraction& cf, MemoStore* memo) {
  if (!is_positive_knot_form(cf)) throw InvalidInput(format_cf(cf) + " is not a positive knot form");

  const ConwayPolynomial nabla = conway(cf, memo);
  const Rational r = eval_cf(cf);
  const EvenContinuedFraction ecf = to_even_cf(r);

  InvariantSet inv;
  inv.a2 = a2(nabla);
  inv.a4 = a4(nabla);
  inv.det = determinant(nabla);
  inv.genus = genus_even(ecf);
  inv.v3 = v3_even(ecf);

  const std::string where = " for " + format_cf(cf);
  if (inv.det != r.p) throw std::logic_error("det " + inv.det.to_string() + " != p " + r.p.to_string() + where);
  if (inv.genus != genus_closed(cf)) throw std::logic_error("genus routes disagree" + where);
  if (nabla.degree() != 2 * inv.genus) throw std::logic_error("deg nabla != 2g" + where);
  if (inv.v3.is_zero()) throw std::logic_error("v3 = 0" + where);
  return inv;
}

}  // namespace posknot
