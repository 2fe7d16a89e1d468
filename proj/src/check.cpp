#include "posknot/check.hpp"

#include <sstream>

#include "posknot/errors.hpp"
#include "posknot/oracles.hpp"

namespace posknot {

bool CheckResult::verified() const {
  for (const auto& c : comparisons) {
    if (!c.agree) return false;
  }
  return true;
}

std::string CheckResult::report() const {
  const auto& r = record;
  std::ostringstream os;
  os << "knot     C(" << r.key.p << ", " << r.key.q_star << ")  cf " << format_cf(r.cf) << "  crossings "
     << r.crossings() << "\n"
     << "a2 " << r.inv.a2 << "  a4 " << r.inv.a4 << "  det " << r.inv.det << "  genus " << r.inv.genus << "  v3 "
     << r.inv.v3 << "\n"
     << "lhs " << r.lhs << "  rhs " << r.rhs << "\n"
     << "verdict  " << to_string(r.verdict) << "\n";
  if (r.quotient) os << "quotient " << r.quotient->to_string() << "  s_k " << r.s_k->to_string() << "\n";
  if (!comparisons.empty()) {
    for (const auto& c : comparisons) {
      os << (c.agree ? "  ok   " : "  FAIL ") << c.name << ": " << c.fast;
      if (c.fast != c.oracle) os << " vs " << c.oracle;
      os << "\n";
    }
    os << (verified() ? "all routes agree" : "ROUTES DISAGREE") << "\n";
  }
  return os.str();
}

namespace {

void add(std::vector<RouteComparison>& out, std::string name, const std::string& fast, const std::string& oracle) {
  out.push_back({std::move(name), fast, oracle, fast == oracle});
}

std::vector<RouteComparison> compare_routes(const ObstructionRecord& r) {
  std::vector<RouteComparison> out;
  const ConwayPolynomial nabla = conway(r.cf, nullptr);
  const SeifertMatrix seifert = seifert_matrix(r.cf);
  const AlexanderPolynomial from_conway = alexander_from_conway(nabla);
  const AlexanderPolynomial from_seifert = alexander_from_seifert(seifert);
  add(out, "alexander (conway / seifert)", from_conway.poly.to_string(), from_seifert.poly.to_string());

  const Integer alexander_det = abs(from_seifert.poly.value_at_minus_one());
  add(out, "det (conway / p)", r.inv.det.to_string(), r.key.p.to_string());
  add(out, "det (conway / |alexander(-1)|)", r.inv.det.to_string(), alexander_det.to_string());

  const int g_closed = genus_closed(r.cf);
  const int g_even = genus_even(to_even_cf(eval_cf(r.cf)));
  const int g_seifert = static_cast<int>(seifert.dim / 2);
  add(out, "genus (record / closed form)", std::to_string(r.inv.genus), std::to_string(g_closed));
  add(out, "genus (record / even fraction)", std::to_string(r.inv.genus), std::to_string(g_even));
  add(out, "genus (record / alexander span)", std::to_string(r.inv.genus),
      std::to_string(from_seifert.poly.high_exponent()));
  add(out, "genus (record / seifert rank)", std::to_string(r.inv.genus), std::to_string(g_seifert));

  const Integer jones_v3 = v3_from_jones(jones_poly(r.cf));
  add(out, "v3 (even fraction / jones)", r.inv.v3.to_string(), jones_v3.to_string());
  return out;
}

}  // namespace

CheckResult check_one(const ContinuedFraction& cf, bool verify) {
  if (!is_positive_knot_form(cf)) {
    throw NotPositiveKnot("[" + format_cf(cf) + "] is not a positive-form word of a knot");
  }
  CheckResult result{check(cf, nullptr), {}};
  if (verify) result.comparisons = compare_routes(result.record);
  return result;
}

CheckResult check_one(const Rational& r, bool verify) { return check_one(positive_cf_from_rational(r), verify); }

}  // namespace posknot
