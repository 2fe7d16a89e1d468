#include "posknot/enumeration.hpp"

#include <numeric>
#include <set>
#include <string>

#include "posknot/errors.hpp"

namespace posknot {

namespace {

// Appends entries summing to `remaining`; the current length decides whether
// the next slot is unconstrained (odd 1-based index) or must be even.
void extend(ContinuedFraction& word, int remaining, const CfVisitor& visit) {
  const bool odd_slot = word.entries.size() % 2 == 0;  // 1-based index is odd
  if (odd_slot) {
    // An odd-slot entry either ends the word or is followed by >= 2 + 1 more.
    for (int a = 1; a <= remaining - 3; ++a) {
      word.entries.push_back(a);
      extend(word, remaining - a, visit);
      word.entries.pop_back();
    }
    word.entries.push_back(remaining);
    visit(word);
    word.entries.pop_back();
  } else {
    for (int e = 2; e <= remaining - 1; e += 2) {
      word.entries.push_back(e);
      extend(word, remaining - e, visit);
      word.entries.pop_back();
    }
  }
}

}  // namespace

DedupMode parse_dedup_mode(std::string_view text) {
  if (text == "presentations") return DedupMode::presentations;
  if (text == "canonical") return DedupMode::canonical;
  throw ParseError("dedup mode must be 'presentations' or 'canonical', got '" + std::string(text) + "'");
}

std::string_view to_string(DedupMode mode) {
  return mode == DedupMode::canonical ? "canonical" : "presentations";
}

void EnumerationPlan::validate() const {
  if (max_crossings < 3) throw InvalidInput("max_crossings must be >= 3, got " + std::to_string(max_crossings));
}

std::uint64_t KnotCensus::total_presentations() const {
  return std::accumulate(presentations.begin(), presentations.end(), std::uint64_t{0},
                         [](std::uint64_t s, const auto& kv) { return s + kv.second; });
}

std::uint64_t KnotCensus::total_canonical_keys() const {
  return std::accumulate(canonical_keys.begin(), canonical_keys.end(), std::uint64_t{0},
                         [](std::uint64_t s, const auto& kv) { return s + kv.second; });
}

void for_each_in_band(int crossings, std::optional<int> leading, const CfVisitor& visit) {
  if (crossings < 3 || crossings % 2 == 0) return;
  ContinuedFraction word;
  if (!leading) {
    extend(word, crossings, visit);
    return;
  }
  int a = *leading;
  if (a < 1 || a > crossings) return;
  word.entries.push_back(a);
  if (a == crossings) {
    visit(word);
  } else if (a <= crossings - 3) {
    extend(word, crossings - a, visit);
  }
}

void enumerate_presentations(const EnumerationPlan& plan, const CfVisitor& visit) {
  plan.validate();
  for (int s = 3; s <= plan.max_crossings; s += 2) {
    if (plan.dedup_mode == DedupMode::presentations) {
      for_each_in_band(s, std::nullopt, visit);
      continue;
    }
    // Presentations of one knot share a crossing number, so dedup is per band.
    std::set<CanonicalKnotKey> seen;
    for_each_in_band(s, std::nullopt, [&](const ContinuedFraction& cf) {
      if (seen.insert(canonical_key(eval_cf(cf))).second) visit(cf);
    });
  }
}

std::vector<ContinuedFraction> collect_presentations(const EnumerationPlan& plan) {
  std::vector<ContinuedFraction> out;
  enumerate_presentations(plan, [&](const ContinuedFraction& cf) { out.push_back(cf); });
  return out;
}

KnotCensus census(const EnumerationPlan& plan) {
  plan.validate();
  KnotCensus c;
  std::set<CanonicalKnotKey> earlier_bands;
  for (int s = 3; s <= plan.max_crossings; s += 2) {
    std::set<CanonicalKnotKey> band;
    std::uint64_t count = 0;
    for_each_in_band(s, std::nullopt, [&](const ContinuedFraction& cf) {
      ++count;
      CanonicalKnotKey key = canonical_key(eval_cf(cf));
      if (key.p == Integer(1)) throw std::logic_error("unknot key from " + format_cf(cf));
      if (earlier_bands.count(key)) {
        throw std::logic_error("key of " + format_cf(cf) + " also appears at a lower crossing number");
      }
      band.insert(std::move(key));
    });
    c.presentations[s] = count;
    c.canonical_keys[s] = band.size();
    earlier_bands.merge(band);
  }
  return c;
}

}  // namespace posknot
