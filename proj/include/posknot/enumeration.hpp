#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "posknot/rational_cf.hpp"

namespace posknot {

enum class DedupMode { presentations, canonical };

DedupMode parse_dedup_mode(std::string_view text);  // throws ParseError
std::string_view to_string(DedupMode mode);

struct EnumerationPlan {
  int max_crossings = 3;
  DedupMode dedup_mode = DedupMode::presentations;

  void validate() const;  // throws InvalidInput when max_crossings < 3
};

/// Per-crossing-number counts. Totals are sums over the maps.
struct KnotCensus {
  std::map<int, std::uint64_t> presentations;
  std::map<int, std::uint64_t> canonical_keys;

  std::uint64_t total_presentations() const;
  std::uint64_t total_canonical_keys() const;
};

using CfVisitor = std::function<void(const ContinuedFraction&)>;

/// Positive-form words with entry sum exactly `crossings`, in lexicographic
/// order. With `leading` set, only words whose first entry equals it.
void for_each_in_band(int crossings, std::optional<int> leading, const CfVisitor& visit);

/// Every positive-form word with sum <= max_crossings: bands 3, 5, 7, ... in
/// turn, lexicographic within a band. In canonical mode only the first word
/// of each knot is emitted.
void enumerate_presentations(const EnumerationPlan& plan, const CfVisitor& visit);
std::vector<ContinuedFraction> collect_presentations(const EnumerationPlan& plan);

/// Counts presentations and distinct canonical keys per crossing number.
/// Throws std::logic_error if one key shows up under two crossing numbers.
KnotCensus census(const EnumerationPlan& plan);

}  // namespace posknot
