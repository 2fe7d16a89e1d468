#pragma once

#include <string>
#include <vector>

#include "posknot/obstruction.hpp"
#include "posknot/rational_cf.hpp"

namespace posknot {

struct RouteComparison {
  std::string name;
  std::string fast;    // value from the sweep route
  std::string oracle;  // value from the independent route
  bool agree = false;
};

struct CheckResult {
  ObstructionRecord record;
  std::vector<RouteComparison> comparisons;  // filled only when verifying

  bool verified() const;
  /// Human-readable multi-line report ending in a newline.
  std::string report() const;
};

/// Runs the obstruction on one knot. With verify set, every invariant is also
/// recomputed through the Seifert matrix and the Jones polynomial.
CheckResult check_one(const ContinuedFraction& cf, bool verify);
/// Converts p/q to its positive-form word first; throws NotPositiveKnot.
CheckResult check_one(const Rational& r, bool verify);

}  // namespace posknot
