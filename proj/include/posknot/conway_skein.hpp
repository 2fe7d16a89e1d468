#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "posknot/integer.hpp"
#include "posknot/rational_cf.hpp"

namespace posknot {

/// Which row of the 4-plat the leading twist region sits on. Bottom-row
/// regions correspond to odd 1-based indices of the original word.
enum class Row : std::uint8_t { bottom = 0, top = 1 };

/// Intermediate diagram met while untangling a 4-plat from the left.
struct LinkState {
  std::vector<int> entries;
  Row leading_row = Row::bottom;

  static LinkState from_cf(const ContinuedFraction& cf) { return {cf.entries, Row::bottom}; }

  bool is_terminal() const;
  friend bool operator==(const LinkState&, const LinkState&) = default;
};

/// Polynomial in z with arbitrary precision coefficients; index = exponent.
class ConwayPolynomial {
 public:
  ConwayPolynomial() = default;
  explicit ConwayPolynomial(std::vector<Integer> coefficients);

  static ConwayPolynomial one() { return ConwayPolynomial({Integer(1)}); }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool has_only_even_powers() const;
  bool has_only_odd_powers() const;

  ConwayPolynomial times_z() const;
  ConwayPolynomial& operator+=(const ConwayPolynomial& o);
  friend ConwayPolynomial operator+(ConwayPolynomial a, const ConwayPolynomial& b) { return a += b; }
  friend bool operator==(const ConwayPolynomial&, const ConwayPolynomial&) = default;

  std::size_t footprint_bytes() const;
  std::string to_string() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Thread-safe cache from reduced LinkState to its Conway polynomial.
///
/// Sharded by key hash; each shard keeps its own LRU list. With a nonzero
/// byte cap every shard holds at most cap / shard_count accounted bytes and
/// evicts least-recently-used entries beyond that.
class MemoStore {
 public:
  explicit MemoStore(std::size_t cap_bytes = 0, std::size_t shard_count = 64);
  MemoStore(const MemoStore&) = delete;
  MemoStore& operator=(const MemoStore&) = delete;

  std::optional<ConwayPolynomial> find(const LinkState& reduced);
  void insert(const LinkState& reduced, const ConwayPolynomial& value);

  std::size_t cap_bytes() const { return cap_bytes_; }
  std::size_t entries() const;
  std::size_t bytes() const;
  std::size_t peak_entries() const { return peak_entries_.load(); }
  std::size_t peak_bytes() const { return peak_bytes_.load(); }
  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }
  std::uint64_t evictions() const { return evictions_.load(); }

  /// Accounted size of one entry; exposed for cap tests.
  static std::size_t entry_bytes(const std::string& key, const ConwayPolynomial& value);
  static std::string encode_key(const LinkState& reduced);

 private:
  struct Node {
    std::string key;
    ConwayPolynomial value;
    std::size_t bytes;
  };
  struct Shard {
    std::mutex mu;
    std::list<Node> lru;  // front = most recent
    std::unordered_map<std::string, std::list<Node>::iterator> index;
    std::size_t bytes = 0;
  };

  Shard& shard_for(const std::string& key);
  void note_growth(std::ptrdiff_t entries_delta, std::ptrdiff_t bytes_delta);

  std::size_t cap_bytes_;
  std::size_t shard_cap_;
  std::vector<std::unique_ptr<Shard>> shards_;
  std::atomic<std::int64_t> total_entries_{0};
  std::atomic<std::int64_t> total_bytes_{0};
  std::atomic<std::size_t> peak_entries_{0};
  std::atomic<std::size_t> peak_bytes_{0};
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
  std::atomic<std::uint64_t> evictions_{0};
};

/// Applies the front simplifications until the state is terminal or leads
/// with an entry >= 2:
///   [0, x, rest...] -> [rest...]            (the next region untwists)
///   [1, x, rest...] -> [x + 1, rest...]     (the twist joins the next region; row flips)
/// Terminal states ([], [0], [1]) come back with the row reset to bottom.
LinkState reduce_state(LinkState s);

/// Conway polynomial by skein recursion on the leading crossing. Every
/// resolved crossing is positive:
///   nabla(s) = nabla(s with a1 - 2) + z * nabla(L0)
/// where L0 is [a1 - 1, rest...] for a bottom-row region and [rest...] (on the
/// other row) for a top-row region. `memo` may be null to disable caching.
ConwayPolynomial conway(const LinkState& s, MemoStore* memo);
ConwayPolynomial conway(const ContinuedFraction& cf, MemoStore* memo);

Integer a2(const ConwayPolynomial& poly);
Integer a4(const ConwayPolynomial& poly);
/// |sum_k c_2k (-4)^k|.
Integer determinant(const ConwayPolynomial& poly);

}  // namespace posknot
