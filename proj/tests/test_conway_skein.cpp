#include <doctest.h>

#include <thread>

#include "posknot/conway_skein.hpp"
#include "posknot/enumeration.hpp"
#include "posknot/fraction.hpp"

using namespace posknot;

namespace {

ContinuedFraction cf(std::vector<int> e) { return {std::move(e)}; }
ConwayPolynomial poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return ConwayPolynomial(std::move(v));
}

// det(t S - S^T) at a rational t, by Gaussian elimination over Q. S is the
// lower-bidiagonal Seifert form, built here straight from the word.
Fraction seifert_det_at(const ContinuedFraction& w, const Fraction& t) {
  std::vector<Integer> diag;
  for (std::size_t i = 0; i < w.entries.size(); ++i) {
    const int a = w.entries[i];
    if (i % 2 == 0) {
      for (int k = 0; k < a - 1; ++k) diag.emplace_back(-1);
    } else {
      diag.emplace_back(-1 - a / 2);
    }
  }
  const std::size_t n = diag.size();
  std::vector<std::vector<Fraction>> m(n, std::vector<Fraction>(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = t * Fraction(diag[i]) - Fraction(diag[i]);
    if (i + 1 < n) {
      m[i + 1][i] = t;              // S[i+1][i] = 1
      m[i][i + 1] = -Fraction(1);   // S^T[i][i+1] = 1
    }
  }
  Fraction det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return Fraction(0);
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const Fraction f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - f * m[c][k];
    }
  }
  return det;
}

// nabla evaluated at z^2 = t - 2 + 1/t, times t^g.
Fraction conway_at(const ConwayPolynomial& p, const Fraction& t, int g) {
  const Fraction z2 = t - Fraction(2) + t.reciprocal();
  Fraction sum(0), power(1);
  for (int k = 0; 2 * k <= p.degree(); ++k) {
    sum = sum + Fraction(p.coefficient(2 * k)) * power;
    power = power * z2;
  }
  for (int i = 0; i < g; ++i) sum = sum * t;
  return sum;
}

}  // namespace

TEST_CASE("reduce_state") {
  const LinkState a = reduce_state({{1, 2, 1}, Row::bottom});
  CHECK(a.entries == std::vector<int>{3, 1});
  CHECK(a.leading_row == Row::top);
  CHECK(reduce_state({{0, 4, 3}, Row::bottom}).entries == std::vector<int>{3});
  CHECK(reduce_state({{0, 4, 3}, Row::bottom}).leading_row == Row::bottom);
  CHECK(reduce_state({{2, 2, 1}, Row::bottom}) == LinkState{{2, 2, 1}, Row::bottom});
  CHECK(reduce_state({{0, 4}, Row::top}) == LinkState{{}, Row::bottom});
  CHECK(reduce_state({{1, 0}, Row::top}) == LinkState{{1}, Row::bottom});
  CHECK(reduce_state({{1}, Row::top}) == LinkState{{1}, Row::bottom});
}

TEST_CASE("conway values") {
  CHECK(conway(LinkState{{1}, Row::bottom}, nullptr) == poly({1}));
  CHECK(conway(LinkState{{0}, Row::bottom}, nullptr) == poly({}));
  CHECK(conway(LinkState{{}, Row::bottom}, nullptr) == poly({1}));
  CHECK(conway(LinkState{{2}, Row::bottom}, nullptr) == poly({0, 1}));
  CHECK(conway(cf({3}), nullptr) == poly({1, 0, 1}));
  CHECK(conway(cf({5}), nullptr) == poly({1, 0, 3, 0, 1}));
  CHECK(conway(cf({2, 2, 1}), nullptr) == poly({1, 0, 2}));
  CHECK(conway(cf({1, 2, 2}), nullptr) == poly({1, 0, 2}));
}

TEST_CASE("coefficient extraction") {
  CHECK(a2(poly({1, 0, 1})) == Integer(1));
  CHECK(a4(poly({1, 0, 1})) == Integer(0));
  CHECK(a2(poly({1, 0, 3, 0, 1})) == Integer(3));
  CHECK(a4(poly({1, 0, 3, 0, 1})) == Integer(1));
  CHECK(a2(poly({1})) == Integer(0));
  CHECK(determinant(poly({1, 0, 1})) == Integer(3));
  CHECK(determinant(poly({1, 0, 2})) == Integer(7));
  CHECK(determinant(poly({1})) == Integer(1));
  CHECK(poly({1, 0, 1}).to_string() == "1 + z^2");
  CHECK(poly({1, 0, 1}).has_only_even_powers());
  CHECK(poly({0, 1}).has_only_odd_powers());
}

TEST_CASE("skein recursion agrees with the Seifert form at sample points (sum <= 13)") {
  const std::vector<Fraction> ts = {Fraction(2), Fraction(-3), Fraction(Integer(2), Integer(5))};
  for (const auto& w : collect_presentations({13, DedupMode::presentations})) {
    CAPTURE(format_cf(w));
    const ConwayPolynomial p = conway(w, nullptr);
    REQUIRE(p.has_only_even_powers());
    const int g = p.degree() / 2;
    for (const auto& t : ts) {
      CHECK(abs(seifert_det_at(w, t)) == abs(conway_at(p, t, g)));
    }
    CHECK(determinant(p) == eval_cf(w).p);
  }
}

TEST_CASE("memoized and plain recursion agree") {
  MemoStore memo;
  for (const auto& w : collect_presentations({15, DedupMode::presentations})) {
    CHECK(conway(w, &memo) == conway(w, nullptr));
  }
  CHECK(memo.hits() > 0);
  CHECK(memo.entries() > 0);
  CHECK(memo.peak_entries() >= memo.entries());
}

TEST_CASE("memo key encodes the row") {
  CHECK(MemoStore::encode_key({{3, 2}, Row::bottom}) != MemoStore::encode_key({{3, 2}, Row::top}));
  CHECK(MemoStore::encode_key({{300}, Row::bottom}) != MemoStore::encode_key({{44, 2}, Row::bottom}));
}

TEST_CASE("byte cap bounds the memo and evicts LRU entries") {
  const std::size_t cap = 64 * 1024;
  MemoStore memo(cap, 4);
  std::size_t max_seen = 0;
  for (const auto& w : collect_presentations({17, DedupMode::presentations})) {
    CHECK(conway(w, &memo) == conway(w, nullptr));
    max_seen = std::max(max_seen, memo.bytes());
  }
  CHECK(memo.evictions() > 0);
  CHECK(max_seen <= cap);
  CHECK(memo.peak_bytes() <= cap);

  // A single shard with room for one entry keeps only the latest insert.
  const LinkState a{{3}, Row::bottom}, b{{5}, Row::bottom};
  const auto pa = conway(a, nullptr), pb = conway(b, nullptr);
  MemoStore tiny(MemoStore::entry_bytes(MemoStore::encode_key(b), pb), 1);
  tiny.insert(a, pa);
  tiny.insert(b, pb);
  CHECK_FALSE(tiny.find(a).has_value());
  CHECK(tiny.find(b) == pb);
}

TEST_CASE("unbounded memo never evicts") {
  MemoStore memo(0);
  for (const auto& w : collect_presentations({13, DedupMode::presentations})) conway(w, &memo);
  CHECK(memo.evictions() == 0);
}

TEST_CASE("shared memo across threads") {
  MemoStore memo(256 * 1024);
  const auto words = collect_presentations({15, DedupMode::presentations});
  std::vector<ConwayPolynomial> expected;
  for (const auto& w : words) expected.push_back(conway(w, nullptr));
  std::atomic<int> mismatches{0};
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < words.size(); i += 2) {
          if (!(conway(words[i], &memo) == expected[i])) ++mismatches;
        }
      });
    }
  }
  CHECK(mismatches.load() == 0);
}
