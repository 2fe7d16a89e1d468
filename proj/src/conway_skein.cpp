#include "posknot/conway_skein.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace posknot {

bool LinkState::is_terminal() const {
  return entries.empty() || (entries.size() == 1 && entries[0] <= 1);
}

// ---------------------------------------------------------------------------
// ConwayPolynomial

ConwayPolynomial::ConwayPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void ConwayPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool ConwayPolynomial::has_only_even_powers() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

bool ConwayPolynomial::has_only_odd_powers() const {
  for (std::size_t k = 0; k < coeffs_.size(); k += 2) {
    if (!coeffs_[k].is_zero()) return false;
  }
  return true;
}

ConwayPolynomial ConwayPolynomial::times_z() const {
  if (coeffs_.empty()) return {};
  ConwayPolynomial r;
  r.coeffs_.reserve(coeffs_.size() + 1);
  r.coeffs_.emplace_back(0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

ConwayPolynomial& ConwayPolynomial::operator+=(const ConwayPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

std::size_t ConwayPolynomial::footprint_bytes() const {
  std::size_t n = sizeof(ConwayPolynomial);
  for (const auto& c : coeffs_) n += c.footprint_bytes();
  return n;
}

std::string ConwayPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Integer& c = coeffs_[k];
    if (c.is_zero()) continue;
    Integer mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Integer(1)) os << mag << "*";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// MemoStore

namespace {
// List node, hash node and bucket slot, rounded.
constexpr std::size_t kEntryOverhead = 128;
}  // namespace

MemoStore::MemoStore(std::size_t cap_bytes, std::size_t shard_count)
    : cap_bytes_(cap_bytes), shard_cap_(cap_bytes == 0 ? 0 : std::max<std::size_t>(1, cap_bytes / shard_count)) {
  shards_.reserve(shard_count);
  for (std::size_t i = 0; i < shard_count; ++i) shards_.push_back(std::make_unique<Shard>());
}

std::string MemoStore::encode_key(const LinkState& reduced) {
  std::string key;
  key.reserve(reduced.entries.size() + 1);
  key.push_back(static_cast<char>(reduced.leading_row));
  for (int e : reduced.entries) {
    auto v = static_cast<std::uint32_t>(e);
    while (v >= 0x80) {
      key.push_back(static_cast<char>((v & 0x7f) | 0x80));
      v >>= 7;
    }
    key.push_back(static_cast<char>(v));
  }
  return key;
}

std::size_t MemoStore::entry_bytes(const std::string& key, const ConwayPolynomial& value) {
  return kEntryOverhead + 2 * key.size() + value.footprint_bytes();
}

MemoStore::Shard& MemoStore::shard_for(const std::string& key) {
  return *shards_[std::hash<std::string>{}(key) % shards_.size()];
}

void MemoStore::note_growth(std::ptrdiff_t entries_delta, std::ptrdiff_t bytes_delta) {
  auto e = static_cast<std::size_t>(total_entries_.fetch_add(entries_delta) + entries_delta);
  auto b = static_cast<std::size_t>(total_bytes_.fetch_add(bytes_delta) + bytes_delta);
  std::size_t prev = peak_entries_.load();
  while (e > prev && !peak_entries_.compare_exchange_weak(prev, e)) {
  }
  prev = peak_bytes_.load();
  while (b > prev && !peak_bytes_.compare_exchange_weak(prev, b)) {
  }
}

std::optional<ConwayPolynomial> MemoStore::find(const LinkState& reduced) {
  std::string key = encode_key(reduced);
  Shard& sh = shard_for(key);
  std::lock_guard lock(sh.mu);
  auto it = sh.index.find(key);
  if (it == sh.index.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  sh.lru.splice(sh.lru.begin(), sh.lru, it->second);
  return it->second->value;
}

void MemoStore::insert(const LinkState& reduced, const ConwayPolynomial& value) {
  std::string key = encode_key(reduced);
  std::size_t nbytes = entry_bytes(key, value);
  Shard& sh = shard_for(key);
  std::lock_guard lock(sh.mu);
  if (sh.index.count(key)) return;  // a concurrent insert of the same (identical) value won
  if (shard_cap_ != 0 && nbytes > shard_cap_) return;
  std::ptrdiff_t removed_entries = 0, removed_bytes = 0;
  while (shard_cap_ != 0 && !sh.lru.empty() && sh.bytes + nbytes > shard_cap_) {
    Node& victim = sh.lru.back();
    sh.bytes -= victim.bytes;
    removed_bytes += static_cast<std::ptrdiff_t>(victim.bytes);
    ++removed_entries;
    sh.index.erase(victim.key);
    sh.lru.pop_back();
    evictions_.fetch_add(1, std::memory_order_relaxed);
  }
  sh.lru.push_front(Node{key, value, nbytes});
  sh.index.emplace(std::move(key), sh.lru.begin());
  sh.bytes += nbytes;
  // Evictions first so the peak never counts an entry that already left.
  if (removed_entries) note_growth(-removed_entries, -removed_bytes);
  note_growth(1, static_cast<std::ptrdiff_t>(nbytes));
}

std::size_t MemoStore::entries() const { return static_cast<std::size_t>(total_entries_.load()); }
std::size_t MemoStore::bytes() const { return static_cast<std::size_t>(total_bytes_.load()); }

// ---------------------------------------------------------------------------
// Skein recursion

LinkState reduce_state(LinkState s) {
  auto& e = s.entries;
  std::size_t front = 0;  // erase consumed prefix once at the end
  for (;;) {
    std::size_t n = e.size() - front;
    if (n >= 2 && e[front] == 0) {
      front += 2;
    } else if (n >= 2 && e[front] == 1) {
      e[front + 1] += 1;
      front += 1;
      s.leading_row = s.leading_row == Row::bottom ? Row::top : Row::bottom;
    } else {
      break;
    }
  }
  e.erase(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(front));
  if (s.is_terminal()) s.leading_row = Row::bottom;
  return s;
}

namespace {

ConwayPolynomial conway_reduced(const LinkState& s, MemoStore* memo) {
  if (s.entries.empty()) return ConwayPolynomial::one();  // unknot
  if (s.entries.size() == 1 && s.entries[0] == 1) return ConwayPolynomial::one();
  if (s.entries.size() == 1 && s.entries[0] == 0) return {};  // two-component unlink

  if (memo) {
    if (auto hit = memo->find(s)) return std::move(*hit);
  }

  const int lead = s.entries[0];
  LinkState minus = s;
  minus.entries[0] = lead - 2;

  LinkState zero;
  if (s.leading_row == Row::bottom) {
    zero = s;
    zero.entries[0] = lead - 1;
  } else {
    zero.entries.assign(s.entries.begin() + 1, s.entries.end());
    zero.leading_row = Row::bottom;
  }

  ConwayPolynomial result = conway_reduced(reduce_state(std::move(minus)), memo);
  result += conway_reduced(reduce_state(std::move(zero)), memo).times_z();

  if (memo) memo->insert(s, result);
  return result;
}

}  // namespace

ConwayPolynomial conway(const LinkState& s, MemoStore* memo) { return conway_reduced(reduce_state(s), memo); }

ConwayPolynomial conway(const ContinuedFraction& cf, MemoStore* memo) {
  return conway(LinkState::from_cf(cf), memo);
}

Integer a2(const ConwayPolynomial& poly) { return poly.coefficient(2); }
Integer a4(const ConwayPolynomial& poly) { return poly.coefficient(4); }

Integer determinant(const ConwayPolynomial& poly) {
  Integer value(0);
  Integer power(1);
  for (std::size_t k = 0; k < poly.coefficients().size(); k += 2) {
    value += poly.coefficients()[k] * power;
    power *= Integer(-4);
  }
  return abs(value);
}

}  // namespace posknot
