#include "posknot/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "posknot/csv_io.hpp"
#include "posknot/errors.hpp"

namespace posknot {

namespace fs = std::filesystem;

void SweepConfig::validate() const {
  if (max_crossings < 3) throw InvalidInput("max_crossings must be >= 3");
  if (worker_count < 1) throw InvalidInput("worker_count must be >= 1");
  if (output_path.empty()) throw InvalidInput("output path is required");
}

void SweepTally::add(const ObstructionRecord& r) {
  ++rows;
  if (r.verdict == Verdict::ExcludedTorus) {
    ++torus_count;
  } else {
    if (r.verdict == Verdict::ObstructionInconclusive) ++equality_count;
    if (r.quotient && *r.quotient <= Fraction(Integer(1))) ++quotient_at_most_one;
  }
  if (r.rhs_zero()) ++rhs_zero_count;
  if (r.key.p > Integer(20) && r.key.q_star > Integer(20) && !(r.lhs > r.rhs)) ++conjecture_violations;
}

SweepTally& SweepTally::operator+=(const SweepTally& o) {
  rows += o.rows;
  equality_count += o.equality_count;
  torus_count += o.torus_count;
  rhs_zero_count += o.rhs_zero_count;
  quotient_at_most_one += o.quotient_at_most_one;
  conjecture_violations += o.conjecture_violations;
  return *this;
}

std::vector<ObstructionRecord> compute_band(int crossings, int workers, MemoStore* memo, DedupMode mode,
                                            std::uint64_t* presentations_seen) {
  // Partition i holds the words whose leading entry is i + 1.
  const int partitions = std::max(crossings, 0);
  std::vector<std::vector<ObstructionRecord>> parts(static_cast<std::size_t>(partitions));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto work = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= partitions) return;
      try {
        auto& out = parts[static_cast<std::size_t>(i)];
        for_each_in_band(crossings, i + 1, [&](const ContinuedFraction& cf) { out.push_back(check(cf, memo)); });
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(partitions);
      }
    }
  };

  const int threads = std::max(1, std::min(workers, partitions));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ObstructionRecord> records;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(records));
  if (presentations_seen) *presentations_seen = records.size();

  std::sort(records.begin(), records.end(), [](const ObstructionRecord& a, const ObstructionRecord& b) {
    if (auto c = a.key <=> b.key; c != 0) return c < 0;
    return a.cf < b.cf;
  });
  if (mode == DedupMode::canonical) {
    auto last = std::unique(records.begin(), records.end(),
                            [](const ObstructionRecord& a, const ObstructionRecord& b) { return a.key == b.key; });
    records.erase(last, records.end());
  }
  return records;
}

namespace {

struct BandResult {
  std::vector<std::string> lines;
  SweepTally tally;
  std::uint64_t presentations = 0;
  std::uint64_t keys = 0;
};

std::string manifest_text(const SweepConfig& c) {
  std::ostringstream os;
  os << "posknot-checkpoint v1\n"
     << "max_crossings=" << c.max_crossings << "\n"
     << "dedup=" << to_string(c.dedup_mode) << "\n";
  return os.str();
}

void write_atomically(const fs::path& path, const std::string& contents) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path band_path(const fs::path& dir, int crossings) {
  char name[32];
  std::snprintf(name, sizeof name, "band_%03d.csv", crossings);
  return dir / name;
}

std::string band_trailer(const BandResult& b) {
  std::ostringstream os;
  os << "#end rows=" << b.tally.rows << " presentations=" << b.presentations << " keys=" << b.keys
     << " equal=" << b.tally.equality_count << " torus=" << b.tally.torus_count
     << " rhs_zero=" << b.tally.rhs_zero_count << " quotient_le1=" << b.tally.quotient_at_most_one
     << " conjecture=" << b.tally.conjecture_violations;
  return os.str();
}

void commit_band(const fs::path& dir, int crossings, const BandResult& b) {
  std::string text = "#band crossings=" + std::to_string(crossings) + "\n";
  for (const auto& line : b.lines) text += line + "\n";
  text += band_trailer(b) + "\n";
  write_atomically(band_path(dir, crossings), text);
}

BandResult load_band(const fs::path& path, int crossings) {
  auto corrupt = [&](const std::string& why) {
    return CheckpointCorrupt("checkpoint band " + path.string() + ": " + why);
  };
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line) || line != "#band crossings=" + std::to_string(crossings)) {
    throw corrupt("bad header");
  }
  BandResult b;
  std::string trailer;
  while (std::getline(in, line)) {
    if (line.rfind("#end ", 0) == 0) {
      trailer = line;
      break;
    }
    b.lines.push_back(line);
  }
  if (trailer.empty()) throw corrupt("missing trailer");
  std::map<std::string, std::uint64_t> kv;
  std::istringstream ts(trailer.substr(5));
  std::string item;
  while (ts >> item) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw corrupt("bad trailer item " + item);
    try {
      kv[item.substr(0, eq)] = std::stoull(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw corrupt("bad trailer value " + item);
    }
  }
  for (const char* k : {"rows", "presentations", "keys", "equal", "torus", "rhs_zero", "quotient_le1", "conjecture"}) {
    if (!kv.count(k)) throw corrupt(std::string("trailer lacks ") + k);
  }
  if (kv["rows"] != b.lines.size()) throw corrupt("row count mismatch");
  b.tally.rows = kv["rows"];
  b.presentations = kv["presentations"];
  b.keys = kv["keys"];
  b.tally.equality_count = kv["equal"];
  b.tally.torus_count = kv["torus"];
  b.tally.rhs_zero_count = kv["rhs_zero"];
  b.tally.quotient_at_most_one = kv["quotient_le1"];
  b.tally.conjecture_violations = kv["conjecture"];
  return b;
}

void prepare_checkpoint(const SweepConfig& config) {
  const fs::path& dir = *config.checkpoint_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create checkpoint dir " + dir.string() + ": " + ec.message());
  const fs::path manifest = dir / "manifest";
  const std::string expected = manifest_text(config);
  if (fs::exists(manifest)) {
    if (read_file(manifest) != expected) {
      throw CheckpointCorrupt("checkpoint in " + dir.string() + " was written for a different configuration");
    }
  } else {
    write_atomically(manifest, expected);
  }
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config, const SweepHooks& hooks) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  if (config.checkpoint_dir) prepare_checkpoint(config);

  if (config.output_path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(config.output_path.parent_path(), ec);
  }
  fs::path tmp_output = config.output_path;
  tmp_output += ".tmp";
  std::ofstream output(tmp_output, std::ios::binary | std::ios::trunc);
  if (!output) throw IoError("cannot write " + tmp_output.string());
  output << kResultsHeader << '\n';

  MemoStore memo(config.memo_cap_bytes);
  SweepReport report;

  for (int s = 3; s <= config.max_crossings; s += 2) {
    BandResult band;
    const bool resumable = config.checkpoint_dir && fs::exists(band_path(*config.checkpoint_dir, s));
    if (resumable) {
      band = load_band(band_path(*config.checkpoint_dir, s), s);
      report.resumed_bands.push_back(s);
    } else {
      auto records = compute_band(s, config.worker_count, &memo, config.dedup_mode, &band.presentations);
      std::set<CanonicalKnotKey> keys;
      for (const auto& r : records) {
        band.tally.add(r);
        keys.insert(r.key);
        band.lines.push_back(format_result_row(r));
      }
      band.keys = keys.size();
      if (config.checkpoint_dir) commit_band(*config.checkpoint_dir, s, band);
    }
    report.census.presentations[s] = band.presentations;
    report.census.canonical_keys[s] = band.keys;
    report.tally += band.tally;
    for (const auto& line : band.lines) output << line << '\n';
    if (!output) throw IoError("write failed for " + tmp_output.string());
    if (hooks.on_band_done) hooks.on_band_done(s);
  }

  output.close();
  if (!output) throw IoError("write failed for " + tmp_output.string());
  std::error_code ec;
  fs::rename(tmp_output, config.output_path, ec);
  if (ec) throw IoError("cannot rename " + tmp_output.string() + ": " + ec.message());

  report.peak_memo_entries = memo.peak_entries();
  report.peak_memo_bytes = memo.peak_bytes();
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace posknot
