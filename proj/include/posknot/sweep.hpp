#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "posknot/conway_skein.hpp"
#include "posknot/enumeration.hpp"
#include "posknot/obstruction.hpp"

namespace posknot {

struct SweepConfig {
  int max_crossings = 3;
  int worker_count = 1;
  std::size_t memo_cap_bytes = 0;  // 0 = unbounded
  std::filesystem::path output_path;
  std::optional<std::filesystem::path> checkpoint_dir;
  DedupMode dedup_mode = DedupMode::presentations;

  void validate() const;  // throws InvalidInput
};

/// Verdict and metric tallies. Every count is over written rows.
struct SweepTally {
  std::uint64_t rows = 0;
  std::uint64_t equality_count = 0;  // ObstructionInconclusive among non-torus rows
  std::uint64_t torus_count = 0;
  std::uint64_t rhs_zero_count = 0;
  std::uint64_t quotient_at_most_one = 0;  // non-torus rows with |lhs|/|rhs| <= 1
  std::uint64_t conjecture_violations = 0;  // p, q > 20 and not lhs > rhs

  void add(const ObstructionRecord& r);
  SweepTally& operator+=(const SweepTally& o);
  friend bool operator==(const SweepTally&, const SweepTally&) = default;
};

struct SweepReport {
  KnotCensus census;
  SweepTally tally;
  double elapsed_seconds = 0;
  std::size_t peak_memo_entries = 0;
  std::size_t peak_memo_bytes = 0;
  std::vector<int> resumed_bands;  // crossing numbers loaded from the checkpoint

  std::uint64_t equality_count() const { return tally.equality_count; }
};

struct SweepHooks {
  /// Called after each crossing band is computed (and committed, if checkpointing).
  std::function<void(int crossings)> on_band_done;
};

/// Records for one crossing band, sorted by (p, q_star, cf); in canonical
/// mode only the first presentation of each knot is kept. Work is split by
/// leading entry across `workers` threads sharing `memo`.
/// `presentations_seen` receives the band size before deduplication.
std::vector<ObstructionRecord> compute_band(int crossings, int workers, MemoStore* memo, DedupMode mode,
                                            std::uint64_t* presentations_seen = nullptr);

/// Full sweep: every band from 3 to max_crossings, written as one CSV sorted
/// by (crossings, p, q_star, cf). With a checkpoint directory, finished bands
/// are committed there and reused on the next run with the same config.
/// Throws IoError or CheckpointCorrupt.
SweepReport run_sweep(const SweepConfig& config, const SweepHooks& hooks = {});

}  // namespace posknot
