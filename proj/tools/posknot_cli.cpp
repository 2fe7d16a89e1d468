#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "posknot/check.hpp"
#include "posknot/errors.hpp"
#include "posknot/plot_data.hpp"
#include "posknot/sweep.hpp"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitEquality = 2;

void print_summary(const posknot::SweepConfig& config, const posknot::SweepReport& report) {
  const auto& t = report.tally;
  std::fprintf(stderr, "bands      3..%d (%zu resumed from checkpoint)\n", config.max_crossings,
               report.resumed_bands.size());
  std::fprintf(stderr, "rows       %llu (%s)\n", static_cast<unsigned long long>(t.rows),
               std::string(posknot::to_string(config.dedup_mode)).c_str());
  std::fprintf(stderr, "torus      %llu excluded\n", static_cast<unsigned long long>(t.torus_count));
  std::fprintf(stderr, "equalities %llu\n", static_cast<unsigned long long>(t.equality_count));
  std::fprintf(stderr, "rhs = 0    %llu\n", static_cast<unsigned long long>(t.rhs_zero_count));
  std::fprintf(stderr, "quotient <= 1 (non-torus) %llu\n", static_cast<unsigned long long>(t.quotient_at_most_one));
  std::fprintf(stderr, "p, q > 20 with lhs <= rhs %llu\n", static_cast<unsigned long long>(t.conjecture_violations));
  std::fprintf(stderr, "memo peak  %zu entries, %zu bytes\n", report.peak_memo_entries, report.peak_memo_bytes);
  std::fprintf(stderr, "elapsed    %.1f s\n", report.elapsed_seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chirally cosmetic surgery obstruction sweep over positive 2-bridge knots"};
  app.require_subcommand(1);

  posknot::SweepConfig sweep_config;
  std::string dedup = "presentations";
  std::string checkpoint;
  std::string output;
  auto* sweep = app.add_subcommand("sweep", "Check every positive 2-bridge knot up to a crossing bound");
  sweep->add_option("--max-crossings", sweep_config.max_crossings, "Largest crossing number")
      ->required()
      ->check(CLI::Range(3, 1000));
  sweep->add_option("--jobs", sweep_config.worker_count, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_option("--memo-cap", sweep_config.memo_cap_bytes, "Memo size cap in bytes (0 = unbounded)");
  sweep->add_option("--dedup", dedup, "One row per presentation or per knot")
      ->check(CLI::IsMember({"presentations", "canonical"}));
  sweep->add_option("--checkpoint", checkpoint, "Directory for per-band checkpoints");
  sweep->add_option("--out", output, "Results CSV")->required();

  std::string cf_text, fraction_text;
  bool verify = false;
  auto* check = app.add_subcommand("check", "Run the obstruction on a single knot");
  auto* cf_opt = check->add_option("--cf", cf_text, "Positive-form continued fraction, e.g. 2,2,1");
  auto* fraction_opt = check->add_option("--fraction", fraction_text, "Rational p/q, e.g. 7/3");
  cf_opt->excludes(fraction_opt);
  check->add_flag("--verify", verify, "Recompute every invariant through the independent oracles");

  std::string plot_in, plot_out;
  auto* plot = app.add_subcommand("plot-data", "Derive per-plot CSVs from a results file");
  plot->add_option("--in", plot_in, "Results CSV")->required();
  plot->add_option("--out", plot_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitClean : kExitError;
  }

  try {
    if (*sweep) {
      sweep_config.dedup_mode = posknot::parse_dedup_mode(dedup);
      sweep_config.output_path = output;
      if (!checkpoint.empty()) sweep_config.checkpoint_dir = checkpoint;
      posknot::SweepHooks hooks;
      hooks.on_band_done = [](int s) { std::fprintf(stderr, "band %d done\n", s); };
      const auto report = posknot::run_sweep(sweep_config, hooks);
      print_summary(sweep_config, report);
      return report.equality_count() == 0 ? kExitClean : kExitEquality;
    }
    if (*check) {
      if (!*cf_opt && !*fraction_opt) throw posknot::InvalidInput("check needs --cf or --fraction");
      const auto result = *cf_opt ? posknot::check_one(posknot::parse_cf(cf_text), verify)
                                  : posknot::check_one(posknot::parse_rational(fraction_text), verify);
      std::cout << result.report();
      if (!result.verified()) return kExitError;
      return result.record.verdict == posknot::Verdict::ObstructionInconclusive ? kExitEquality : kExitClean;
    }
    if (*plot) {
      posknot::emit_plot_data(plot_in, plot_out);
      return kExitClean;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return kExitError;
}
