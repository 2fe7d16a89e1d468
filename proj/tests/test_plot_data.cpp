#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "posknot/csv_io.hpp"
#include "posknot/errors.hpp"
#include "posknot/plot_data.hpp"
#include "posknot/sweep.hpp"

using namespace posknot;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("posknot_plot_" + std::to_string(::getpid())) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Fraction frac(long n, long d) { return Fraction(Integer(n), Integer(d)); }

}  // namespace

TEST_CASE("s_k bands use exact thresholds") {
  CHECK(s_k_band(frac(1, 51)) == "low");
  CHECK(s_k_band(frac(1, 50)) == "mid");
  CHECK(s_k_band(frac(1, 30)) == "mid");
  CHECK(s_k_band(frac(9, 200)) == "mid");
  CHECK(s_k_band(frac(1, 22)) == "high");
  CHECK(s_k_band(frac(2, 13)) == "high");
}

TEST_CASE("derived files from a small sweep") {
  const fs::path dir = scratch("small");
  SweepConfig config{9, 1, 0, dir / "results.csv", std::nullopt, DedupMode::presentations};
  const SweepReport report = run_sweep(config);
  emit_plot_data(config.output_path, dir / "plots");

  for (const auto& name : plot_file_names()) {
    const CsvTable t = CsvTable::read_file((dir / "plots" / name).string());
    CAPTURE(name);
    CHECK(t.header().back() == "excluded_torus");
    CHECK(t.rows() == report.tally.rows);  // no rhs = 0 rows at this size
  }

  const CsvTable quotient = CsvTable::read_file((dir / "plots" / "complexity_vs_quotient.csv").string());
  const CsvTable results = CsvTable::read_file(config.output_path.string());
  bool saw_five2 = false;
  for (std::size_t r = 0; r < results.rows(); ++r) {
    CHECK(quotient.cell(r, "complexity") == results.cell(r, "complexity"));
    CHECK(quotient.cell(r, "quotient") == results.cell(r, "quotient"));
    if (results.cell(r, "p") == "7" && results.cell(r, "q") == "3") {
      saw_five2 = true;
      CHECK(quotient.cell(r, "quotient") == "0.461538461538");
    }
  }
  CHECK(saw_five2);

  const CsvTable diff = CsvTable::read_file((dir / "plots" / "min_pq_vs_difference.csv").string());
  CHECK(diff.header() == std::vector<std::string>{"min_pq", "difference", "excluded_torus"});
  CHECK(diff.cell(0, "min_pq") == "1");
  CHECK(diff.cell(0, "difference") == "-4");
  CHECK(diff.cell(0, "excluded_torus") == "true");

  const CsvTable bands = CsvTable::read_file((dir / "plots" / "p_vs_q_s_k_band.csv").string());
  for (std::size_t r = 0; r < bands.rows(); ++r) {
    const auto sk = read_fraction(results, r, "s_k_num", "s_k_den");
    CHECK(bands.cell(r, "band") == s_k_band(*sk));
  }
}

TEST_CASE("rows with rhs = 0 are left out of ratio files") {
  const fs::path dir = scratch("rhs_zero");
  {
    std::ofstream out(dir / "results.csv", std::ios::binary);
    out << kResultsHeader << "\n"
        << "5,7,3,\"2,2,1\",5,17,7,1,3,12,0,false,false,10,,,,,,\n"
        << "5,7,3,\"1,2,2\",2,0,7,1,3,12,26,false,false,10,0.461538461538,6,13,0.153846153846,2,13\n";
  }
  emit_plot_data(dir / "results.csv", dir / "plots");
  CHECK(CsvTable::read_file((dir / "plots" / "q_vs_quotient.csv").string()).rows() == 1);
  CHECK(CsvTable::read_file((dir / "plots" / "q_vs_s_k.csv").string()).rows() == 1);
  CHECK(CsvTable::read_file((dir / "plots" / "q_vs_difference.csv").string()).rows() == 2);
}

TEST_CASE("empty results give header-only files") {
  const fs::path dir = scratch("empty");
  std::ofstream(dir / "results.csv", std::ios::binary) << kResultsHeader << "\n";
  emit_plot_data(dir / "results.csv", dir / "plots");
  for (const auto& name : plot_file_names()) {
    const CsvTable t = CsvTable::read_file((dir / "plots" / name).string());
    CHECK(t.rows() == 0);
    CHECK_FALSE(t.header().empty());
  }
}

TEST_CASE("bad inputs") {
  const fs::path dir = scratch("bad");
  CHECK_THROWS_AS(emit_plot_data(dir / "missing.csv", dir / "plots"), IoError);
  std::ofstream(dir / "short.csv", std::ios::binary) << "p,q\n7,3\n";
  CHECK_THROWS_AS(emit_plot_data(dir / "short.csv", dir / "plots"), ParseError);
}
