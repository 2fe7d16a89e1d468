// Acceptance checks for the sweep. Prints one PASS/FAIL line per criterion;
// exit status is nonzero when any selected criterion fails.
//
//   posknot_acceptance [--only NAME]... [--list]

#include <sys/resource.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "posknot/csv_io.hpp"
#include "posknot/enumeration.hpp"
#include "posknot/invariants.hpp"
#include "posknot/obstruction.hpp"
#include "posknot/oracles.hpp"
#include "posknot/sweep.hpp"

using namespace posknot;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> items;  // printed indented under a failure
};

struct Criterion {
  std::string name;
  std::function<Outcome()> run;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("posknot_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

double peak_rss_gib() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

SweepReport sweep_to(int max_crossings, int workers, const fs::path& out) {
  SweepConfig config;
  config.max_crossings = max_crossings;
  config.worker_count = workers;
  config.output_path = out;
  return run_sweep(config);
}

int hardware_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome main_theorem(int max_crossings, double limit_seconds, double limit_gib) {
  const fs::path out = work_dir() / fmt("theorem_%d.csv", max_crossings);
  const SweepReport r = sweep_to(max_crossings, hardware_workers(), out);
  fs::remove(out);
  const double gib = peak_rss_gib();
  Outcome o;
  o.pass = r.equality_count() == 0 && r.elapsed_seconds < limit_seconds && gib < limit_gib;
  o.detail = fmt("max_crossings=%d rows=%llu torus=%llu equalities=%llu elapsed=%.1fs (limit %.0fs) peak_rss=%.2fGiB (limit %.0fGiB)",
                 max_crossings, static_cast<unsigned long long>(r.tally.rows),
                 static_cast<unsigned long long>(r.tally.torus_count),
                 static_cast<unsigned long long>(r.equality_count()), r.elapsed_seconds, limit_seconds, gib, limit_gib);
  return o;
}

Outcome census_31() {
  constexpr std::uint64_t kTarget = 1'346'268;
  const KnotCensus c = census({31, DedupMode::presentations});
  const bool by_presentations = c.total_presentations() == kTarget;
  const bool by_keys = c.total_canonical_keys() == kTarget;
  Outcome o;
  o.pass = by_presentations || by_keys;
  o.detail = fmt("presentations=%llu canonical_keys=%llu target=%llu matched=%s",
                 static_cast<unsigned long long>(c.total_presentations()),
                 static_cast<unsigned long long>(c.total_canonical_keys()), static_cast<unsigned long long>(kTarget),
                 by_presentations && by_keys ? "both" : by_presentations ? "presentations" : by_keys ? "canonical_keys" : "neither");
  if (!o.pass) {
    for (const auto& [s, n] : c.presentations) {
      o.items.push_back(fmt("crossings=%d presentations=%llu canonical_keys=%llu", s, static_cast<unsigned long long>(n),
                            static_cast<unsigned long long>(c.canonical_keys.at(s))));
    }
  }
  return o;
}

Outcome oracle_equivalence_13() {
  Outcome o;
  std::size_t words = 0;
  for (const auto& w : collect_presentations({13, DedupMode::presentations})) {
    ++words;
    const ConwayPolynomial nabla = conway(w, nullptr);
    const Rational r = eval_cf(w);
    const auto from_conway = alexander_from_conway(nabla);
    const auto from_seifert = alexander_from_seifert(seifert_matrix(w));
    const Integer v3_fast = v3_even(to_even_cf(r));
    const Integer v3_oracle = v3_from_jones(jones_poly(w));
    const Integer det = determinant(nabla);
    if (!(from_conway == from_seifert)) {
      o.items.push_back("[" + format_cf(w) + "] alexander " + from_conway.poly.to_string() + " vs " +
                        from_seifert.poly.to_string());
    }
    if (v3_fast != v3_oracle) {
      o.items.push_back("[" + format_cf(w) + "] v3 " + v3_fast.to_string() + " vs " + v3_oracle.to_string());
    }
    if (det != r.p) o.items.push_back("[" + format_cf(w) + "] det " + det.to_string() + " vs p " + r.p.to_string());
  }
  o.pass = o.items.empty();
  o.detail = fmt("words=%zu mismatches=%zu (alexander, v3, det)", words, o.items.size());
  return o;
}

Outcome genus_consistency_17() {
  Outcome o;
  MemoStore memo;
  std::size_t words = 0;
  for (const auto& w : collect_presentations({17, DedupMode::presentations})) {
    ++words;
    const int closed = genus_closed(w);
    const int even = genus_even(to_even_cf(eval_cf(w)));
    const int degree = conway(w, &memo).degree();
    if (closed != even || 2 * closed != degree) {
      o.items.push_back(fmt("[%s] closed=%d even=%d deg=%d", format_cf(w).c_str(), closed, even, degree));
    }
  }
  o.pass = o.items.empty();
  o.detail = fmt("words=%zu mismatches=%zu", words, o.items.size());
  return o;
}

Outcome known_values() {
  struct Row {
    std::vector<int> cf;
    std::string nabla;
    long det;
    int genus;
    long v3, lhs, rhs;
    Verdict verdict;
  };
  const std::vector<Row> table = {
      {{3}, "1 + z^2", 3, 1, 1, 2, 6, Verdict::ExcludedTorus},
      {{5}, "1 + 3*z^2 + z^4", 5, 2, 5, 30, 50, Verdict::ExcludedTorus},
      {{2, 2, 1}, "1 + 2*z^2", 7, 1, 3, 12, 26, Verdict::ObstructionHolds},
  };
  Outcome o;
  for (const auto& row : table) {
    const ContinuedFraction w{row.cf};
    const ObstructionRecord r = check(w, nullptr);
    const std::string nabla = conway(w, nullptr).to_string();
    const bool ok = nabla == row.nabla && r.inv.det == Integer(row.det) && r.inv.genus == row.genus &&
                    r.inv.v3 == Integer(row.v3) && r.lhs == Integer(row.lhs) && r.rhs == Integer(row.rhs) &&
                    r.verdict == row.verdict;
    if (!ok) {
      std::ostringstream os;
      os << "[" << format_cf(w) << "] nabla=" << nabla << " det=" << r.inv.det << " g=" << r.inv.genus
         << " v3=" << r.inv.v3 << " lhs=" << r.lhs << " rhs=" << r.rhs << " verdict=" << to_string(r.verdict);
      o.items.push_back(os.str());
    }
  }
  o.pass = o.items.empty();
  o.detail = fmt("rows=%zu mismatches=%zu (trefoil, C(5,1), 5_2)", table.size(), o.items.size());
  return o;
}

Outcome torus_direction() {
  Outcome o;
  std::ostringstream pairs;
  for (int n = 1; n <= 7; ++n) {
    const ObstructionRecord r = check(ContinuedFraction{{2 * n + 1}}, nullptr);
    pairs << (n > 1 ? " " : "") << "n" << n << ":" << r.lhs << "<" << r.rhs;
    if (!(r.rhs > r.lhs) || r.verdict != Verdict::ExcludedTorus) {
      o.items.push_back(fmt("n=%d lhs=%s rhs=%s", n, r.lhs.to_string().c_str(), r.rhs.to_string().c_str()));
    }
  }
  o.pass = o.items.empty();
  o.detail = pairs.str();
  return o;
}

Outcome quotient_17() {
  const fs::path out = work_dir() / "quotient_17.csv";
  sweep_to(17, hardware_workers(), out);
  const CsvTable t = CsvTable::read_file(out.string());
  fs::remove(out);
  Outcome o;
  std::size_t non_torus = 0;
  const Fraction one(Integer(1));
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.cell(r, "excluded_torus") == "true") continue;
    ++non_torus;
    const auto q = read_fraction(t, r, "quotient_num", "quotient_den");
    if (!q || *q <= one) {
      o.items.push_back("cf=" + t.cell(r, "cf") + " p/q=" + t.cell(r, "p") + "/" + t.cell(r, "q") +
                        " lhs=" + t.cell(r, "lhs") + " rhs=" + t.cell(r, "rhs") +
                        " quotient=" + (q ? q->to_string() : std::string("undefined")));
    }
  }
  o.pass = o.items.empty();
  o.detail = fmt("non_torus_rows=%zu with_quotient_le_1=%zu", non_torus, o.items.size());
  return o;
}

Outcome determinism_15() {
  const fs::path a = work_dir() / "det_1.csv", b = work_dir() / "det_8.csv";
  sweep_to(15, 1, a);
  sweep_to(15, 8, b);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  const std::string sa = slurp(a), sb = slurp(b);
  fs::remove(a);
  fs::remove(b);
  Outcome o;
  o.pass = !sa.empty() && sa == sb;
  o.detail = fmt("bytes(1 worker)=%zu bytes(8 workers)=%zu identical=%s", sa.size(), sb.size(), sa == sb ? "yes" : "no");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"main_theorem_21", [] { return main_theorem(21, 60, 8); }},
      {"main_theorem_31", [] { return main_theorem(31, 6000, 8); }},
      {"census_31", census_31},
      {"oracle_equivalence_13", oracle_equivalence_13},
      {"genus_consistency_17", genus_consistency_17},
      {"known_values", known_values},
      {"torus_direction", torus_direction},
      {"quotient_17", quotient_17},
      {"determinism_15", determinism_15},
  };

  CLI::App app{"posknot acceptance checks"};
  std::vector<std::string> only;
  bool list = false;
  app.add_option("--only", only, "Run just these criteria");
  app.add_flag("--list", list, "Print criterion names and exit");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& c : criteria) std::printf("%s\n", c.name.c_str());
    return 0;
  }
  const std::set<std::string> selected(only.begin(), only.end());
  for (const auto& name : selected) {
    bool known = false;
    for (const auto& c : criteria) known = known || c.name == name;
    if (!known) {
      std::fprintf(stderr, "unknown criterion '%s'\n", name.c_str());
      return 1;
    }
  }

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.name)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what(), {}};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", c.name.c_str(), o.detail.c_str());
    for (const auto& item : o.items) std::printf("    %s\n", item.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::error_code ec;
  fs::remove_all(work_dir(), ec);
  return failures == 0 ? 0 : 1;
}
