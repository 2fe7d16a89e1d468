#include "posknot/plot_data.hpp"

#include <fstream>

#include "posknot/csv_io.hpp"
#include "posknot/errors.hpp"

namespace posknot {

namespace fs = std::filesystem;

std::string_view s_k_band(const Fraction& s_k) {
  if (s_k < kSkLowThreshold) return "low";
  if (s_k > kSkHighThreshold) return "high";
  return "mid";
}

const std::vector<std::string>& plot_file_names() {
  static const std::vector<std::string> names = {
      "complexity_vs_quotient.csv",   "q_vs_s_k.csv",          "p_vs_q_s_k_band.csv",
      "complexity_vs_difference.csv", "min_pq_vs_difference.csv", "q_vs_difference.csv",
      "q_vs_quotient.csv",
  };
  return names;
}

namespace {

class Sink {
 public:
  Sink(const fs::path& path, std::string_view header) : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
    if (!out_) throw IoError("cannot write " + path.string());
    out_ << header << '\n';
  }
  void row(std::initializer_list<std::string_view> cells) {
    bool first = true;
    for (auto c : cells) {
      if (!first) out_ << ',';
      out_ << c;
      first = false;
    }
    out_ << '\n';
  }
  void close() {
    out_.close();
    if (!out_) throw IoError("write failed for " + path_.string());
  }

 private:
  fs::path path_;
  std::ofstream out_;
};

}  // namespace

void emit_plot_data(const fs::path& results_csv, const fs::path& out_dir) {
  const CsvTable t = CsvTable::read_file(results_csv.string());
  const std::size_t c_p = t.column("p"), c_q = t.column("q"), c_lhs = t.column("lhs"), c_rhs = t.column("rhs"),
                    c_torus = t.column("excluded_torus"), c_complexity = t.column("complexity"),
                    c_quot = t.column("quotient"), c_sk = t.column("s_k");

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

  const auto& names = plot_file_names();
  Sink complexity_quotient(out_dir / names[0], "complexity,quotient,excluded_torus");
  Sink q_sk(out_dir / names[1], "q,s_k,excluded_torus");
  Sink p_q_band(out_dir / names[2], "p,q,s_k,band,excluded_torus");
  Sink complexity_diff(out_dir / names[3], "complexity,difference,excluded_torus");
  Sink minpq_diff(out_dir / names[4], "min_pq,difference,excluded_torus");
  Sink q_diff(out_dir / names[5], "q,difference,excluded_torus");
  Sink q_quotient(out_dir / names[6], "q,quotient,excluded_torus");

  for (std::size_t r = 0; r < t.rows(); ++r) {
    const std::string& p = t.cell(r, c_p);
    const std::string& q = t.cell(r, c_q);
    const std::string& torus = t.cell(r, c_torus);
    const std::string& complexity = t.cell(r, c_complexity);
    Integer pi, qi, lhs, rhs;
    try {
      pi = Integer(p);
      qi = Integer(q);
      lhs = Integer(t.cell(r, c_lhs));
      rhs = Integer(t.cell(r, c_rhs));
    } catch (const std::invalid_argument& e) {
      throw ParseError("results row " + std::to_string(r + 2) + ": " + e.what());
    }
    const std::string difference = (lhs - rhs).to_string();
    const std::string min_pq = (abs(pi) < abs(qi) ? abs(pi) : abs(qi)).to_string();

    complexity_diff.row({complexity, difference, torus});
    minpq_diff.row({min_pq, difference, torus});
    q_diff.row({q, difference, torus});

    auto quotient = read_fraction(t, r, "quotient_num", "quotient_den");
    auto s_k = read_fraction(t, r, "s_k_num", "s_k_den");
    if (quotient) {
      complexity_quotient.row({complexity, t.cell(r, c_quot), torus});
      q_quotient.row({q, t.cell(r, c_quot), torus});
    }
    if (s_k) {
      q_sk.row({q, t.cell(r, c_sk), torus});
      p_q_band.row({p, q, t.cell(r, c_sk), s_k_band(*s_k), torus});
    }
  }

  for (Sink* s : {&complexity_quotient, &q_sk, &p_q_band, &complexity_diff, &minpq_diff, &q_diff, &q_quotient}) {
    s->close();
  }
}

}  // namespace posknot
