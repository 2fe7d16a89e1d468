#include "posknot/csv_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "posknot/errors.hpp"

namespace posknot {

std::string format_decimal(const Fraction& f) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", f.to_double());
  return buf;
}

std::string quote_csv_field(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_result_row(const ObstructionRecord& r) {
  std::string line;
  auto field = [&](std::string_view v) {
    if (!line.empty()) line += ',';
    line += v;
  };
  field(std::to_string(r.crossings()));
  field(r.key.p.to_string());
  field(r.key.q_star.to_string());
  field(quote_csv_field(format_cf(r.cf)));
  field(r.inv.a2.to_string());
  field(r.inv.a4.to_string());
  field(r.inv.det.to_string());
  field(std::to_string(r.inv.genus));
  field(r.inv.v3.to_string());
  field(r.lhs.to_string());
  field(r.rhs.to_string());
  field(r.lhs == r.rhs ? "true" : "false");
  field(r.verdict == Verdict::ExcludedTorus ? "true" : "false");
  field(r.complexity.to_string());
  for (const auto* value : {&r.quotient, &r.s_k}) {
    if (*value) {
      field(format_decimal(**value));
      field((*value)->num().to_string());
      field((*value)->den().to_string());
    } else {
      field("");
      field("");
      field("");
    }
  }
  return line;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV line: " + std::string(line));
  fields.push_back(std::move(cur));
  return fields;
}

CsvTable CsvTable::read(std::istream& in) {
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("CSV input has no header row");
  t.header_ = split_csv_line(line);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != t.header_.size()) {
      throw ParseError("CSV line " + std::to_string(line_no) + " has " + std::to_string(fields.size()) +
                       " fields, header has " + std::to_string(t.header_.size()));
    }
    t.rows_.push_back(std::move(fields));
  }
  return t;
}

CsvTable CsvTable::read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read(in);
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return i;
  }
  throw ParseError("missing CSV column '" + std::string(name) + "'");
}

std::optional<Fraction> read_fraction(const CsvTable& t, std::size_t row, std::string_view num_col,
                                      std::string_view den_col) {
  const std::string& n = t.cell(row, num_col);
  const std::string& d = t.cell(row, den_col);
  if (n.empty() && d.empty()) return std::nullopt;
  try {
    return Fraction(Integer(n), Integer(d));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad rational cell: ") + e.what());
  }
}

}  // namespace posknot
