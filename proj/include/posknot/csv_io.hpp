#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posknot/fraction.hpp"
#include "posknot/obstruction.hpp"

namespace posknot {

/// Column order of the results file.
inline constexpr std::string_view kResultsHeader =
    "crossings,p,q,cf,a2,a4,det,genus,v3,lhs,rhs,equal,excluded_torus,complexity,"
    "quotient,quotient_num,quotient_den,s_k,s_k_num,s_k_den";

/// 12 significant digits, e.g. 0.461538461538.
std::string format_decimal(const Fraction& f);

/// One results line without the trailing newline. Empty rational cells mean rhs == 0.
std::string format_result_row(const ObstructionRecord& r);

/// RFC 4180 field splitting (quoted fields, doubled quotes).
std::vector<std::string> split_csv_line(std::string_view line);
std::string quote_csv_field(std::string_view field);

/// A parsed CSV file addressed by header name.
class CsvTable {
 public:
  static CsvTable read(std::istream& in);           // throws ParseError
  static CsvTable read_file(const std::string& path);  // throws IoError / ParseError

  const std::vector<std::string>& header() const { return header_; }
  std::size_t rows() const { return rows_.size(); }
  /// Column index; throws ParseError naming the missing column.
  std::size_t column(std::string_view name) const;
  const std::string& cell(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  const std::string& cell(std::size_t row, std::string_view name) const { return rows_[row][column(name)]; }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Exact value from a num/den column pair; nullopt for empty cells.
std::optional<Fraction> read_fraction(const CsvTable& t, std::size_t row, std::string_view num_col,
                                      std::string_view den_col);

}  // namespace posknot
