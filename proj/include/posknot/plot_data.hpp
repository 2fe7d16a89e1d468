#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "posknot/fraction.hpp"

namespace posknot {

/// s(K) colour band thresholds for the p-vs-q plot.
inline const Fraction kSkLowThreshold{Integer(1), Integer(50)};   // 0.02
inline const Fraction kSkHighThreshold{Integer(9), Integer(200)};  // 0.045

/// "low" below 0.02, "high" above 0.045, "mid" otherwise (endpoints included).
std::string_view s_k_band(const Fraction& s_k);

/// Names of the derived files, in the order they are written.
const std::vector<std::string>& plot_file_names();

/// Reads a results CSV and writes one derived CSV per plot into out_dir:
///   complexity_vs_quotient.csv   p+q      vs |lhs|/|rhs|
///   q_vs_s_k.csv                 q        vs s_k
///   p_vs_q_s_k_band.csv          p, q, s_k and its band
///   complexity_vs_difference.csv p+q      vs lhs-rhs
///   min_pq_vs_difference.csv     min(p,q) vs lhs-rhs
///   q_vs_difference.csv          q        vs lhs-rhs
///   q_vs_quotient.csv            q        vs |lhs|/|rhs|
/// Every file carries the excluded_torus column. Rows with rhs = 0 are left
/// out of the quotient and s_k files. Throws IoError / ParseError.
void emit_plot_data(const std::filesystem::path& results_csv, const std::filesystem::path& out_dir);

}  // namespace posknot
