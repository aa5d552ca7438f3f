#ifndef LPSD_IO_HPP
#define LPSD_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "lpsd/cones.hpp"
#include "lpsd/symmat.hpp"

namespace lpsd {

using MatrixValue = std::variant<SymMatrix, RatMatrix>;

// {"n": int, "mode": "float"|"exact", "rows": [[...], ...]}; exact entries
// are "p/q" strings. Mode defaults to float when omitted.
MatrixValue parse_matrix_json(const std::string& text);
// Whitespace-separated square matrix, float mode only.
SymMatrix parse_matrix_text(const std::string& text);
// Dispatches on leading '{'.
MatrixValue parse_matrix(const std::string& text);

std::string matrix_to_json(const SymMatrix& m);
std::string matrix_to_json(const RatMatrix& m);
std::string matrix_to_json(const MatrixValue& m);

// {"verdict": ..., "margin": ..., "certificate": ...}
std::string report_to_json(const MembershipReport& rep);

std::vector<double> parse_vector_csv(const std::string& text);

}  // namespace lpsd

#endif
