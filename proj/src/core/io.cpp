#include "lpsd/io.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace lpsd {
namespace {

using nlohmann::json;

Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw ParseError("invalid rational literal: \"" + s + "\"");
  }
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

json require(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("matrix JSON missing \"") + key + "\"");
  return j.at(key);
}

template <class T, class EntryFn>
SymMatrixT<T> rows_to_matrix(const json& rows, int n, EntryFn entry) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError("\"rows\" must be an array of n rows");
  std::vector<std::vector<T>> data(n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError("row " + std::to_string(i + 1) + " must have n entries");
    data[i].reserve(n);
    for (int j = 0; j < n; ++j) data[i].push_back(entry(row.at(j)));
  }
  try {
    return SymMatrixT<T>::from_rows(data, /*symmetrize=*/false);
  } catch (const DomainError& e) {
    throw ParseError(e.what());  // malformed input, not a caller bug
  }
}

}  // namespace

MatrixValue parse_matrix_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  json jn = require(j, "n");
  if (!jn.is_number_integer() || jn.get<int>() < 1)
    throw ParseError("\"n\" must be a positive integer");
  int n = jn.get<int>();
  std::string mode = j.value("mode", std::string("float"));
  json rows = require(j, "rows");

  if (mode == "float") {
    return rows_to_matrix<double>(rows, n, [](const json& e) {
      if (!e.is_number()) throw ParseError("float matrix entries must be numbers");
      return e.get<double>();
    });
  }
  if (mode == "exact") {
    return rows_to_matrix<Rational>(rows, n, [](const json& e) -> Rational {
      if (e.is_number_integer()) return Rational(e.get<long long>());
      if (e.is_string()) return rational_from_string(e.get<std::string>());
      throw ParseError("exact matrix entries must be integers or \"p/q\" strings");
    });
  }
  throw ParseError("\"mode\" must be \"float\" or \"exact\"");
}

SymMatrix parse_matrix_text(const std::string& text) {
  std::istringstream is(text);
  std::vector<double> entries;
  double v;
  while (is >> v) entries.push_back(v);
  if (!is.eof()) throw ParseError("plain-text matrix contains a non-numeric token");
  if (entries.empty()) throw ParseError("empty matrix input");
  int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
  if (static_cast<std::size_t>(n) * n != entries.size())
    throw ParseError("plain-text matrix must have n*n entries");
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = entries[i * n + j];
  try {
    return SymMatrix::from_rows(rows, /*symmetrize=*/false);
  } catch (const DomainError& e) {
    throw ParseError(e.what());  // malformed input, not a caller bug
  }
}

MatrixValue parse_matrix(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_matrix_json(text);
    break;
  }
  return parse_matrix_text(text);
}

std::string matrix_to_json(const SymMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.dim()}, {"mode", "float"}, {"rows", std::move(rows)}}.dump();
}

std::string matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(rational_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.dim()}, {"mode", "exact"}, {"rows", std::move(rows)}}.dump();
}

std::string matrix_to_json(const MatrixValue& m) {
  return std::visit([](const auto& v) { return matrix_to_json(v); }, m);
}

std::string report_to_json(const MembershipReport& rep) {
  json j;
  j["verdict"] = to_string(rep.verdict);
  j["margin"] = rep.margin;
  json cert = json::object();
  if (rep.violating_set) {
    json idx = json::array();
    for (int i : *rep.violating_set) idx.push_back(i + 1);  // reports are 1-based
    cert["submatrix"] = std::move(idx);
  }
  if (rep.violating_poly) cert["poly_index"] = *rep.violating_poly;
  if (!rep.all_violations.empty()) {
    json all = json::array();
    for (const IndexSet& s : rep.all_violations) {
      json idx = json::array();
      for (int i : s) idx.push_back(i + 1);
      all.push_back(std::move(idx));
    }
    cert["all_violations"] = std::move(all);
  }
  j["certificate"] = std::move(cert);
  return j.dump();
}

std::vector<double> parse_vector_csv(const std::string& text) {
  std::vector<double> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(token, &pos);
    } catch (const std::exception&) {
      throw ParseError("invalid vector entry: \"" + token + "\"");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size()) throw ParseError("invalid vector entry: \"" + token + "\"");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty vector");
  return out;
}

}  // namespace lpsd
