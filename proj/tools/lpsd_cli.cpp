// lpsd command-line tool. Talks to the shared library exclusively through
// the C API in lpsd.h.
//
// Exit codes: 0 inside/boundary (or success), 1 outside (or unmet cone
// precondition), 2 error, 3 falsification.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpsd.h"

using nlohmann::json;

namespace {

constexpr int kExitOutside = 1;
constexpr int kExitError = 2;
constexpr int kExitFalsified = 3;

struct MatrixDeleter {
  void operator()(lpsd_matrix* m) const { lpsd_matrix_free(m); }
};
using MatrixPtr = std::unique_ptr<lpsd_matrix, MatrixDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  lpsd_string_free(s);
  return out;
}

[[noreturn]] void die(const std::string& msg, int code = kExitError) {
  std::cerr << "error: " << msg << "\n";
  std::exit(code);
}

[[noreturn]] void die_status(lpsd_status st) {
  die(lpsd_last_error(), st == LPSD_FALSIFIED ? kExitFalsified : kExitError);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) die("cannot write " + output);
    out << text << "\n";
  }
}

std::vector<double> parse_vector(const std::string& text) {
  std::vector<double> out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(token, &pos));
      while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
      if (pos != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      die("invalid vector entry: \"" + token + "\"");
    }
  }
  if (out.empty()) die("empty vector");
  return out;
}

MatrixPtr load_matrix(const std::string& path) {
  lpsd_matrix* m = nullptr;
  lpsd_status st = lpsd_matrix_parse(read_file(path).c_str(), &m);
  if (st != LPSD_OK) die_status(st);
  return MatrixPtr(m);
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("LPSD_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;  // library default: all logical processors
}

int verdict_exit(lpsd_verdict v) { return v == LPSD_OUTSIDE ? kExitOutside : 0; }

const char* norm_name(lpsd_norm n) {
  switch (n) {
    case LPSD_NORM_TRACE: return "trace";
    case LPSD_NORM_FROBENIUS: return "frobenius";
    default: return "schatten";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-locally PSD matrix analysis: cone membership, eigenvalue "
               "bounds, spectrum realization, classification"};
  app.require_subcommand(1);

  // membership ------------------------------------------------------------
  auto* membership = app.add_subcommand("membership", "Cone membership test");
  std::string mem_set = "s_nk", mem_vector, mem_file, mem_output;
  int mem_k = 2;
  double mem_tol = 1e-9;
  bool mem_full = false;
  membership->add_option("--set", mem_set, "Cone: s_nk, h_e, or h_c")
      ->check(CLI::IsMember({"s_nk", "h_e", "h_c"}));
  membership->add_option("--k", mem_k, "Order k")->required();
  membership->add_option("--tol", mem_tol, "Tolerance")->check(CLI::PositiveNumber);
  membership->add_option("--vector", mem_vector, "Comma-separated vector (h_e only)");
  membership->add_option("--output", mem_output, "Output path (default stdout)");
  membership->add_flag("--full", mem_full, "List every violating submatrix (s_nk)");
  membership->add_option("file", mem_file, "Matrix file (JSON or plain text)");

  // bound -----------------------------------------------------------------
  auto* bound = app.add_subcommand("bound", "Eigenvalue / distance bounds");
  std::string bnd_norm = "trace", bnd_output, bnd_format = "json";
  int bnd_n = 0, bnd_k = 0, bnd_verify = 0, bnd_threads = 0, bnd_max_n = 0;
  double bnd_p = 2;
  std::uint64_t bnd_seed = 1;
  bool bnd_dist = false, bnd_sweep = false;
  bound->add_option("--norm", bnd_norm, "trace, frobenius, or schatten")
      ->check(CLI::IsMember({"trace", "frobenius", "schatten"}));
  bound->add_option("--p", bnd_p, "Schatten exponent (p >= 1)");
  bound->add_option("--n", bnd_n, "Matrix dimension n");
  bound->add_option("--k", bnd_k, "Order k");
  bound->add_flag("--dist", bnd_dist, "Frobenius distance bound instead of eigenvalue bound");
  bound->add_option("--verify", bnd_verify, "Check the bound on N sampled matrices");
  bound->add_option("--seed", bnd_seed, "Sampling seed");
  bound->add_option("--threads", bnd_threads, "Worker threads (env LPSD_THREADS as fallback)");
  bound->add_flag("--sweep", bnd_sweep, "Emit bounds for all 2 <= k <= n <= max-n");
  bound->add_option("--max-n", bnd_max_n, "Upper n for --sweep");
  bound->add_option("--format", bnd_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  bound->add_option("--output", bnd_output, "Output path (default stdout)");

  // realize ---------------------------------------------------------------
  auto* realize = app.add_subcommand("realize", "Realize a spectrum or quartic");
  std::string rlz_k, rlz_vector, rlz_quartic, rlz_output;
  double rlz_tol = 1e-9;
  realize->add_option("--k", rlz_k, "Realization family: 1 or n-1");
  realize->add_option("--vector", rlz_vector, "Comma-separated eigenvalue vector");
  realize->add_option("--quartic", rlz_quartic, "Quartic coefficients a0,a1,a2,a3");
  realize->add_option("--tol", rlz_tol, "Tolerance")->check(CLI::PositiveNumber);
  realize->add_option("--output", rlz_output, "Output path (default stdout)");

  // classify --------------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "Locally singular matrix classification");
  std::string cls_file, cls_output;
  int cls_k = 2, cls_n = 0, cls_samples = 100;
  double cls_tol = 1e-9;
  std::uint64_t cls_seed = 1;
  bool cls_enum42 = false, cls_nls = false, cls_structure = false, cls_congruent = false;
  classify->add_flag("--enumerate-42", cls_enum42, "Classify the 64 +-1 sign cases exactly");
  classify->add_flag("--nls", cls_nls, "Test a matrix for nonsingular local singularity");
  classify->add_flag("--congruent", cls_congruent, "Recover d with D G(n,k) D = M");
  classify->add_flag("--verify-structure", cls_structure,
                     "Random structure-theorem verification");
  classify->add_option("--k", cls_k, "Order k");
  classify->add_option("--n", cls_n, "Dimension n (structure verification)");
  classify->add_option("--samples", cls_samples, "Sample count")->check(CLI::PositiveNumber);
  classify->add_option("--seed", cls_seed, "Sampling seed");
  classify->add_option("--tol", cls_tol, "Tolerance")->check(CLI::PositiveNumber);
  classify->add_option("--output", cls_output, "Output path (default stdout)");
  classify->add_option("file", cls_file, "Matrix file (JSON or plain text)");

  CLI11_PARSE(app, argc, argv);

  if (membership->parsed()) {
    lpsd_verdict verdict;
    char* report = nullptr;
    lpsd_status st;
    if (mem_set == "h_e") {
      if (mem_vector.empty()) die("--set h_e requires --vector");
      std::vector<double> x = parse_vector(mem_vector);
      st = lpsd_membership_h_e(x.data(), static_cast<int>(x.size()), mem_k, mem_tol,
                               &verdict, &report);
    } else {
      if (mem_file.empty()) die("--set " + mem_set + " requires a matrix file");
      MatrixPtr m = load_matrix(mem_file);
      st = mem_set == "s_nk"
               ? lpsd_membership_s_nk(m.get(), mem_k, mem_tol, mem_full ? 1 : 0,
                                      &verdict, &report)
               : lpsd_membership_h_c(m.get(), mem_k, mem_tol, &verdict, &report);
    }
    if (st != LPSD_OK) die_status(st);
    emit(take_string(report), mem_output);
    return verdict_exit(verdict);
  }

  if (bound->parsed()) {
    lpsd_norm norm = bnd_norm == "trace"     ? LPSD_NORM_TRACE
                     : bnd_norm == "frobenius" ? LPSD_NORM_FROBENIUS
                                               : LPSD_NORM_SCHATTEN;
    if (bnd_sweep) {
      if (bnd_max_n < 2) die("--sweep requires --max-n >= 2");
      std::ostringstream os;
      json rows = json::array();
      if (bnd_format == "csv") os << "n,k,norm,bound\n";
      for (int n = 2; n <= bnd_max_n; ++n)
        for (int k = 2; k <= n; ++k) {
          double value;
          lpsd_status st = bnd_dist ? lpsd_frobenius_dist_bound(n, k, &value)
                                    : lpsd_min_eig_bound(norm, bnd_p, n, k, &value);
          if (st != LPSD_OK) die_status(st);
          const char* label = bnd_dist ? "dist" : norm_name(norm);
          if (bnd_format == "csv")
            os << n << "," << k << "," << label << ","
               << json(value).dump() << "\n";
          else
            rows.push_back({{"n", n}, {"k", k}, {"norm", label}, {"bound", value}});
        }
      std::string text = bnd_format == "csv" ? os.str() : json{{"rows", rows}}.dump();
      if (bnd_format == "csv" && !text.empty() && text.back() == '\n') text.pop_back();
      emit(text, bnd_output);
      return 0;
    }
    if (bnd_n < 2 || bnd_k < 2) die("bound requires --n and --k (both >= 2)");
    json j{{"n", bnd_n}, {"k", bnd_k}};
    double value;
    if (bnd_dist) {
      lpsd_status st = lpsd_frobenius_dist_bound(bnd_n, bnd_k, &value);
      if (st != LPSD_OK) die_status(st);
      j["norm"] = "dist";
    } else {
      lpsd_status st = lpsd_min_eig_bound(norm, bnd_p, bnd_n, bnd_k, &value);
      if (st != LPSD_OK) die_status(st);
      j["norm"] = norm_name(norm);
      if (norm == LPSD_NORM_SCHATTEN) j["p"] = bnd_p;
    }
    j["bound"] = value;
    if (bnd_verify > 0) {
      double worst;
      lpsd_status st = lpsd_bound_verify(norm, bnd_p, bnd_n, bnd_k, bnd_dist ? 1 : 0,
                                         bnd_verify, bnd_seed,
                                         resolve_threads(bnd_threads), &worst);
      if (st != LPSD_OK) die_status(st);
      bool ok = bnd_dist ? worst <= value + 1e-9 : worst >= value - 1e-9;
      j["verify"] = {{"samples", bnd_verify},
                     {"seed", bnd_seed},
                     {"worst", worst},
                     {"ok", ok}};
    }
    emit(j.dump(), bnd_output);
    return 0;
  }

  if (realize->parsed()) {
    char* out = nullptr;
    lpsd_status st;
    if (!rlz_quartic.empty()) {
      std::vector<double> a = parse_vector(rlz_quartic);
      if (a.size() != 4) die("--quartic expects exactly four coefficients a0,a1,a2,a3");
      st = lpsd_realize_quartic(a[0], a[1], a[2], a[3], &out);
    } else {
      if (rlz_vector.empty()) die("realize requires --vector or --quartic");
      if (rlz_k != "1" && rlz_k != "n-1") die("--k must be 1 or n-1");
      std::vector<double> x = parse_vector(rlz_vector);
      st = rlz_k == "1"
               ? lpsd_realize_k1(x.data(), static_cast<int>(x.size()), rlz_tol, &out)
               : lpsd_realize_h_nminus1(x.data(), static_cast<int>(x.size()), rlz_tol, &out);
    }
    if (st == LPSD_ERR_DOMAIN)
      die(lpsd_last_error(), kExitOutside);  // input parsed fine but lies outside the cone
    if (st != LPSD_OK) die_status(st);
    emit(take_string(out), rlz_output);
    return 0;
  }

  if (classify->parsed()) {
    if (cls_enum42 + cls_nls + cls_structure + cls_congruent != 1)
      die("classify requires exactly one of --enumerate-42, --nls, --congruent, "
          "--verify-structure");
    char* out = nullptr;
    if (cls_enum42) {
      lpsd_status st = lpsd_enumerate_sign_cases_42(&out);
      if (st != LPSD_OK) die_status(st);
      emit(take_string(out), cls_output);
      return 0;
    }
    if (cls_structure) {
      if (cls_n < 2) die("--verify-structure requires --n");
      lpsd_status st = lpsd_verify_structure(cls_n, cls_k, cls_samples, cls_seed, &out);
      if (st != LPSD_OK && st != LPSD_FALSIFIED) die_status(st);
      emit(take_string(out), cls_output);
      return st == LPSD_FALSIFIED ? kExitFalsified : 0;
    }
    if (cls_file.empty()) die("this classify mode requires a matrix file");
    MatrixPtr m = load_matrix(cls_file);
    if (cls_nls) {
      int nls = 0;
      lpsd_status st = lpsd_classify_nls(m.get(), cls_k, cls_tol, &nls, &out);
      if (st != LPSD_OK) die_status(st);
    } else {
      int found = 0;
      lpsd_status st = lpsd_diag_congruent_to_g(m.get(), cls_k, cls_tol, &found, &out);
      if (st != LPSD_OK) die_status(st);
    }
    emit(take_string(out), cls_output);
    return 0;
  }

  return kExitError;
}
