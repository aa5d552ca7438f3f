#ifndef LPSD_NLS_HPP
#define LPSD_NLS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lpsd/symmat.hpp"

namespace lpsd {

struct CongruenceWitness {
  bool found = false;
  std::vector<double> d;  // nonzero entries; DG(n,k)D rebuilds the query
  std::string reason;     // singular | wrong diagonal signs | off-diagonal mismatch |
                          // sign pattern not rank-one
};

struct SignCase {
  int id = 0;                    // 0..63
  std::array<int, 6> signs{};    // strict upper triangle of the 4x4 matrix
  enum class Label { Singular, CongruentToG } label = Label::Singular;
};

// M in S^{n,k} with every k x k principal minor vanishing.
bool is_locally_singular(const SymMatrix& m, int k, double tol = 1e-9);
bool is_locally_singular(const RatMatrix& m, int k, double psd_tol = 1e-9);

// Nonsingular and locally singular.
bool is_nls(const SymMatrix& m, int k, double tol = 1e-9);
bool is_nls(const RatMatrix& m, int k, double psd_tol = 1e-9);

// Exact classification of the 64 unit-diagonal +-1 sign matrices. Every
// case is singular or diagonally congruent to G(4,2); anything else throws
// FalsificationError.
std::vector<SignCase> enumerate_sign_cases_42();

// Attempts to recover d with DG(n,k)D = M: square roots of the diagonal,
// off-diagonal magnitude check, then 2-coloring of the positive-entry
// graph for the sign pattern.
CongruenceWitness diag_congruent_to_g(const SymMatrix& m, int k, double tol = 1e-9);

struct StructureSampleResult {
  int index = 0;
  bool passed = false;
  std::string reason;
  std::vector<double> d;  // generator diagonal
};

struct StructureReport {
  int n = 0, k = 0;
  int samples = 0;
  int passed = 0;
  bool falsified = false;
  std::vector<StructureSampleResult> results;
};

// Random DGD-generated NLS instances (diagonal congruences only) are fed
// to diag_congruent_to_g; for k == n-2 the expected minor sign pattern
// (det < 0, (n-1)-minors < 0, (n-3)-minors > 0) is checked as well.
StructureReport verify_structure_theorem(int n, int k, int samples, std::uint64_t seed);

}  // namespace lpsd

#endif
