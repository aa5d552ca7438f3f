#ifndef LPSD_SPECTRA_HPP
#define LPSD_SPECTRA_HPP

#include <span>
#include <vector>

#include "lpsd/symmat.hpp"

namespace lpsd {

// Eigenvalues sorted ascending; vectors (column-major, column i pairs with
// values[i]) only filled when requested.
struct Spectrum {
  std::vector<double> values;
  std::vector<double> vectors;  // empty unless requested; size n*n
  int n = 0;

  double vec(int row, int col) const { return vectors[static_cast<size_t>(col) * n + row]; }
};

// Cyclic Jacobi rotations; intended for small dense matrices (n <= 64).
Spectrum eigenvalues_sym(const SymMatrix& m, bool want_vectors = false);

// e_l(x) by the prefix recurrence e_l(x_1..x_m) = e_l(..m-1) + x_m e_{l-1}(..m-1).
double elementary_symmetric(std::span<const double> x, int l);
Rational elementary_symmetric(std::span<const Rational> x, int l);

// c[l] = e_l(eigenvalues), c[0] = 1, length n+1.
std::vector<double> char_poly_coeffs(const SymMatrix& m);
// Exact route by principal-minor summation: c[l] = sum over |S|=l of det(M|_S).
std::vector<Rational> char_poly_coeffs(const RatMatrix& m);

// Power sums m_1..m_upto of the roots of the monic polynomial whose
// elementary-symmetric values are coeffs (coeffs[l] = e_l, coeffs[0] = 1),
// via the Newton identities; no root extraction.
std::vector<double> power_sums_from_coeffs(std::span<const double> coeffs, int upto);

// Schur-Horn condition: d majorized by lambda (both sorted internally).
bool majorization_check(std::span<const double> d, std::span<const double> lambda,
                        double rel_tol = 1e-10);

// Builds a symmetric matrix with diagonal d and eigenvalues lambda by
// Givens rotations of diag(lambda), one target diagonal entry at a time.
SymMatrix schur_horn_realize(std::span<const double> d, std::span<const double> lambda);

// Cauchy interlacing of M|_S against M, to tolerance (test utility).
bool interlacing_check(const SymMatrix& m, const IndexSet& s, double tol = 1e-9);

}  // namespace lpsd

#endif
