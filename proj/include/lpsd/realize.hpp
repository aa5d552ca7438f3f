#ifndef LPSD_REALIZE_HPP
#define LPSD_REALIZE_HPP

#include <random>
#include <span>
#include <string>

#include "lpsd/symmat.hpp"

namespace lpsd {

enum class RealizeRoute { Diag, SchurHornInverse, ZeroDiagShift };

std::string to_string(RealizeRoute r);

struct RealizationResult {
  SymMatrix matrix;
  double shift = 0;  // t >= 0 added as t*I
  RealizeRoute route = RealizeRoute::Diag;
};

// Realizes x as eigenvalues of a matrix in S^{n,1}: Schur-Horn with zero
// diagonal on the centered vector, plus mean*I. Requires sum(x) >= -tol.
RealizationResult realize_k1(std::span<const double> x, double tol = 1e-9);

// Realizes a boundary point of H(e_{n-1}^n). Nonnegative x goes through
// diag(x); with one negative entry, M = L^{-1} where L has zero diagonal
// and eigenvalues 1/x_i (the reciprocal sum vanishes on the boundary).
RealizationResult realize_boundary_nminus1(std::span<const double> x, double tol = 1e-7);

// Shifts x down to the cone boundary, realizes there, and adds t*I back.
RealizationResult realize_h_nminus1(std::span<const double> x, double tol = 1e-9);

// D G(n,k) D for the given diagonal; all entries of d must be nonzero.
template <class T>
SymMatrixT<T> dgd_family(int n, int k, const std::vector<T>& d) {
  for (const T& v : d)
    if (v == T(0)) throw DomainError("dgd_family requires nonzero diagonal entries");
  return diagonal_congruence(gram_g<T>(n, k), d);
}

enum class SampleStrategy { Rejection, Congruence, PsdMix };

// Deterministic-per-seed sampler of matrices in S^{n,k}.
SymMatrix sample_s_nk(int n, int k, std::mt19937_64& rng,
                      SampleStrategy strategy = SampleStrategy::PsdMix);

}  // namespace lpsd

#endif
