#ifndef LPSD_QUARTIC_HPP
#define LPSD_QUARTIC_HPP

#include <array>
#include <complex>
#include <optional>

#include "lpsd/symmat.hpp"

namespace lpsd {

// Monic quartic a0 + a1 x + a2 x^2 + a3 x^3 + x^4.
struct QuarticPoly {
  double a0 = 0, a1 = 0, a2 = 0, a3 = 0;

  std::complex<double> eval(std::complex<double> x) const {
    return (((x + a3) * x + a2) * x + a1) * x + a0;
  }
  double eval(double x) const { return (((x + a3) * x + a2) * x + a1) * x + a0; }
};

QuarticPoly quartic_from_roots(const std::array<double, 4>& r);

// Root oracle: Durand-Kerner iteration with a Newton polish step, plus
// cluster merging so multiple roots are reported at full accuracy.
std::array<std::complex<double>, 4> quartic_roots(const QuarticPoly& p);

// Real roots if the polynomial is real rooted (multiple roots resolved via
// derivative refinement of root clusters), otherwise nullopt.
std::optional<std::array<double, 4>> real_roots(const QuarticPoly& p);

// Good-root conditions: real rooted, no zero roots, exactly one
// negative root, roots on the boundary of H(e_2^4).
bool has_good_roots(const QuarticPoly& p, double tol = 1e-9);
// Coefficient cross-check route: real rooted, a0 < 0, a2 = 0, a3 <= 0.
bool good_roots_coefficient_route(const QuarticPoly& p, double tol = 1e-9);

struct DiscriminantPair {
  double general = 0;             // classical quartic discriminant
  std::optional<double> special;  // the a2 = 0, a3 = -1 normalized expression
};

// General discriminant always; the normalized expression only when the
// input already has a2 ~ 0 and a3 ~ -1.
DiscriminantPair discriminant_check(const QuarticPoly& p);

// Substitution x -> |a3| y rescaling a good-rooted p into the a3 = -1,
// a2 = 0 normal form. Requires a3 < 0.
QuarticPoly normalize_a3_minus1(const QuarticPoly& p, double tol = 1e-9);

// The 4x4 matrix M_ij = m_{i+j} of root power sums m_2..m_8.
SymMatrix hermite_matrix(const QuarticPoly& p);
// Classical Hankel matrix H_ij = m_{i+j-2} (m_0 = 4); PSD iff real rooted.
SymMatrix hankel_matrix(const QuarticPoly& p);

struct AlmostNonnegCertificate {
  double k = 0;
  std::array<double, 4> roots_q{};
  std::array<double, 4> d{};
  double residual = 0;  // max relative coefficient error of the rebuilt char poly
};

// Searches k so that q = -a0/16 - (a1/4) x + k x^2 + a3 x^3 + x^4 has four
// nonnegative real roots and the certificate reconstructs p.
std::optional<AlmostNonnegCertificate> find_almost_nonneg_k(const QuarticPoly& p);

// D G(4,2) D whose characteristic polynomial is p. Requires good roots;
// a failed certificate search throws FalsificationError.
SymMatrix realize_quartic_as_dgd(const QuarticPoly& p);

// The four inequality polynomials in (a0, a1, k) associated with the
// Hermite-matrix criterion, kept as diagnostic evaluators.
// Their signs are not constant over the certificate domain (see the test
// suite), so no sign is asserted here.
std::array<double, 4> certificate_region_diagnostics(double a0, double a1, double k);

}  // namespace lpsd

#endif
