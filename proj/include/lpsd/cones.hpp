#ifndef LPSD_CONES_HPP
#define LPSD_CONES_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpsd/symmat.hpp"

namespace lpsd {

enum class Verdict { Inside, Boundary, Outside };

std::string to_string(Verdict v);

struct MembershipReport {
  Verdict verdict = Verdict::Inside;
  // Minimum slack over the active constraint family (smallest eigenvalue
  // across k-blocks for S^{n,k}; minimum scaled e_l slack for H(e_k^n)).
  double margin = 0;
  std::optional<IndexSet> violating_set;     // first violating/active submatrix
  std::optional<int> violating_poly;         // index l of violating/active e_l
  std::vector<IndexSet> all_violations;      // populated on request only
};

// Checks every C(n,k) principal submatrix. Early exit on first violation
// unless full_certificates is set.
MembershipReport in_s_nk(const SymMatrix& m, int k, double tol = 1e-9,
                         bool full_certificates = false);

// Slack test e_1(x),...,e_k(x) >= 0; boundary requires e_k(x) ~ 0 given
// membership. Slacks are normalized by max(1, |x|_inf)^l.
MembershipReport in_h_e(std::span<const double> x, int k, double tol = 1e-9);

// Verdict for H(c_k^n) via the eigenvalue vector.
MembershipReport in_h_c(const SymMatrix& m, int k, double tol = 1e-9);

// x in H(e_{n-1}^n) iff diag(x_1..x_{n-1}) + x_n 11^T is PSD.
bool in_h_e_nminus1_psd_test(std::span<const double> x, double tol = 1e-9);
// Margin version (smallest eigenvalue of the reformulated matrix).
double h_e_nminus1_psd_margin(std::span<const double> x);

enum class NormKind { Trace, Frobenius, Schatten };

struct BoundSpec {
  NormKind norm = NormKind::Trace;
  double p = 2;  // Schatten exponent, p >= 1
  int n = 0;
  int k = 0;
};

// lambda_1(G(n,k)) / F(G(n,k)) in closed form. Zero when k == n.
double min_eig_bound(const BoundSpec& spec);
// Same quantity as -1/f(-1, k/(n-k), ..., k/(n-k)); agreement to 1e-12
// with min_eig_bound is asserted by tests.
double min_eig_bound_alt(const BoundSpec& spec);

// Frobenius projection distance onto the PSD cone: sqrt(sum min(lambda_i,0)^2).
double frobenius_dist_to_psd(const SymMatrix& m);

// (n-k)^{3/2} / sqrt((n-k)^2 + (n-1)k^2), the distance bound for
// Frobenius-normalized matrices.
double frobenius_dist_bound(int n, int k);

}  // namespace lpsd

#endif
