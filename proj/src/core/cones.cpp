#include "lpsd/cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpsd/spectra.hpp"

namespace lpsd {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Inside: return "inside";
    case Verdict::Boundary: return "boundary";
    case Verdict::Outside: return "outside";
  }
  return "?";
}

MembershipReport in_s_nk(const SymMatrix& m, int k, double tol, bool full_certificates) {
  int n = m.dim();
  if (k < 1 || k > n) throw DomainError("in_s_nk requires 1 <= k <= n");
  MembershipReport rep;
  rep.margin = std::numeric_limits<double>::infinity();
  IndexSet s = first_subset(k);
  do {
    double lo = eigenvalues_sym(principal_submatrix(m, s)).values.front();
    if (lo < rep.margin) {
      rep.margin = lo;
      rep.violating_set = s;
    }
    if (lo < -tol) {
      if (!full_certificates) break;
      rep.all_violations.push_back(s);
    }
  } while (next_subset(s, n));
  if (rep.margin < -tol)
    rep.verdict = Verdict::Outside;
  else if (rep.margin <= tol)
    rep.verdict = Verdict::Boundary;
  else
    rep.verdict = Verdict::Inside;
  return rep;
}

MembershipReport in_h_e(std::span<const double> x, int k, double tol) {
  int n = static_cast<int>(x.size());
  if (k < 1 || k > n) throw DomainError("in_h_e requires 1 <= k <= n");
  double scale = 1.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  MembershipReport rep;
  rep.margin = std::numeric_limits<double>::infinity();
  double ek_slack = 0;
  for (int l = 1; l <= k; ++l) {
    // Degree-l homogeneity: normalize by scale^l.
    double slack = elementary_symmetric(x, l) / std::pow(scale, l);
    if (l == k) ek_slack = slack;
    if (slack < rep.margin) {
      rep.margin = slack;
      rep.violating_poly = l;
    }
  }
  if (rep.margin < -tol)
    rep.verdict = Verdict::Outside;
  else if (ek_slack <= tol)
    rep.verdict = Verdict::Boundary;
  else
    rep.verdict = Verdict::Inside;
  return rep;
}

MembershipReport in_h_c(const SymMatrix& m, int k, double tol) {
  return in_h_e(eigenvalues_sym(m).values, k, tol);
}

double h_e_nminus1_psd_margin(std::span<const double> x) {
  int n = static_cast<int>(x.size());
  if (n < 2) throw DomainError("need n >= 2");
  SymMatrix X(n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i; j < n - 1; ++j) X.set(i, j, (i == j ? x[i] : 0.0) + x[n - 1]);
  return eigenvalues_sym(X).values.front();
}

bool in_h_e_nminus1_psd_test(std::span<const double> x, double tol) {
  return h_e_nminus1_psd_margin(x) >= -tol;
}

namespace {

void validate_bound_spec(const BoundSpec& spec) {
  if (spec.k < 2) throw DomainError("bound requires k >= 2");
  if (spec.k > spec.n) throw DomainError("bound requires k <= n");
  if (spec.norm == NormKind::Schatten && spec.p < 1) throw DomainError("Schatten exponent p >= 1");
}

}  // namespace

double min_eig_bound(const BoundSpec& spec) {
  validate_bound_spec(spec);
  int n = spec.n, k = spec.k;
  if (k == n) return 0.0;  // PSD case: lambda_1(G(n,n)) = 0
  double lam1 = static_cast<double>(k - n) / (k - 1);
  switch (spec.norm) {
    case NormKind::Trace:
      return static_cast<double>(k - n) / (n * (k - 1));
    case NormKind::Frobenius: {
      double big = static_cast<double>(k) / (k - 1);
      double f = std::sqrt((n - 1) * big * big + lam1 * lam1);
      return lam1 / f;
    }
    case NormKind::Schatten: {
      double big = static_cast<double>(k) / (k - 1);
      double f = std::pow((n - 1) * std::pow(big, spec.p) + std::pow(std::abs(lam1), spec.p),
                          1.0 / spec.p);
      return lam1 / f;
    }
  }
  throw DomainError("unknown norm");
}

double min_eig_bound_alt(const BoundSpec& spec) {
  validate_bound_spec(spec);
  int n = spec.n, k = spec.k;
  if (k == n) return 0.0;
  // f evaluated at (-1, k/(n-k), ..., k/(n-k)).
  double r = static_cast<double>(k) / (n - k);
  double f;
  switch (spec.norm) {
    case NormKind::Trace:
      f = -1.0 + (n - 1) * r;
      break;
    case NormKind::Frobenius:
      f = std::sqrt(1.0 + (n - 1) * r * r);
      break;
    case NormKind::Schatten:
      f = std::pow(1.0 + (n - 1) * std::pow(r, spec.p), 1.0 / spec.p);
      break;
    default:
      throw DomainError("unknown norm");
  }
  return -1.0 / f;
}

double frobenius_dist_to_psd(const SymMatrix& m) {
  double s = 0;
  for (double lam : eigenvalues_sym(m).values)
    if (lam < 0) s += lam * lam;
  return std::sqrt(s);
}

double frobenius_dist_bound(int n, int k) {
  if (k < 2 || k > n) throw DomainError("distance bound requires 2 <= k <= n");
  double nk = n - k;
  return std::pow(nk, 1.5) / std::sqrt(nk * nk + (n - 1) * static_cast<double>(k) * k);
}

}  // namespace lpsd
