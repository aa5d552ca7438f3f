#include "lpsd/quartic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "lpsd/cones.hpp"
#include "lpsd/realize.hpp"
#include "lpsd/spectra.hpp"

namespace lpsd {

namespace {

using cplx = std::complex<double>;

double root_scale(const std::array<cplx, 4>& r) {
  double s = 1.0;
  for (const cplx& v : r) s = std::max(s, std::abs(v));
  return s;
}

cplx deriv(const QuarticPoly& p, cplx x) {
  return ((4.0 * x + 3.0 * p.a3) * x + 2.0 * p.a2) * x + p.a1;
}

double deriv2(const QuarticPoly& p, double x) { return (12.0 * x + 6.0 * p.a3) * x + 2.0 * p.a2; }

}  // namespace

QuarticPoly quartic_from_roots(const std::array<double, 4>& r) {
  std::vector<double> v(r.begin(), r.end());
  QuarticPoly p;
  p.a3 = -elementary_symmetric(v, 1);
  p.a2 = elementary_symmetric(v, 2);
  p.a1 = -elementary_symmetric(v, 3);
  p.a0 = elementary_symmetric(v, 4);
  return p;
}

std::array<cplx, 4> quartic_roots(const QuarticPoly& p) {
  // Cauchy bound on root magnitudes seeds the Durand-Kerner iteration.
  double bound = 1.0 + std::max({std::abs(p.a0), std::abs(p.a1), std::abs(p.a2), std::abs(p.a3)});
  std::array<cplx, 4> r;
  cplx seed(0.4, 0.9);
  cplx acc = seed;
  for (int i = 0; i < 4; ++i, acc *= seed) r[i] = 0.5 * bound * acc;

  for (int iter = 0; iter < 500; ++iter) {
    double step = 0;
    for (int i = 0; i < 4; ++i) {
      cplx num = p.eval(r[i]);
      cplx den(1, 0);
      for (int j = 0; j < 4; ++j)
        if (j != i) den *= r[i] - r[j];
      if (den == cplx(0, 0)) den = cplx(1e-300, 0);
      cplx delta = num / den;
      r[i] -= delta;
      step = std::max(step, std::abs(delta));
    }
    if (step < 1e-15 * bound) break;
  }
  // One Newton polish step per root, skipped near multiple roots.
  for (int i = 0; i < 4; ++i) {
    cplx d = deriv(p, r[i]);
    if (std::abs(d) > 1e-8 * bound * bound * bound) r[i] -= p.eval(r[i]) / d;
  }
  std::sort(r.begin(), r.end(), [](const cplx& a, const cplx& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return r;
}

namespace {

// Plain Newton polish of a single root candidate; accepts only roots that
// land on the real axis.
bool accept_simple_root(const QuarticPoly& p, cplx v, double s, std::vector<double>& out) {
  for (int it = 0; it < 8; ++it) {
    cplx d = deriv(p, v);
    if (std::abs(d) < 1e-12 * s * s * s) break;
    cplx step = p.eval(v) / d;
    v -= step;
    if (std::abs(step) < 1e-15 * s) break;
  }
  if (std::abs(v.imag()) > 1e-7 * s) return false;
  out.push_back(v.real());
  return true;
}

// Treats a cluster of m nearby approximations as one m-fold root:
// multiplicity-aware Newton refinement followed by derivative-residual
// validation. Returns false when the cluster is not a genuine m-fold root.
bool accept_multiple_root(const QuarticPoly& p, const std::vector<cplx>& cluster, double s,
                          std::vector<double>& out) {
  int m = static_cast<int>(cluster.size());
  cplx c(0, 0);
  for (const cplx& v : cluster) c += v;
  c /= static_cast<double>(m);
  // An m-fold root of p is a simple root of p^(m-1), which locates it to
  // machine precision: exactly for m = 4 (linear) and m = 3 (quadratic),
  // and by well-conditioned Newton on the cubic p' for m = 2. Refining on
  // p itself would stall at the eps^(1/m) noise floor instead.
  double cr = c.real();
  if (m == 4) {
    cr = -p.a3 / 4.0;
  } else if (m == 3) {
    // p''(x) = 12 x^2 + 6 a3 x + 2 a2; pick the root nearest the cluster.
    double disc = 36.0 * p.a3 * p.a3 - 96.0 * p.a2;
    if (disc < 0) return false;
    double sq = std::sqrt(disc);
    double r1 = (-6.0 * p.a3 + sq) / 24.0, r2 = (-6.0 * p.a3 - sq) / 24.0;
    cr = std::abs(r1 - cr) < std::abs(r2 - cr) ? r1 : r2;
  } else {
    for (int it = 0; it < 60; ++it) {
      double d2 = deriv2(p, cr);
      if (d2 == 0) break;
      double step = deriv(p, cplx(cr, 0)).real() / d2;
      cr -= step;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(cr))) break;
    }
  }
  // A genuine m-fold root comes back from the iteration as a cluster of
  // radius ~eps^(1/m); anything wider is a wrongly merged cluster of
  // distinct roots (or a wide complex pair) and must take the fallback path.
  static constexpr double radius_cap[5] = {0, 0, 1e-5, 1e-3, 1e-2};
  for (const cplx& v : cluster)
    if (std::abs(v - cplx(cr, 0)) > radius_cap[m] * s) return false;
  // Tight enough that a complex pair masquerading as a real double root is
  // rejected well outside the diagnostic boundary bands used by callers.
  const double tol = 1e-8;
  if (std::abs(p.eval(cr)) > tol * s * s * s * s) return false;
  if (std::abs(deriv(p, cr).real()) > tol * s * s * s) return false;
  if (m >= 3 && std::abs(deriv2(p, cr)) > tol * s * s) return false;
  for (int t = 0; t < m; ++t) out.push_back(cr);
  return true;
}

}  // namespace

std::optional<std::array<double, 4>> real_roots(const QuarticPoly& p) {
  std::array<cplx, 4> r = quartic_roots(p);
  double s = root_scale(r);

  // Coarse proximity clustering: an m-fold root comes back from the
  // iteration as a cluster of radius ~eps^(1/m), so the tolerance must be
  // generous; the validation step below rejects wrongly merged clusters.
  std::array<int, 4> group{0, 1, 2, 3};
  const double cluster_tol = 1e-2 * s;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < i; ++j)
      if (std::abs(r[i] - r[j]) < cluster_tol) {
        int from = group[i], to = group[j];
        for (int t = 0; t < 4; ++t)
          if (group[t] == from) group[t] = to;
      }

  std::vector<double> out;
  out.reserve(4);
  // A cluster that fails validation as one m-fold root may still be a
  // multiple root next to a nearby simple one (the coarse tolerance above
  // cannot tell them apart), so on failure split the cluster at its widest
  // internal gap and retry the halves. Genuinely complex members eventually
  // fail the real-axis check in the simple-root leaf.
  auto handle = [&](auto&& self, std::vector<cplx> members) -> bool {
    if (members.size() == 1) return accept_simple_root(p, members[0], s, out);
    if (accept_multiple_root(p, members, s, out)) return true;
    if (members.size() == 2)
      return accept_simple_root(p, members[0], s, out) &&
             accept_simple_root(p, members[1], s, out);
    std::sort(members.begin(), members.end(),
              [](const cplx& a, const cplx& b) { return a.real() < b.real(); });
    std::size_t cut = 1;
    double widest = -1;
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      double gap = members[i + 1].real() - members[i].real();
      if (gap > widest) {
        widest = gap;
        cut = i + 1;
      }
    }
    return self(self, {members.begin(), members.begin() + cut}) &&
           self(self, {members.begin() + cut, members.end()});
  };
  for (int g = 0; g < 4; ++g) {
    std::vector<cplx> members;
    for (int t = 0; t < 4; ++t)
      if (group[t] == g) members.push_back(r[t]);
    if (members.empty()) continue;
    if (!handle(handle, std::move(members))) return std::nullopt;
  }
  if (out.size() != 4) return std::nullopt;
  std::sort(out.begin(), out.end());
  std::array<double, 4> res;
  std::copy(out.begin(), out.end(), res.begin());
  return res;
}

bool has_good_roots(const QuarticPoly& p, double tol) {
  auto rr = real_roots(p);
  if (!rr) return false;
  double s = 1.0;
  for (double v : *rr) s = std::max(s, std::abs(v));
  int negatives = 0;
  for (double v : *rr) {
    if (std::abs(v) <= tol * s) return false;  // zero root
    if (v < 0) ++negatives;
  }
  if (negatives != 1) return false;
  std::vector<double> v(rr->begin(), rr->end());
  return in_h_e(v, 2, std::max(tol, 1e-7)).verdict == Verdict::Boundary;
}

bool good_roots_coefficient_route(const QuarticPoly& p, double tol) {
  double s = 1.0;
  if (auto rr = real_roots(p)) {
    for (double v : *rr) s = std::max(s, std::abs(v));
  } else {
    return false;
  }
  return p.a0 < -tol * std::pow(s, 4) && std::abs(p.a2) <= std::max(tol, 1e-7) * s * s &&
         p.a3 <= tol * s;
}

DiscriminantPair discriminant_check(const QuarticPoly& p) {
  const double b = p.a3, c = p.a2, d = p.a1, e = p.a0;
  DiscriminantPair out;
  out.general = 256 * e * e * e - 192 * b * d * e * e - 128 * c * c * e * e +
                144 * c * d * d * e - 27 * d * d * d * d + 144 * b * b * c * e * e -
                6 * b * b * d * d * e - 80 * b * c * c * d * e + 18 * b * c * d * d * d +
                16 * c * c * c * c * e - 4 * c * c * c * d * d - 27 * b * b * b * b * e * e +
                18 * b * b * b * c * d * e - 4 * b * b * b * d * d * d -
                4 * b * b * c * c * c * e + b * b * c * c * d * d;
  double scale = std::max({1.0, std::abs(d), std::abs(e)});
  if (std::abs(c) <= 1e-12 * scale && std::abs(b + 1.0) <= 1e-12) {
    const double a1 = d, a0 = e;
    out.special = -4 * a1 * a1 * a1 - 27 * a1 * a1 * a1 * a1 - 6 * a1 * a1 * a0 - 27 * a0 * a0 -
                  192 * a1 * a0 * a0 + 256 * a0 * a0 * a0;
  }
  return out;
}

QuarticPoly normalize_a3_minus1(const QuarticPoly& p, double tol) {
  double scale = std::max({1.0, std::abs(p.a0), std::abs(p.a1), std::abs(p.a2)});
  if (p.a3 >= -tol * scale)
    throw DomainError(
        "normalization needs a3 < 0 (a3 = 0 with a2 = 0, a0 < 0 admits no real-rooted quartic)");
  double t = -p.a3;  // x = t*y, divide by t^4
  QuarticPoly q;
  q.a3 = -1.0;
  q.a2 = p.a2 / (t * t);
  q.a1 = p.a1 / (t * t * t);
  q.a0 = p.a0 / (t * t * t * t);
  return q;
}

namespace {

// Power sums of the roots from the coefficients, m_1..m_upto.
std::vector<double> power_sums(const QuarticPoly& p, int upto) {
  std::vector<double> e = {1.0, -p.a3, p.a2, -p.a1, p.a0};
  return power_sums_from_coeffs(e, upto);
}

}  // namespace

SymMatrix hermite_matrix(const QuarticPoly& p) {
  std::vector<double> m = power_sums(p, 8);  // m[0] = m_1
  SymMatrix h(4);
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) h.set(i - 1, j - 1, m[i + j - 1]);
  return h;
}

SymMatrix hankel_matrix(const QuarticPoly& p) {
  std::vector<double> m = power_sums(p, 6);
  auto mk = [&](int k) { return k == 0 ? 4.0 : m[k - 1]; };
  SymMatrix h(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) h.set(i, j, mk(i + j));
  return h;
}

namespace {

QuarticPoly certificate_q(const QuarticPoly& p, double k) {
  QuarticPoly q;
  q.a0 = -p.a0 / 16.0;
  q.a1 = -p.a1 / 4.0;
  q.a2 = k;
  q.a3 = p.a3;
  return q;
}

// Characteristic polynomial of D G(4,2) D from the squared diagonal,
// via the coefficient bridge p = -16 b0 - 4 b1 x + b3 x^3 + x^4.
QuarticPoly dgd_char_poly(const std::array<double, 4>& dsq) {
  std::vector<double> v(dsq.begin(), dsq.end());
  double b0 = elementary_symmetric(v, 4);
  double b1 = -elementary_symmetric(v, 3);
  double b3 = -elementary_symmetric(v, 1);
  QuarticPoly p;
  p.a0 = -16.0 * b0;
  p.a1 = -4.0 * b1;
  p.a2 = 0.0;
  p.a3 = b3;
  return p;
}

double coeff_rel_error(const QuarticPoly& a, const QuarticPoly& b) {
  double scale = std::max({1.0, std::abs(a.a0), std::abs(a.a1), std::abs(a.a2), std::abs(a.a3)});
  return std::max({std::abs(a.a0 - b.a0), std::abs(a.a1 - b.a1), std::abs(a.a2 - b.a2),
                   std::abs(a.a3 - b.a3)}) /
         scale;
}

// Minimum-norm Gauss-Newton polish of a squared-diagonal candidate: the
// certificate only has to match e_1, e_3, e_4 of the squared diagonal
// (e_2 is the free parameter), a 3-equation system in 4 root unknowns.
// Rescues root multisets whose multiplicity structure was resolved slightly
// wrong by the oracle (e.g. a double root next to a close simple one).
void polish_dsq(const QuarticPoly& p, std::array<double, 4>& r) {
  const double t1 = -p.a3, t3 = p.a1 / 4.0, t4 = -p.a0 / 16.0;
  double s = 1.0;
  for (double v : r) s = std::max(s, std::abs(v));
  // Jitter breaks ties: at repeated roots the Jacobian columns coincide and
  // the iteration could not leave the symmetric subspace.
  for (int i = 0; i < 4; ++i) r[i] += 1e-7 * s * (i - 1.5);
  for (int it = 0; it < 40; ++it) {
    std::vector<double> rv(r.begin(), r.end());
    double f[3] = {elementary_symmetric(rv, 1) - t1, elementary_symmetric(rv, 3) - t3,
                   elementary_symmetric(rv, 4) - t4};
    double jac[3][4];
    for (int i = 0; i < 4; ++i) {
      std::vector<double> rest;
      for (int j = 0; j < 4; ++j)
        if (j != i) rest.push_back(r[j]);
      jac[0][i] = 1.0;
      jac[1][i] = elementary_symmetric(rest, 2);
      jac[2][i] = rest[0] * rest[1] * rest[2];
    }
    // Solve (J J^T) lam = f, step = J^T lam (least-norm correction).
    double a[3][4];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        a[i][j] = 0;
        for (int t = 0; t < 4; ++t) a[i][j] += jac[i][t] * jac[j][t];
      }
      a[i][3] = f[i];
    }
    for (int col = 0; col < 3; ++col) {
      int piv = col;
      for (int row = col + 1; row < 3; ++row)
        if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
      if (a[piv][col] == 0) return;
      std::swap(a[piv], a[col]);
      for (int row = 0; row < 3; ++row) {
        if (row == col) continue;
        double m = a[row][col] / a[col][col];
        for (int j = col; j <= 3; ++j) a[row][j] -= m * a[col][j];
      }
    }
    double lam[3];
    for (int i = 0; i < 3; ++i) lam[i] = a[i][3] / a[i][i];
    double step = 0;
    for (int i = 0; i < 4; ++i) {
      double d = jac[0][i] * lam[0] + jac[1][i] * lam[1] + jac[2][i] * lam[2];
      r[i] -= d;
      step = std::max(step, std::abs(d));
    }
    if (step < 1e-15 * s) break;
  }
  std::sort(r.begin(), r.end());
}

std::optional<AlmostNonnegCertificate> try_certificate(const QuarticPoly& p, double k) {
  QuarticPoly q = certificate_q(p, k);
  auto rr = real_roots(q);
  if (!rr) return std::nullopt;
  double s = 1.0;
  for (double v : *rr) s = std::max(s, std::abs(v));
  for (double v : *rr)
    if (v < -1e-9 * s) return std::nullopt;
  AlmostNonnegCertificate cert;
  cert.k = k;
  for (int i = 0; i < 4; ++i) cert.roots_q[i] = std::max((*rr)[i], 0.0);
  cert.residual = coeff_rel_error(p, dgd_char_poly(cert.roots_q));
  if (cert.residual > 1e-6) {
    polish_dsq(p, cert.roots_q);
    for (double& v : cert.roots_q) {
      if (v < -1e-9 * s) return std::nullopt;
      v = std::max(v, 0.0);
    }
    cert.residual = coeff_rel_error(p, dgd_char_poly(cert.roots_q));
    if (cert.residual > 1e-6) return std::nullopt;
    std::vector<double> rv(cert.roots_q.begin(), cert.roots_q.end());
    cert.k = elementary_symmetric(rv, 2);
  }
  for (int i = 0; i < 4; ++i) cert.d[i] = std::sqrt(cert.roots_q[i]);
  return cert;
}

}  // namespace

std::optional<AlmostNonnegCertificate> find_almost_nonneg_k(const QuarticPoly& p) {
  // For real roots of q, sum of squared roots a3^2 - 2k >= 0 and
  // k = e_2(nonnegative roots) >= 0 bracket the search.
  double k_hi = 0.5 * p.a3 * p.a3 + 1e-9;
  if (k_hi <= 0) k_hi = 1.0;

  // q(x; k) = x^4 + b x^3 + k x^2 + d x + e with b, d, e fixed by p. The set
  // of k making q real-rooted is cut out by disc_x q >= 0, and disc_x q is a
  // quartic polynomial in k, so the feasible set's endpoints are among its
  // real roots. The feasible interval can be far narrower than any practical
  // grid, which rules out sampling k directly.
  const double b = p.a3, d = -p.a1 / 4.0, e = -p.a0 / 16.0;
  double c4 = 16 * e;
  double c3 = -4 * d * d - 4 * b * b * e;
  double c2 = -128 * e * e - 80 * b * d * e + b * b * d * d;
  double c1 = 144 * d * d * e + 144 * b * b * e * e + 18 * b * d * d * d + 18 * b * b * b * d * e;
  double c0 = 256 * e * e * e - 192 * b * d * e * e - 27 * d * d * d * d -
              6 * b * b * d * d * e - 27 * b * b * b * b * e * e - 4 * b * b * b * d * d * d;

  std::vector<double> candidates = {0.0, k_hi};
  double cs = std::max({std::abs(c4), std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
  if (std::abs(c4) > 1e-14 * cs) {
    QuarticPoly dk{c0 / c4, c1 / c4, c2 / c4, c3 / c4};
    std::array<cplx, 4> kr = quartic_roots(dk);
    std::vector<double> real_kr;
    for (const cplx& v : kr) real_kr.push_back(v.real());
    std::sort(real_kr.begin(), real_kr.end());
    // Tangency (point-feasible) k sit at multiple roots of disc_k, where the
    // iteration above is only eps^(1/m)-accurate -- not enough, since q's
    // realness degrades as sqrt of the k error. Rather than guess each
    // root's multiplicity, emit every plausible refinement per root (simple
    // Newton, a double-root polish on disc_k', the exact roots of the
    // quadratic disc_k'', the exact quadruple point) and let the certificate
    // validation below discard the wrong ones.
    for (double r : real_kr) {
      candidates.push_back(r);
      double k1 = r;
      for (int it = 0; it < 8; ++it) {
        double f = dk.eval(cplx(k1, 0)).real();
        double fp = ((4 * k1 + 3 * dk.a3) * k1 + 2 * dk.a2) * k1 + dk.a1;
        if (fp == 0) break;
        k1 -= f / fp;
      }
      candidates.push_back(k1);
      double k2 = r;
      for (int it = 0; it < 30; ++it) {
        double fp = ((4 * k2 + 3 * dk.a3) * k2 + 2 * dk.a2) * k2 + dk.a1;
        double fpp = (12 * k2 + 6 * dk.a3) * k2 + 2 * dk.a2;
        if (fpp == 0) break;
        double step = fp / fpp;
        k2 -= step;
        if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(k2))) break;
      }
      candidates.push_back(k2);
    }
    double disc2 = 36.0 * dk.a3 * dk.a3 - 96.0 * dk.a2;
    if (disc2 >= 0) {
      double sq = std::sqrt(disc2);
      candidates.push_back((-6.0 * dk.a3 + sq) / 24.0);
      candidates.push_back((-6.0 * dk.a3 - sq) / 24.0);
    }
    candidates.push_back(-dk.a3 / 4.0);
    for (std::size_t i = 0; i + 1 < real_kr.size(); ++i)
      candidates.push_back(0.5 * (real_kr[i] + real_kr[i + 1]));
  }
  // The same tangency k, computed the well-conditioned way: eliminating k
  // from q(y) = q'(y) = 0 leaves 2 y^4 + b y^3 - d y - 2 e = 0 in the double
  // root position y, whose roots stay well separated even when the roots of
  // disc_k (and hence the feasible k-interval) collapse below double
  // precision resolution. Each y maps back to k = -(4 y^3 + 3 b y^2 + d)/(2 y).
  {
    QuarticPoly ry{-e, -d / 2.0, 0.0, b / 2.0};
    std::array<cplx, 4> yr = quartic_roots(ry);
    for (const cplx& v : yr) {
      double y = v.real();
      for (int it = 0; it < 8; ++it) {
        double f = ry.eval(cplx(y, 0)).real();
        double fp = ((4 * y + 3 * ry.a3) * y + 2 * ry.a2) * y + ry.a1;
        if (fp == 0) break;
        y -= f / fp;
      }
      if (std::abs(y) < 1e-12) continue;
      candidates.push_back(-((4 * y + 3 * b) * y * y + d) / (2 * y));
    }
  }
  for (double k : candidates)
    if (k >= -1e-9 && k <= k_hi)
      if (auto cert = try_certificate(p, k)) return cert;
  return std::nullopt;
}

SymMatrix realize_quartic_as_dgd(const QuarticPoly& p) {
  if (!has_good_roots(p)) throw DomainError("polynomial does not have good roots");
  auto cert = find_almost_nonneg_k(p);
  if (!cert)
    throw FalsificationError(
        "good-rooted quartic admitted no almost-nonnegative certificate");
  std::vector<double> d(cert->d.begin(), cert->d.end());
  return diagonal_congruence(gram_g<double>(4, 2), d);
}

std::array<double, 4> certificate_region_diagnostics(double a0, double a1, double k) {
  double a1_2 = a1 * a1, a1_3 = a1_2 * a1, a1_4 = a1_3 * a1;
  double a0_2 = a0 * a0, a0_3 = a0_2 * a0;
  double k2 = k * k, k3 = k2 * k, k4 = k3 * k, k5 = k4 * k;

  double p1 = -27 * a1_4 / 256 - 9 * a1_3 * k / 32 + a1_3 / 16 - 9.0 / 16 * a1_2 * a0 * k +
              3 * a1_2 * a0 / 128 - a1_2 * k3 / 4 + a1_2 * k2 / 16 + 3 * a1 * a0_2 / 16 -
              5.0 / 4 * a1 * a0 * k2 + 9 * a1 * a0 * k / 32 - a0_3 / 16 - a0_2 * k2 / 2 +
              9 * a0_2 * k / 16 - 27 * a0_2 / 256 - a0 * k4 + a0 * k3 / 4;

  double p2 = 27 * a1_4 / 256 + 9 * a1_3 * k / 32 + a1_3 / 8 + 45.0 / 128 * a1_2 * a0 * k -
              9 * a1_2 * a0 / 128 + a1_2 * k3 / 4 + 45 * a1_2 * k2 / 16 + a1_2 * k +
              37 * a1_2 / 8 - 9 * a1 * a0_2 / 128 + 11.0 / 16 * a1 * a0 * k2 -
              43 * a1 * a0 * k / 32 - 53 * a1 * a0 / 32 + 9 * a1 * k3 + 27 * a1 * k / 2 -
              3 * a1 + a0_3 / 64 + 3 * a0_2 * k2 / 16 + 23 * a0_2 * k / 128 +
              77 * a0_2 / 256 + a0 * k4 / 2 + 27 * a0 * k3 / 8 - 3 * a0 * k2 + 3 * a0 * k / 8 -
              3 * a0 / 8 + 8 * k5 - 2 * k4 + 16 * k3 - 4 * k2;

  double p3 = -3 * a1_3 / 16 + 3 * a1_2 * a0 / 64 - 19 * a1_2 * k2 / 16 - a1_2 * k -
              17 * a1_2 / 16 + 11 * a1 * a0 * k / 32 + 17 * a1 * a0 / 32 - 9 * a1 * k3 / 2 -
              a1 * k2 + 3 * a1 * k - 15 * a1 / 2 - 3 * a0_2 * k / 32 - 17 * a0_2 / 256 -
              5 * a0 * k3 / 4 + 9 * a0 * k2 / 8 - 11 * a0 * k / 8 + 21 * a0 / 8 - 4 * k5 + k4 -
              16 * k3 + 33 * k2 - 38 * k + 9;

  double p4 = -3 * a1_2 / 16 - 3 * a1 * k + 5 * a1 / 2 + 3 * a0 * k / 8 - 5 * a0 / 8 + 2 * k3 -
              11 * k2 + 12 * k - 7;

  return {p1, p2, p3, p4};
}

}  // namespace lpsd
