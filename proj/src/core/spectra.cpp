#include "lpsd/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lpsd {

namespace {

constexpr int kMaxSweeps = 100;

double off_diag_norm(const std::vector<double>& a, int n) {
  double s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = a[static_cast<size_t>(i) * n + j];
      s += 2 * v * v;
    }
  return std::sqrt(s);
}

}  // namespace

Spectrum eigenvalues_sym(const SymMatrix& m, bool want_vectors) {
  int n = m.dim();
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
  std::vector<double> q;
  if (want_vectors) {
    q.assign(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) q[static_cast<size_t>(i) * n + i] = 1.0;
  }
  auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

  double fro = 0;
  for (double v : a) fro += v * v;
  fro = std::sqrt(fro);
  const double thresh = 1e-14 * std::max(fro, 1e-300);

  int sweep = 0;
  while (off_diag_norm(a, n) > thresh) {
    if (++sweep > kMaxSweeps) throw NumericError("Jacobi eigensolver did not converge");
    for (int p = 0; p < n - 1; ++p) {
      for (int r = p + 1; r < n; ++r) {
        double apr = A(p, r);
        if (apr == 0.0) continue;
        double app = A(p, p), arr = A(r, r);
        double theta = (arr - app) / (2 * apr);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1.0 / std::sqrt(t * t + 1);
        double s = t * c;
        // Rotate rows/columns p,r of A.
        for (int j = 0; j < n; ++j) {
          double ap = A(p, j), ar = A(r, j);
          A(p, j) = c * ap - s * ar;
          A(r, j) = s * ap + c * ar;
        }
        for (int i = 0; i < n; ++i) {
          double ap = A(i, p), ar = A(i, r);
          A(i, p) = c * ap - s * ar;
          A(i, r) = s * ap + c * ar;
        }
        A(p, r) = A(r, p) = 0.0;
        if (want_vectors) {
          for (int i = 0; i < n; ++i) {
            double qp = q[static_cast<size_t>(i) * n + p], qr = q[static_cast<size_t>(i) * n + r];
            q[static_cast<size_t>(i) * n + p] = c * qp - s * qr;
            q[static_cast<size_t>(i) * n + r] = s * qp + c * qr;
          }
        }
      }
    }
  }

  Spectrum sp;
  sp.n = n;
  sp.values.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return A(x, x) < A(y, y); });
  for (int i = 0; i < n; ++i) sp.values[i] = A(order[i], order[i]);
  if (want_vectors) {
    sp.vectors.resize(static_cast<size_t>(n) * n);
    for (int col = 0; col < n; ++col)
      for (int row = 0; row < n; ++row)
        sp.vectors[static_cast<size_t>(col) * n + row] = q[static_cast<size_t>(row) * n + order[col]];
  }
  return sp;
}

std::pair<bool, double> is_psd(const SymMatrix& m, double tol) {
  if (tol < 0) throw DomainError("tolerance must be nonnegative");
  Spectrum sp = eigenvalues_sym(m);
  double lo = sp.values.front();
  return {lo >= -tol, lo};
}

template <class T>
static T elem_sym_impl(std::span<const T> x, int l) {
  int n = static_cast<int>(x.size());
  if (l < 0 || l > n) throw DomainError("elementary symmetric index out of range");
  if (l == 0) return T(1);
  std::vector<T> e(static_cast<size_t>(l) + 1, T(0));
  e[0] = T(1);
  for (int m = 0; m < n; ++m)
    for (int j = std::min(l, m + 1); j >= 1; --j) e[j] += x[m] * e[j - 1];
  return e[l];
}

double elementary_symmetric(std::span<const double> x, int l) { return elem_sym_impl(x, l); }
Rational elementary_symmetric(std::span<const Rational> x, int l) { return elem_sym_impl(x, l); }

std::vector<double> char_poly_coeffs(const SymMatrix& m) {
  int n = m.dim();
  Spectrum sp = eigenvalues_sym(m);
  std::vector<double> c(n + 1);
  for (int l = 0; l <= n; ++l) c[l] = elementary_symmetric(sp.values, l);
  return c;
}

std::vector<Rational> char_poly_coeffs(const RatMatrix& m) {
  int n = m.dim();
  std::vector<Rational> c(n + 1, Rational(0));
  c[0] = 1;
  for (int l = 1; l <= n; ++l) {
    Rational sum(0);
    IndexSet s = first_subset(l);
    do {
      sum += principal_minor(m, s);
    } while (next_subset(s, n));
    c[l] = sum;
  }
  return c;
}

std::vector<double> power_sums_from_coeffs(std::span<const double> coeffs, int upto) {
  if (upto < 1) throw DomainError("power sum count must be >= 1");
  int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) throw DomainError("coefficient vector too short");
  std::vector<double> m(upto + 1, 0.0);
  for (int k = 1; k <= upto; ++k) {
    double acc = 0;
    int imax = std::min(k - 1, n);
    for (int i = 1; i <= imax; ++i) {
      double sgn = (i % 2 == 1) ? 1.0 : -1.0;
      acc += sgn * coeffs[i] * m[k - i];
    }
    if (k <= n) acc += ((k % 2 == 1) ? 1.0 : -1.0) * k * coeffs[k];
    m[k] = acc;
  }
  return std::vector<double>(m.begin() + 1, m.end());
}

bool majorization_check(std::span<const double> d, std::span<const double> lambda,
                        double rel_tol) {
  if (d.size() != lambda.size()) throw DomainError("majorization: length mismatch");
  std::vector<double> ds(d.begin(), d.end()), ls(lambda.begin(), lambda.end());
  std::sort(ds.rbegin(), ds.rend());
  std::sort(ls.rbegin(), ls.rend());
  double scale = 1.0;
  for (double v : ls) scale = std::max(scale, std::abs(v));
  double tol = rel_tol * scale * static_cast<double>(ls.size());
  double pd = 0, pl = 0;
  for (size_t j = 0; j + 1 < ds.size(); ++j) {
    pd += ds[j];
    pl += ls[j];
    if (pd > pl + tol) return false;
  }
  pd += ds.back();
  pl += ls.back();
  return std::abs(pd - pl) <= tol;
}

SymMatrix schur_horn_realize(std::span<const double> d, std::span<const double> lambda) {
  if (!majorization_check(d, lambda)) throw DomainError("diagonal is not majorized by spectrum");
  int n = static_cast<int>(d.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return d[x] > d[y]; });

  std::vector<double> ls(lambda.begin(), lambda.end());
  std::sort(ls.rbegin(), ls.rend());

  SymMatrix a(n);
  for (int i = 0; i < n; ++i) a.set(i, i, ls[i]);
  double scale = 1.0;
  for (double v : ls) scale = std::max(scale, std::abs(v));

  std::vector<bool> active(n, true);
  std::vector<int> slot(n, -1);  // slot[m] = row holding target m

  for (int m = 0; m < n; ++m) {
    double t = d[order[m]];
    // Direct fix when an active diagonal entry already matches.
    int exact = -1, lo = -1, hi = -1;
    for (int i = 0; i < n; ++i) {
      if (!active[i]) continue;
      double v = a(i, i);
      if (std::abs(v - t) <= 1e-12 * scale) {
        exact = i;
        break;
      }
      if (v < t && (lo < 0 || v > a(lo, lo))) lo = i;
      if (v > t && (hi < 0 || v < a(hi, hi))) hi = i;
    }
    if (exact >= 0) {
      active[exact] = false;
      slot[m] = exact;
      continue;
    }
    if (lo < 0 || hi < 0) throw NumericError("Schur-Horn bracketing failed");
    double va = a(lo, lo), vb = a(hi, hi);
    double s2 = (t - va) / (vb - va);
    double c = std::sqrt(1.0 - s2), s = std::sqrt(s2);
    // A <- R^T A R with R the (lo,hi) plane rotation [c s; -s c],
    // written out for a symmetric store.
    int i = lo, j = hi;
    double aii = a(i, i), ajj = a(j, j), aij = a(i, j);
    for (int r = 0; r < n; ++r) {
      if (r == i || r == j) continue;
      double ai = a(r, i), aj = a(r, j);
      a.set(r, i, c * ai - s * aj);
      a.set(r, j, s * ai + c * aj);
    }
    a.set(i, i, c * c * aii - 2 * c * s * aij + s * s * ajj);
    a.set(j, j, s * s * aii + 2 * c * s * aij + c * c * ajj);
    a.set(i, j, c * s * (aii - ajj) + (c * c - s * s) * aij);
    active[i] = false;
    slot[m] = i;
  }

  // Permute so diag matches the requested order of d.
  std::vector<int> pos(n);
  for (int m = 0; m < n; ++m) pos[order[m]] = slot[m];
  SymMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.set(i, j, a(pos[i], pos[j]));
  return out;
}

bool interlacing_check(const SymMatrix& m, const IndexSet& s, double tol) {
  validate_index_set(s, m.dim());
  int n = m.dim(), k = static_cast<int>(s.size());
  std::vector<double> lam = eigenvalues_sym(m).values;                      // ascending
  std::vector<double> mu = eigenvalues_sym(principal_submatrix(m, s)).values;
  std::sort(lam.rbegin(), lam.rend());
  std::sort(mu.rbegin(), mu.rend());
  for (int i = 0; i < k; ++i) {
    if (lam[i + n - k] > mu[i] + tol) return false;
    if (mu[i] > lam[i] + tol) return false;
  }
  return true;
}

}  // namespace lpsd
