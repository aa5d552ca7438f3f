#include "lpsd/symmat.hpp"

#include <vector>

namespace lpsd {

namespace {

// Plain dense LU with partial pivoting on a row-major copy.
// Returns determinant; fills inv if requested (Gauss-Jordan pass).
double lu_determinant(const SymMatrix& m) {
  int n = m.dim();
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[static_cast<size_t>(r) * n + col]) >
          std::abs(a[static_cast<size_t>(piv) * n + col]))
        piv = r;
    if (a[static_cast<size_t>(piv) * n + col] == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(piv) * n + j], a[static_cast<size_t>(col) * n + j]);
      det = -det;
    }
    double p = a[static_cast<size_t>(col) * n + col];
    det *= p;
    for (int r = col + 1; r < n; ++r) {
      double f = a[static_cast<size_t>(r) * n + col] / p;
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a[static_cast<size_t>(r) * n + j] -= f * a[static_cast<size_t>(col) * n + j];
    }
  }
  return det;
}

}  // namespace

double determinant(const SymMatrix& m) { return lu_determinant(m); }

Rational determinant(const RatMatrix& m) {
  int n = m.dim();
  std::vector<Rational> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
  auto at = [&](int i, int j) -> Rational& { return a[static_cast<size_t>(i) * n + j]; };
  Rational prev(1);
  int sign = 1;
  for (int col = 0; col < n - 1; ++col) {
    if (at(col, col) == 0) {
      int piv = -1;
      for (int r = col + 1; r < n; ++r)
        if (at(r, col) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return Rational(0);
      for (int j = 0; j < n; ++j) std::swap(at(col, j), at(piv, j));
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int j = col + 1; j < n; ++j)
        at(r, j) = (at(col, col) * at(r, j) - at(r, col) * at(col, j)) / prev;
      at(r, col) = 0;
    }
    prev = at(col, col);
  }
  Rational d = at(n - 1, n - 1);
  return sign > 0 ? d : Rational(-d);
}

RatMatrix inverse(const RatMatrix& m) {
  int n = m.dim();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw NumericError("matrix is singular");
    std::swap(a[col], a[piv]);
    Rational p = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  RatMatrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) inv.set(i, j, a[i][n + j]);
  return inv;
}

SymMatrix inverse(const SymMatrix& m) {
  int n = m.dim();
  std::vector<std::vector<double>> a(n, std::vector<double>(2 * n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1.0;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0) throw NumericError("matrix is numerically singular");
    std::swap(a[col], a[piv]);
    double p = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  // Symmetrize the result; roundoff breaks exact symmetry.
  SymMatrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) inv.set(i, j, 0.5 * (a[i][n + j] + a[j][n + i]));
  return inv;
}

double jacobi_identity_residual(const SymMatrix& m, const IndexSet& s) {
  int n = m.dim();
  validate_index_set(s, n);
  if (static_cast<int>(s.size()) >= n) throw DomainError("S must be a proper subset");
  double det_m = determinant(m);
  if (det_m == 0.0) throw NumericError("matrix is singular");
  SymMatrix mi = inverse(m);
  double lhs = principal_minor(m, s);
  double rhs = det_m * principal_minor(mi, complement_set(s, n));
  return std::abs(lhs - rhs);
}

Rational jacobi_identity_residual(const RatMatrix& m, const IndexSet& s) {
  int n = m.dim();
  validate_index_set(s, n);
  if (static_cast<int>(s.size()) >= n) throw DomainError("S must be a proper subset");
  Rational det_m = determinant(m);
  if (det_m == 0) throw NumericError("matrix is singular");
  RatMatrix mi = inverse(m);
  Rational lhs = principal_minor(m, s);
  Rational rhs = det_m * principal_minor(mi, complement_set(s, n));
  Rational diff = lhs - rhs;
  return diff < 0 ? Rational(-diff) : diff;
}

}  // namespace lpsd
