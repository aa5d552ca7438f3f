#ifndef LPSD_SYMMAT_HPP
#define LPSD_SYMMAT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lpsd {

using Rational = boost::multiprecision::cpp_rational;

// Exceptions used throughout the library.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Thrown when a check that would falsify a structural claim fails.
struct FalsificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sorted set of 0-based row/column indices.
using IndexSet = std::vector<int>;

inline void validate_index_set(const IndexSet& s, int n) {
  if (s.empty()) throw DomainError("index set must be nonempty");
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n) throw DomainError("index out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw DomainError("index set must be strictly increasing");
  }
}

inline IndexSet full_index_set(int n) {
  IndexSet s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  return s;
}

// Advances s to the next k-subset of [0,n) in lexicographic order.
// Returns false after the last subset.
inline bool next_subset(IndexSet& s, int n) {
  int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[i] == n - k + i) --i;
  if (i < 0) return false;
  ++s[i];
  for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

inline IndexSet first_subset(int k) {
  IndexSet s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  return s;
}

inline IndexSet complement_set(const IndexSet& s, int n) {
  IndexSet c;
  size_t p = 0;
  for (int i = 0; i < n; ++i) {
    if (p < s.size() && s[p] == i) {
      ++p;
    } else {
      c.push_back(i);
    }
  }
  return c;
}

// Dense symmetric matrix with value semantics. T is double (float mode)
// or Rational (exact mode).
template <class T>
class SymMatrixT {
 public:
  SymMatrixT() : n_(0) {}
  explicit SymMatrixT(int n) : n_(n), a_(static_cast<size_t>(n) * n, T(0)) {
    if (n < 1) throw DomainError("matrix dimension must be >= 1");
  }

  static SymMatrixT identity(int n) {
    SymMatrixT m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, T(1));
    return m;
  }

  // Rejects non-symmetric input unless symmetrize is set, in which case
  // (A + A^T)/2 is stored.
  static SymMatrixT from_rows(const std::vector<std::vector<T>>& rows, bool symmetrize = false) {
    int n = static_cast<int>(rows.size());
    SymMatrixT m(n);
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) != n) throw DomainError("matrix rows must be square");
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (rows[i][j] != rows[j][i]) {
          if (!symmetrize) throw DomainError("input matrix is not symmetric");
        }
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        T v = symmetrize ? (rows[i][j] + rows[j][i]) / T(2) : rows[i][j];
        m.set(i, j, v);
      }
    return m;
  }

  int dim() const { return n_; }

  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  void set(int i, int j, const T& v) {
    a_[static_cast<size_t>(i) * n_ + j] = v;
    a_[static_cast<size_t>(j) * n_ + i] = v;
  }

  bool operator==(const SymMatrixT& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  int n_;
  std::vector<T> a_;
};

using SymMatrix = SymMatrixT<double>;
using RatMatrix = SymMatrixT<Rational>;

template <class T>
SymMatrixT<T> principal_submatrix(const SymMatrixT<T>& m, const IndexSet& s) {
  validate_index_set(s, m.dim());
  int k = static_cast<int>(s.size());
  SymMatrixT<T> r(k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) r.set(i, j, m(s[i], s[j]));
  return r;
}

// Bareiss fraction-free elimination; exact over the rationals.
Rational determinant(const RatMatrix& m);
// LU with partial pivoting.
double determinant(const SymMatrix& m);

template <class T>
T principal_minor(const SymMatrixT<T>& m, const IndexSet& s) {
  return determinant(principal_submatrix(m, s));
}

template <class T>
SymMatrixT<T> diagonal_congruence(const SymMatrixT<T>& m, const std::vector<T>& d) {
  if (static_cast<int>(d.size()) != m.dim()) throw DomainError("diagonal vector length mismatch");
  SymMatrixT<T> r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j) r.set(i, j, d[i] * d[j] * m(i, j));
  return r;
}

// M \ {i} = M|_{[n]\{i}} - (1/M_ii) m_i m_i^T  where m_i is column i
// without its i-th entry.
template <class T>
SymMatrixT<T> schur_complement(const SymMatrixT<T>& m, int idx, double pivot_tol = 0.0) {
  int n = m.dim();
  if (idx < 0 || idx >= n) throw DomainError("pivot index out of range");
  if (n < 2) throw DomainError("matrix too small for Schur complement");
  const T& piv = m(idx, idx);
  if constexpr (std::is_same_v<T, double>) {
    if (std::abs(piv) <= pivot_tol) throw NumericError("zero pivot in Schur complement");
  } else {
    if (piv == 0) throw NumericError("zero pivot in Schur complement");
  }
  IndexSet rest = complement_set({idx}, n);
  SymMatrixT<T> r(n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int j = i; j < n - 1; ++j)
      r.set(i, j, m(rest[i], rest[j]) - m(rest[i], idx) * m(rest[j], idx) / piv);
  return r;
}

// G(n,k) = k/(k-1) I - 1/(k-1) 11^T: unit diagonal, off-diagonal -1/(k-1).
template <class T>
SymMatrixT<T> gram_g(int n, int k) {
  if (k < 2) throw DomainError("gram_g requires k >= 2");
  if (k > n) throw DomainError("gram_g requires k <= n");
  SymMatrixT<T> g(n);
  T off = T(-1) / T(k - 1);
  for (int i = 0; i < n; ++i) {
    g.set(i, i, T(1));
    for (int j = i + 1; j < n; ++j) g.set(i, j, off);
  }
  return g;
}

RatMatrix inverse(const RatMatrix& m);  // Gauss-Jordan, throws on singular
SymMatrix inverse(const SymMatrix& m);  // LU, throws on near-singular

// |det(M|_S) - det(M) det(M^-1|_{S^c})|; exactly zero in exact mode.
double jacobi_identity_residual(const SymMatrix& m, const IndexSet& s);
Rational jacobi_identity_residual(const RatMatrix& m, const IndexSet& s);

template <class T>
double max_abs_entry(const SymMatrixT<T>& m) {
  double v = 0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      double e;
      if constexpr (std::is_same_v<T, double>)
        e = std::abs(m(i, j));
      else
        e = std::abs(static_cast<double>(m(i, j)));
      v = std::max(v, e);
    }
  return v;
}

inline double frobenius_norm(const SymMatrix& m) {
  double s = 0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) s += m(i, j) * m(i, j);
  return std::sqrt(s);
}

inline SymMatrix to_float(const RatMatrix& m) {
  SymMatrix r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j) r.set(i, j, static_cast<double>(m(i, j)));
  return r;
}

// Smallest eigenvalue test. Returns {verdict, smallest eigenvalue}.
std::pair<bool, double> is_psd(const SymMatrix& m, double tol);

}  // namespace lpsd

#endif
