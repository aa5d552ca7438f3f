#include "lpsd/nls.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "lpsd/cones.hpp"
#include "lpsd/realize.hpp"
#include "lpsd/spectra.hpp"

namespace lpsd {

bool is_locally_singular(const SymMatrix& m, int k, double tol) {
  int n = m.dim();
  if (k < 1 || k > n) throw DomainError("is_locally_singular requires 1 <= k <= n");
  if (in_s_nk(m, k, tol).verdict == Verdict::Outside) return false;
  double scale = std::max(1.0, max_abs_entry(m));
  double bound = tol * std::pow(scale, k);
  IndexSet s = first_subset(k);
  do {
    if (std::abs(principal_minor(m, s)) > bound) return false;
  } while (next_subset(s, n));
  return true;
}

bool is_locally_singular(const RatMatrix& m, int k, double psd_tol) {
  int n = m.dim();
  if (k < 1 || k > n) throw DomainError("is_locally_singular requires 1 <= k <= n");
  if (in_s_nk(to_float(m), k, psd_tol).verdict == Verdict::Outside) return false;
  IndexSet s = first_subset(k);
  do {
    if (principal_minor(m, s) != 0) return false;
  } while (next_subset(s, n));
  return true;
}

bool is_nls(const SymMatrix& m, int k, double tol) {
  if (!is_locally_singular(m, k, tol)) return false;
  double scale = std::max(1.0, max_abs_entry(m));
  return std::abs(determinant(m)) > tol * std::pow(scale, m.dim());
}

bool is_nls(const RatMatrix& m, int k, double psd_tol) {
  return is_locally_singular(m, k, psd_tol) && determinant(m) != 0;
}

std::vector<SignCase> enumerate_sign_cases_42() {
  std::vector<SignCase> cases;
  cases.reserve(64);
  for (int id = 0; id < 64; ++id) {
    SignCase sc;
    sc.id = id;
    RatMatrix m(4);
    for (int i = 0; i < 4; ++i) m.set(i, i, 1);
    int bit = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        int s = (id >> bit) & 1 ? 1 : -1;
        sc.signs[bit] = s;
        m.set(i, j, s);
        ++bit;
      }
    if (determinant(m) == 0) {
      sc.label = SignCase::Label::Singular;
    } else {
      // Congruent to G(4,2) iff m_ij = -sigma_i sigma_j for some sigma.
      bool congruent = false;
      for (int mask = 0; mask < 8 && !congruent; ++mask) {
        int sigma[4] = {1, (mask & 1) ? -1 : 1, (mask & 2) ? -1 : 1, (mask & 4) ? -1 : 1};
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i)
          for (int j = i + 1; j < 4 && ok; ++j)
            if (m(i, j) != Rational(-sigma[i] * sigma[j])) ok = false;
        congruent = ok;
      }
      if (!congruent)
        throw FalsificationError("sign case " + std::to_string(id) +
                                 " is neither singular nor congruent to G(4,2)");
      sc.label = SignCase::Label::CongruentToG;
    }
    cases.push_back(sc);
  }
  return cases;
}

CongruenceWitness diag_congruent_to_g(const SymMatrix& m, int k, double tol) {
  int n = m.dim();
  if (k < 2 || k > n) throw DomainError("diag_congruent_to_g requires 2 <= k <= n");
  CongruenceWitness w;
  double scale = std::max(1.0, max_abs_entry(m));
  if (std::abs(determinant(m)) <= tol * std::pow(scale, n)) {
    w.reason = "singular";
    return w;
  }
  for (int i = 0; i < n; ++i)
    if (m(i, i) <= tol * scale) {
      w.reason = "wrong diagonal signs";
      return w;
    }
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = std::sqrt(m(i, i));

  const double off = 1.0 / (k - 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double nij = m(i, j) / (d[i] * d[j]);
      if (std::abs(std::abs(nij) - off) > tol * scale) {
        w.reason = "off-diagonal mismatch";
        return w;
      }
    }

  // Sign pattern must factor as s_ij = -sigma_i sigma_j; propagate
  // sigma along a spanning structure, then verify all pairs.
  std::vector<int> sigma(n, 0);
  sigma[0] = 1;
  for (int j = 1; j < n; ++j) sigma[j] = (m(0, j) < 0) ? sigma[0] : -sigma[0];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int expected = (m(i, j) < 0) ? 1 : -1;  // sigma_i*sigma_j
      if (sigma[i] * sigma[j] != expected) {
        w.reason = "sign pattern not rank-one";
        return w;
      }
    }

  for (int i = 0; i < n; ++i) d[i] *= sigma[i];
  SymMatrix rebuilt = dgd_family(n, k, d);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (std::abs(rebuilt(i, j) - m(i, j)) > 1e-9 * scale) {
        w.reason = "off-diagonal mismatch";
        return w;
      }
  w.found = true;
  w.d = std::move(d);
  return w;
}

StructureReport verify_structure_theorem(int n, int k, int samples, std::uint64_t seed) {
  if (!((n - 1 > k && k > 2) || (n == 4 && k == 2)))
    throw DomainError("structure theorem requires n-1 > k > 2 or (n,k) = (4,2)");
  StructureReport report;
  report.n = n;
  report.k = k;
  report.samples = samples;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.4, 2.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  for (int idx = 0; idx < samples; ++idx) {
    StructureSampleResult r;
    r.index = idx;
    std::vector<double> d(n);
    for (double& v : d) v = (unif(rng) < 0.5 ? -1.0 : 1.0) * mag(rng);
    r.d = d;
    SymMatrix m = dgd_family(n, k, d);
    double scale = std::max(1.0, max_abs_entry(m));

    CongruenceWitness w = diag_congruent_to_g(m, k);
    if (!w.found) {
      r.reason = "congruence recovery failed: " + w.reason;
    } else {
      SymMatrix rebuilt = dgd_family(n, k, w.d);
      double err = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) err = std::max(err, std::abs(rebuilt(i, j) - m(i, j)));
      if (err > 1e-9 * scale) {
        r.reason = "round-trip error too large";
      } else if (k == n - 2) {
        // Sign pattern of an NLS matrix in S^{n,n-2}.
        bool ok = determinant(m) < 0;
        IndexSet s = first_subset(n - 1);
        do {
          ok = ok && principal_minor(m, s) < 0;
        } while (ok && next_subset(s, n));
        if (ok && n - 3 >= 1) {
          s = first_subset(n - 3);
          do {
            ok = ok && principal_minor(m, s) > 0;
          } while (ok && next_subset(s, n));
        }
        if (!ok)
          r.reason = "minor sign pattern violated";
        else
          r.passed = true;
      } else {
        r.passed = true;
      }
    }
    if (r.passed)
      ++report.passed;
    else
      report.falsified = true;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace lpsd
