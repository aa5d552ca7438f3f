#include "lpsd/realize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lpsd/cones.hpp"
#include "lpsd/spectra.hpp"

namespace lpsd {

std::string to_string(RealizeRoute r) {
  switch (r) {
    case RealizeRoute::Diag: return "diag";
    case RealizeRoute::SchurHornInverse: return "schur_horn_inverse";
    case RealizeRoute::ZeroDiagShift: return "zero_diag_shift";
  }
  return "?";
}

RealizationResult realize_k1(std::span<const double> x, double tol) {
  int n = static_cast<int>(x.size());
  if (n < 1) throw DomainError("empty vector");
  double scale = 1.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (sum < -tol * scale * n) throw DomainError("vector is outside H(e_1^n): negative sum");
  double mean = sum / n;
  std::vector<double> centered(x.begin(), x.end());
  for (double& v : centered) v -= mean;
  // Fix up roundoff so the centered vector sums to exactly ~0.
  double resid = std::accumulate(centered.begin(), centered.end(), 0.0) / n;
  for (double& v : centered) v -= resid;
  std::vector<double> zeros(n, 0.0);
  SymMatrix m0 = schur_horn_realize(zeros, centered);
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, m0(i, j) + (i == j ? mean : 0.0));
  return {std::move(m), mean, RealizeRoute::ZeroDiagShift};
}

RealizationResult realize_boundary_nminus1(std::span<const double> x, double tol) {
  int n = static_cast<int>(x.size());
  if (n < 2) throw DomainError("need n >= 2");
  double scale = 1.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  MembershipReport rep = in_h_e(x, n - 1, tol);
  if (rep.verdict == Verdict::Outside)
    throw DomainError("vector is outside H(e_{n-1}^n)");
  if (rep.verdict == Verdict::Inside)
    throw DomainError("vector is not on the boundary of H(e_{n-1}^n)");

  bool has_negative = std::any_of(x.begin(), x.end(), [&](double v) { return v < -tol * scale; });
  if (!has_negative) {
    SymMatrix m(n);
    for (int i = 0; i < n; ++i) m.set(i, i, x[i]);
    return {std::move(m), 0.0, RealizeRoute::Diag};
  }

  for (double v : x)
    if (std::abs(v) <= tol * scale)
      throw DomainError("boundary vector mixes zero and negative entries");

  std::vector<double> recip(n);
  for (int i = 0; i < n; ++i) recip[i] = 1.0 / x[i];
  double rsum = std::accumulate(recip.begin(), recip.end(), 0.0);
  double rscale = 0;
  for (double v : recip) rscale = std::max(rscale, std::abs(v));
  if (std::abs(rsum) > 1e-6 * rscale * n)
    throw DomainError("inconsistent boundary vector: reciprocal sum does not vanish");
  // Recenter so the Schur-Horn majorization of the zero diagonal holds exactly.
  for (double& v : recip) v -= rsum / n;

  std::vector<double> zeros(n, 0.0);
  SymMatrix l = schur_horn_realize(zeros, recip);
  Spectrum sp = eigenvalues_sym(l, true);
  for (double lam : sp.values)
    if (std::abs(lam) < 1e-12 * rscale) throw NumericError("singular intermediate matrix");
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double acc = 0;
      for (int t = 0; t < n; ++t) acc += sp.vec(i, t) * sp.vec(j, t) / sp.values[t];
      m.set(i, j, acc);
    }
  return {std::move(m), 0.0, RealizeRoute::SchurHornInverse};
}

RealizationResult realize_h_nminus1(std::span<const double> x, double tol) {
  int n = static_cast<int>(x.size());
  if (n < 2) throw DomainError("need n >= 2");
  MembershipReport rep = in_h_e(x, n - 1, tol);
  if (rep.verdict == Verdict::Outside) throw DomainError("vector is outside H(e_{n-1}^n)");

  double t = 0;
  if (rep.verdict != Verdict::Boundary) {
    auto member = [&](double s) {
      std::vector<double> y(x.begin(), x.end());
      for (double& v : y) v -= s;
      return in_h_e(y, n - 1, tol).verdict != Verdict::Outside;
    };
    double lo = 0, hi = *std::max_element(x.begin(), x.end()) + 1.0;
    while (hi - lo > 1e-9) {
      double mid = 0.5 * (lo + hi);
      (member(mid) ? lo : hi) = mid;
    }
    t = lo;
    // Newton polish on s -> e_{n-1}(x - s1), whose zero is the boundary
    // crossing; d/ds e_{n-1}(x - s1) = -2 e_{n-2}(x - s1). The bisection
    // start is close enough that this converges to machine precision, which
    // the downstream boundary realization (reciprocal sums) relies on.
    for (int it = 0; it < 50; ++it) {
      std::vector<double> y(x.begin(), x.end());
      for (double& v : y) v -= t;
      double f = elementary_symmetric(y, n - 1);
      double fp = -2.0 * elementary_symmetric(y, n - 2);
      if (fp == 0) break;
      double step = f / fp;
      t -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(t))) break;
    }
    t = std::max(t, 0.0);
  }
  std::vector<double> y(x.begin(), x.end());
  for (double& v : y) v -= t;
  RealizationResult base = realize_boundary_nminus1(y);
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, base.matrix(i, j) + (i == j ? t : 0.0));
  return {std::move(m), t, base.route};
}

namespace {

SymMatrix random_psd(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> b(n, std::vector<double>(n));
  for (auto& row : b)
    for (double& v : row) v = gauss(rng);
  SymMatrix p(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double acc = 0;
      for (int t = 0; t < n; ++t) acc += b[i][t] * b[j][t];
      p.set(i, j, acc / n);
    }
  return p;
}

SymMatrix draw(int n, int k, std::mt19937_64& rng, SampleStrategy strategy) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  switch (strategy) {
    case SampleStrategy::Rejection: {
      SymMatrix a(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a.set(i, j, gauss(rng));
      double worst = 0;
      IndexSet s = first_subset(k);
      do {
        worst = std::min(worst, eigenvalues_sym(principal_submatrix(a, s)).values.front());
      } while (next_subset(s, n));
      for (int i = 0; i < n; ++i) a.set(i, i, a(i, i) - worst);
      return a;
    }
    case SampleStrategy::Congruence: {
      std::vector<double> d(n);
      for (double& v : d) v = (unif(rng) < 0.5 ? -1.0 : 1.0) * std::exp(0.5 * gauss(rng));
      SymMatrix m = dgd_family(n, k, d);
      SymMatrix p = random_psd(n, rng);
      double w = unif(rng);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, m(i, j) + w * p(i, j));
      return m;
    }
    case SampleStrategy::PsdMix: {
      SymMatrix g = gram_g<double>(n, k);
      SymMatrix p = random_psd(n, rng);
      double theta = unif(rng);
      SymMatrix m(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, theta * p(i, j) + (1 - theta) * g(i, j));
      return m;
    }
  }
  throw DomainError("unknown sampling strategy");
}

}  // namespace

SymMatrix sample_s_nk(int n, int k, std::mt19937_64& rng, SampleStrategy strategy) {
  if (k < 1 || k > n) throw DomainError("sample_s_nk requires 1 <= k <= n");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SymMatrix m = draw(n, k, rng, strategy);
    if (in_s_nk(m, k, 1e-8).verdict != Verdict::Outside) return m;
  }
  throw NumericError("sampler failed to produce a member after retry cap");
}

}  // namespace lpsd
