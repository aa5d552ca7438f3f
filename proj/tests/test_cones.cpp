#include <doctest.h>

#include <cmath>
#include <random>

#include "lpsd/cones.hpp"
#include "lpsd/realize.hpp"
#include "lpsd/spectra.hpp"

using namespace lpsd;

TEST_CASE("local PSD membership on the gram matrix") {
  SymMatrix g = gram_g<double>(4, 2);
  MembershipReport rep = in_s_nk(g, 2);
  // Every 2x2 block has smallest eigenvalue exactly 0.
  CHECK(rep.verdict == Verdict::Boundary);
  CHECK(rep.margin == doctest::Approx(0.0).scale(1.0));

  // For k = 3 the 3x3 blocks have a negative eigenvalue.
  MembershipReport rep3 = in_s_nk(g, 3);
  CHECK(rep3.verdict == Verdict::Outside);
  REQUIRE(rep3.violating_set.has_value());
  CHECK(eigenvalues_sym(principal_submatrix(g, *rep3.violating_set)).values.front() < 0);

  CHECK(in_s_nk(SymMatrix::identity(4), 2).verdict == Verdict::Inside);
  CHECK_THROWS_AS(in_s_nk(g, 5), DomainError);
}

TEST_CASE("full certificate listing") {
  SymMatrix g = gram_g<double>(4, 2);
  MembershipReport rep = in_s_nk(g, 3, 1e-9, /*full_certificates=*/true);
  CHECK(rep.verdict == Verdict::Outside);
  CHECK(rep.all_violations.size() == 4);  // every 3x3 block dips negative
}

TEST_CASE("hyperbolicity cone membership from coordinates") {
  std::vector<double> boundary = {1, 1, 1, -1};
  MembershipReport rep = in_h_e(boundary, 2);
  CHECK(rep.verdict == Verdict::Boundary);

  std::vector<double> g_spec = {2, 2, 2, -2};
  CHECK(in_h_e(g_spec, 2).verdict == Verdict::Boundary);

  std::vector<double> inside = {3, 2, 1};
  CHECK(in_h_e(inside, 2).verdict == Verdict::Inside);

  std::vector<double> outside = {1, 1, -2};
  MembershipReport out = in_h_e(outside, 2);
  CHECK(out.verdict == Verdict::Outside);
  CHECK(out.violating_poly == 2);

  CHECK_THROWS_AS(in_h_e(inside, 4), DomainError);
}

TEST_CASE("derivative-cone membership via characteristic coefficients") {
  SymMatrix g = gram_g<double>(4, 2);
  CHECK(in_h_c(g, 2).verdict == Verdict::Boundary);
  CHECK(in_h_c(g, 3).verdict == Verdict::Outside);  // e_3 of the spectrum is -16
  CHECK(in_h_c(SymMatrix::identity(5), 3).verdict == Verdict::Inside);
}

TEST_CASE("local PSD cone sits inside the derivative cone") {
  std::mt19937_64 rng(31);
  for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 3}}) {
    for (int trial = 0; trial < 100; ++trial) {
      SymMatrix m = sample_s_nk(n, k, rng);
      CHECK(in_h_c(m, k, 1e-7).verdict != Verdict::Outside);
    }
  }
}

TEST_CASE("PSD reformulation of the degree n-1 cone") {
  std::vector<double> x = {2, 2, -1};
  CHECK(in_h_e_nminus1_psd_test(x));
  CHECK(h_e_nminus1_psd_margin(x) == doctest::Approx(0.0).scale(1.0));

  std::mt19937_64 rng(32);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<double> v(n);
      for (double& e : v) e = gauss(rng);
      double psd_margin = h_e_nminus1_psd_margin(v);
      Verdict verdict = in_h_e(v, n - 1, 1e-8).verdict;
      if (std::abs(psd_margin) <= 1e-8) continue;  // boundary band
      if (psd_margin > 0) CHECK(verdict != Verdict::Outside);
      if (psd_margin < 0) CHECK(verdict == Verdict::Outside);
    }
  }
}

TEST_CASE("closed-form eigenvalue bounds") {
  CHECK(min_eig_bound({NormKind::Trace, 2, 4, 2}) == -0.5);  // exact binary value
  CHECK(min_eig_bound({NormKind::Frobenius, 2, 4, 2}) == doctest::Approx(-0.5).epsilon(1e-14));
  for (int n = 2; n <= 12; ++n) {
    CHECK(min_eig_bound({NormKind::Trace, 2, n, n}) == 0.0);
    for (int k = 2; k < n; ++k) {
      CHECK(min_eig_bound({NormKind::Trace, 2, n, k}) ==
            doctest::Approx(static_cast<double>(k - n) / (n * (k - 1))).epsilon(1e-15));
      // Schatten-2 must coincide with the Frobenius form.
      CHECK(min_eig_bound({NormKind::Schatten, 2, n, k}) ==
            doctest::Approx(min_eig_bound({NormKind::Frobenius, 2, n, k})).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(min_eig_bound({NormKind::Trace, 2, 4, 1}), DomainError);
  CHECK_THROWS_AS(min_eig_bound({NormKind::Schatten, 0.5, 4, 2}), DomainError);
}

TEST_CASE("both closed forms of the bound agree") {
  for (int n = 3; n <= 12; ++n)
    for (int k = 2; k < n; ++k)
      for (NormKind norm : {NormKind::Trace, NormKind::Frobenius, NormKind::Schatten})
        for (double p : {1.0, 2.0, 3.0, 4.5}) {
          BoundSpec spec{norm, p, n, k};
          CHECK(min_eig_bound(spec) == doctest::Approx(min_eig_bound_alt(spec)).epsilon(1e-12));
        }
}

TEST_CASE("the gram matrix attains the bound") {
  for (int n = 3; n <= 10; ++n)
    for (int k = 2; k < n; ++k) {
      SymMatrix g = gram_g<double>(n, k);
      Spectrum sp = eigenvalues_sym(g);
      double tr = 0;
      for (double v : sp.values) tr += v;
      CHECK(sp.values.front() / tr ==
            doctest::Approx(min_eig_bound({NormKind::Trace, 2, n, k})).epsilon(1e-12));
      CHECK(sp.values.front() / frobenius_norm(g) ==
            doctest::Approx(min_eig_bound({NormKind::Frobenius, 2, n, k})).epsilon(1e-12));
    }
}

TEST_CASE("distance to the PSD cone") {
  SymMatrix m(2);
  m.set(0, 0, -3);
  m.set(1, 1, 4);
  CHECK(frobenius_dist_to_psd(m) == doctest::Approx(3.0));
  CHECK(frobenius_dist_to_psd(SymMatrix::identity(3)) == 0.0);

  CHECK(frobenius_dist_bound(4, 2) == doctest::Approx(std::sqrt(8.0) / 4.0).epsilon(1e-14));
  CHECK(frobenius_dist_bound(4, 4) == 0.0);
  CHECK_THROWS_AS(frobenius_dist_bound(4, 1), DomainError);

  // Normalized samples never beat the bound.
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    SymMatrix s = sample_s_nk(4, 2, rng);
    double fro = frobenius_norm(s);
    if (fro < 1e-12) continue;
    CHECK(frobenius_dist_to_psd(s) / fro <= frobenius_dist_bound(4, 2) + 1e-9);
  }
}
