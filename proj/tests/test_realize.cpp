#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lpsd/cones.hpp"
#include "lpsd/realize.hpp"
#include "lpsd/spectra.hpp"

using namespace lpsd;

namespace {

void check_spectrum(const SymMatrix& m, std::vector<double> want, double tol = 1e-8) {
  std::sort(want.begin(), want.end());
  std::vector<double> got = eigenvalues_sym(m).values;
  REQUIRE(got.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i)
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(tol).scale(1.0));
}

std::vector<double> random_member_nminus1(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    std::vector<double> x(n);
    for (double& v : x) v = gauss(rng) + 0.7;
    if (in_h_e(x, n - 1).verdict != Verdict::Outside) return x;
  }
}

}  // namespace

TEST_CASE("k=1 realization: zero-diagonal route") {
  std::vector<double> x = {-1, 0, 1};
  RealizationResult r = realize_k1(x);
  CHECK(r.route == RealizeRoute::ZeroDiagShift);
  CHECK(r.shift == doctest::Approx(0.0).scale(1.0));
  for (int i = 0; i < 3; ++i) CHECK(r.matrix(i, i) == doctest::Approx(0.0).scale(1.0));
  check_spectrum(r.matrix, x);
  // Every diagonal entry is the mean, so every 1x1 block is nonnegative
  // whenever the sum is.
  CHECK(in_s_nk(r.matrix, 1, 1e-8).verdict != Verdict::Outside);
}

TEST_CASE("k=1 realization rejects negative-sum vectors") {
  CHECK_THROWS_AS(realize_k1(std::vector<double>{-2, 0.5, 0.5}), DomainError);
}

TEST_CASE("boundary realization with one negative entry") {
  std::vector<double> x = {2, 2, -1};  // reciprocal sum 1/2 + 1/2 - 1 = 0
  RealizationResult r = realize_boundary_nminus1(x);
  CHECK(r.route == RealizeRoute::SchurHornInverse);
  check_spectrum(r.matrix, x);
  double scale = std::max(1.0, max_abs_entry(r.matrix));
  IndexSet s = first_subset(2);
  do {
    CHECK(std::abs(principal_minor(r.matrix, s)) <= 1e-8 * scale * scale);
  } while (next_subset(s, 3));
  CHECK(in_s_nk(r.matrix, 2, 1e-7).verdict != Verdict::Outside);

  std::vector<double> y = {3, 3, 3, -1};  // 1/3 * 3 - 1 = 0
  RealizationResult ry = realize_boundary_nminus1(y);
  check_spectrum(ry.matrix, y);
  CHECK(in_s_nk(ry.matrix, 3, 1e-7).verdict != Verdict::Outside);
}

TEST_CASE("boundary realization of a nonnegative vector is diagonal") {
  std::vector<double> x = {1, 0, 0};  // e_2 = 0 on the nose
  RealizationResult r = realize_boundary_nminus1(x);
  CHECK(r.route == RealizeRoute::Diag);
  CHECK(r.matrix(0, 0) == doctest::Approx(1.0));
  CHECK(r.matrix(0, 1) == 0.0);
}

TEST_CASE("boundary realization rejects interior and outside points") {
  // Interior: all slacks strictly positive.
  CHECK_THROWS_AS(realize_boundary_nminus1(std::vector<double>{1, 2, 3, 0}), DomainError);
  // Outside the cone.
  CHECK_THROWS_AS(realize_boundary_nminus1(std::vector<double>{1, 1, -2}), DomainError);
  // Negative entry but nonvanishing reciprocal sum: not a boundary point of
  // this form (zero entries mixed with a negative entry are also rejected).
  CHECK_THROWS_AS(realize_boundary_nminus1(std::vector<double>{1, 0, -1}), DomainError);
}

TEST_CASE("interior realization shifts to the boundary and back") {
  std::vector<double> x = {5, 2, -1};  // e_1 = 6, e_2 = 3: interior
  RealizationResult r = realize_h_nminus1(x);
  CHECK(r.shift > 0);
  check_spectrum(r.matrix, x);
  CHECK(in_s_nk(r.matrix, 2, 1e-7).verdict != Verdict::Outside);

  // Already on the boundary: no shift.
  RealizationResult rb = realize_h_nminus1(std::vector<double>{2, 2, -1});
  CHECK(rb.shift == doctest::Approx(0.0).scale(1.0));

  CHECK_THROWS_AS(realize_h_nminus1(std::vector<double>{1, 1, -2}), DomainError);
}

TEST_CASE("realized eigenvalue sets are closed under midpoints") {
  std::mt19937_64 rng(41);
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> x = random_member_nminus1(n, rng);
      std::vector<double> y = random_member_nminus1(n, rng);
      std::vector<double> mid(n);
      for (int i = 0; i < n; ++i) mid[i] = 0.5 * (x[i] + y[i]);
      RealizationResult r = realize_h_nminus1(mid);
      check_spectrum(r.matrix, mid);
    }
  }
}

TEST_CASE("the congruence family reproduces the gram matrix at unit weights") {
  std::vector<double> ones(5, 1.0);
  SymMatrix m = dgd_family(5, 3, ones);
  SymMatrix g = gram_g<double>(5, 3);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(m(i, j) == g(i, j));
  CHECK(in_s_nk(m, 3, 1e-9).verdict == Verdict::Boundary);
  CHECK_THROWS_AS(dgd_family(5, 3, std::vector<double>{1, 0, 1, 1, 1}), DomainError);
}

TEST_CASE("samplers stay in the cone and are deterministic per seed") {
  for (SampleStrategy st :
       {SampleStrategy::Rejection, SampleStrategy::Congruence, SampleStrategy::PsdMix}) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
      SymMatrix m = sample_s_nk(5, 3, rng, st);
      CHECK(in_s_nk(m, 3, 1e-8).verdict != Verdict::Outside);
    }
    std::mt19937_64 a(7), b(7);
    SymMatrix ma = sample_s_nk(4, 2, a, st);
    SymMatrix mb = sample_s_nk(4, 2, b, st);
    CHECK(ma == mb);
  }
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(sample_s_nk(3, 4, rng), DomainError);
}
