#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lpsd/cones.hpp"
#include "lpsd/quartic.hpp"
#include "lpsd/realize.hpp"
#include "lpsd/spectra.hpp"

using namespace lpsd;

namespace {

// Characteristic polynomial of a 4x4 symmetric matrix as a monic quartic
// in the coefficient convention a0 + a1 x + a2 x^2 + a3 x^3 + x^4.
QuarticPoly char_poly(const SymMatrix& m) {
  std::vector<double> c = char_poly_coeffs(m);
  return {c[4], -c[3], c[2], -c[1]};
}

void check_roots(const QuarticPoly& p, std::array<double, 4> want, double tol = 1e-7) {
  auto got = real_roots(p);
  REQUIRE(got.has_value());
  std::sort(want.begin(), want.end());
  for (int i = 0; i < 4; ++i)
    CHECK((*got)[i] == doctest::Approx(want[i]).epsilon(tol).scale(1.0));
}

}  // namespace

TEST_CASE("root finding on simple, double, triple, and quadruple roots") {
  check_roots(quartic_from_roots({-2, 1, 3, 5}), {-2, 1, 3, 5});
  check_roots(quartic_from_roots({1, 1, 2, 2}), {1, 1, 2, 2});
  check_roots(quartic_from_roots({-1, 2, 2, 2}), {-1, 2, 2, 2});
  check_roots(quartic_from_roots({1, 1, 1, 1}), {1, 1, 1, 1});
  check_roots(quartic_from_roots({0.25, 0.25, 0.25, 0.25}), {0.25, 0.25, 0.25, 0.25});

  // Complex roots are reported as such.
  CHECK_FALSE(real_roots({1, 0, 0, 0}).has_value());       // x^4 + 1
  CHECK_FALSE(real_roots({1, 0, 2, 0}).has_value());       // (x^2 + 1)^2
  CHECK_FALSE(real_roots({-2, 2, -2, 1}).has_value());     // two real roots, one complex pair
}

TEST_CASE("random round trips through the root oracle") {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<double, 4> r = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    check_roots(quartic_from_roots(r), r, 1e-6);
  }
}

TEST_CASE("good roots: gram characteristic polynomial and near misses") {
  QuarticPoly p = char_poly(gram_g<double>(4, 2));
  CHECK(p.a0 == doctest::Approx(-16.0));
  CHECK(p.a1 == doctest::Approx(16.0));
  CHECK(p.a2 == doctest::Approx(0.0).scale(1.0));
  CHECK(p.a3 == doctest::Approx(-4.0));
  CHECK(has_good_roots(p));
  CHECK(good_roots_coefficient_route(p));

  CHECK_FALSE(has_good_roots(quartic_from_roots({-3, 1, 1, 1})));   // pair sums go negative
  CHECK_FALSE(has_good_roots(quartic_from_roots({-1, -1, 3, 3})));  // two negative roots
  CHECK_FALSE(has_good_roots(quartic_from_roots({0, 1, 2, 3})));    // zero root
  CHECK_FALSE(has_good_roots({1, 0, 0, 0}));                        // complex roots
  CHECK_FALSE(has_good_roots(quartic_from_roots({1, 2, 3, 4})));    // no negative root
}

TEST_CASE("both good-root routes agree on random boundary spectra") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> unif(0.3, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    // Three positive values, negative one chosen to zero the pair sums.
    double a = unif(rng), b = unif(rng), c = unif(rng);
    double neg = -(a * b + a * c + b * c) / (a + b + c);
    QuarticPoly p = quartic_from_roots({a, b, c, neg});
    CHECK(has_good_roots(p));
    CHECK(good_roots_coefficient_route(p));
  }
  // Perturbing the second coefficient away from zero breaks goodness.
  QuarticPoly p = char_poly(gram_g<double>(4, 2));
  p.a2 = 0.3;
  CHECK_FALSE(has_good_roots(p));
}

TEST_CASE("general discriminant vanishes exactly on multiple roots") {
  CHECK(discriminant_check(quartic_from_roots({1, 1, 2, 3})).general ==
        doctest::Approx(0.0).scale(1.0));
  std::mt19937_64 rng(63);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<double, 4> r = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    QuarticPoly p = quartic_from_roots(r);
    double prod = 1;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) prod *= (r[i] - r[j]) * (r[i] - r[j]);
    CHECK(discriminant_check(p).general == doctest::Approx(prod).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("normalized-form discriminant expression differs from the general one") {
  // The special normalized-form expression is kept as a diagnostic only.
  // It disagrees with the general discriminant by the
  // sign of the 4*a1^3 and 192*a1*a0^2 terms, so the two are reported side
  // by side instead of silently merged.
  std::mt19937_64 rng(64);
  std::normal_distribution<double> gauss(0.0, 0.7);
  int disagreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    QuarticPoly p{gauss(rng), gauss(rng), 0.0, -1.0};
    DiscriminantPair d = discriminant_check(p);
    REQUIRE(d.special.has_value());
    double corrected = *d.special + 8 * p.a1 * p.a1 * p.a1 + 384 * p.a1 * p.a0 * p.a0;
    CHECK(corrected == doctest::Approx(d.general).epsilon(1e-9).scale(1.0 + std::abs(d.general)));
    if (std::abs(*d.special - d.general) > 1e-9 * (1.0 + std::abs(d.general))) ++disagreements;
  }
  CHECK(disagreements > 0);
  // No special value away from the normal form.
  CHECK_FALSE(discriminant_check({1, 1, 1, 1}).special.has_value());
}

TEST_CASE("normalization to the a3 = -1 form") {
  QuarticPoly p = char_poly(gram_g<double>(4, 2));
  QuarticPoly q = normalize_a3_minus1(p);
  CHECK(q.a3 == doctest::Approx(-1.0));
  CHECK(q.a2 == doctest::Approx(0.0).scale(1.0));
  CHECK(q.a1 == doctest::Approx(0.25));    // 16 / 4^3
  CHECK(q.a0 == doctest::Approx(-0.0625)); // -16 / 4^4
  // Roots scale by 1/|a3|.
  check_roots(q, {-0.5, 0.5, 0.5, 0.5});
  CHECK_THROWS_AS(normalize_a3_minus1({-1, 0, 0, 1}), DomainError);
}

TEST_CASE("power-sum matrices match direct root sums and detect realness") {
  QuarticPoly p = char_poly(gram_g<double>(4, 2));
  SymMatrix h = hermite_matrix(p);
  SymMatrix hk = hankel_matrix(p);
  std::array<double, 4> roots = {-2, 2, 2, 2};
  auto msum = [&](int k) {
    if (k == 0) return 4.0;
    double s = 0;
    for (double r : roots) s += std::pow(r, k);
    return s;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(h(i, j) == doctest::Approx(msum(i + j + 2)).epsilon(1e-12));
      CHECK(hk(i, j) == doctest::Approx(msum(i + j)).epsilon(1e-12));
    }

  std::mt19937_64 rng(65);
  std::normal_distribution<double> gauss(0.0, 1.0);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    QuarticPoly q{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    SymMatrix m = hermite_matrix(q);
    double lam = eigenvalues_sym(m).values.front();
    double band = 1e-8 * std::max(1.0, frobenius_norm(m));
    if (std::abs(lam) <= band) continue;  // boundary band excluded
    ++checked;
    CHECK((lam > 0) == real_roots(q).has_value());
  }
  CHECK(checked > 1500);
}

TEST_CASE("certificate search on the gram spectrum") {
  QuarticPoly p = char_poly(gram_g<double>(4, 2));
  auto cert = find_almost_nonneg_k(p);
  REQUIRE(cert.has_value());
  // The associated polynomial collapses to (x - 1)^4.
  CHECK(cert->k == doctest::Approx(6.0).epsilon(1e-4));
  for (int i = 0; i < 4; ++i) {
    CHECK(cert->roots_q[i] == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(cert->d[i] == doctest::Approx(1.0).epsilon(1e-3));
  }
  CHECK(cert->residual <= 1e-6);
}

TEST_CASE("certificate search on the quarter-scaled gram spectrum") {
  QuarticPoly p{-1.0 / 16, 1.0 / 4, 0.0, -1.0};
  auto cert = find_almost_nonneg_k(p);
  REQUIRE(cert.has_value());
  // Here the associated polynomial is (x - 1/4)^4.
  CHECK(cert->k == doctest::Approx(0.375).epsilon(1e-4));
  for (int i = 0; i < 4; ++i) CHECK(cert->d[i] == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("no false certificates for bad polynomials") {
  CHECK_FALSE(find_almost_nonneg_k(quartic_from_roots({-3, 1, 1, 1})).has_value());
  CHECK_FALSE(find_almost_nonneg_k(quartic_from_roots({1, 2, 3, 4})).has_value());
  CHECK_FALSE(find_almost_nonneg_k({1, 0, 0, 0}).has_value());
  CHECK_THROWS_AS(realize_quartic_as_dgd(quartic_from_roots({1, 2, 3, 4})), DomainError);
}

TEST_CASE("quartic realization round trip through the congruence family") {
  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> mag(0.4, 1.6);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> d = {mag(rng), mag(rng), mag(rng), mag(rng)};
    SymMatrix m = dgd_family(4, 2, d);
    QuarticPoly p = char_poly(m);
    SymMatrix rec = realize_quartic_as_dgd(p);
    // The characteristic polynomial does not pin the scaling weights down
    // uniquely (the certificate parameter can move along a feasible
    // interval), so the round trip is checked through the polynomial and
    // cone membership, not entrywise.
    CHECK(in_s_nk(rec, 2, 1e-7).verdict != Verdict::Outside);
    QuarticPoly pr = char_poly(rec);
    double scale = std::max({1.0, std::abs(p.a0), std::abs(p.a1), std::abs(p.a3)});
    CHECK(std::abs(pr.a0 - p.a0) <= 1e-6 * scale);
    CHECK(std::abs(pr.a1 - p.a1) <= 1e-6 * scale);
    CHECK(std::abs(pr.a2 - p.a2) <= 1e-6 * scale);
    CHECK(std::abs(pr.a3 - p.a3) <= 1e-6 * scale);
  }
}

TEST_CASE("diagnostic polynomials evaluate finitely and take both signs") {
  // The four inequality evaluators are diagnostics only; over
  // valid certificate instances their signs are not constant, which is why
  // nothing downstream branches on them.
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  bool p1_pos = false, p1_neg = false;
  for (int trial = 0; trial < 2000; ++trial) {
    std::array<double, 4> y = {unif(rng), unif(rng), unif(rng), unif(rng)};
    double s = y[0] + y[1] + y[2] + y[3];
    for (double& v : y) v /= s;  // nonnegative roots with unit sum
    std::vector<double> yv(y.begin(), y.end());
    double k = elementary_symmetric(yv, 2);
    double a1 = 4 * elementary_symmetric(yv, 3);
    double a0 = -16 * elementary_symmetric(yv, 4);
    auto diag = certificate_region_diagnostics(a0, a1, k);
    for (double v : diag) CHECK(std::isfinite(v));
    (diag[0] >= 0 ? p1_pos : p1_neg) = true;
    CHECK(a1 >= 0);  // the sign convention the data supports
  }
  CHECK(p1_pos);
  CHECK(p1_neg);
}
