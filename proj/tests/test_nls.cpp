#include <doctest.h>

#include <cmath>
#include <random>

#include "lpsd/nls.hpp"
#include "lpsd/realize.hpp"
#include "lpsd/spectra.hpp"

using namespace lpsd;

TEST_CASE("the gram matrix is nonsingular yet locally singular") {
  RatMatrix g = gram_g<Rational>(4, 2);
  CHECK(is_locally_singular(g, 2));
  CHECK(is_nls(g, 2));
  CHECK(is_locally_singular(to_float(g), 2));
  CHECK(is_nls(to_float(g), 2));

  for (int n = 4; n <= 7; ++n)
    for (int k = 2; k < n; ++k) CHECK(is_nls(gram_g<Rational>(n, k), k));
}

TEST_CASE("identity and all-ones matrices are not NLS") {
  RatMatrix id = RatMatrix::identity(4);
  CHECK_FALSE(is_locally_singular(id, 2));  // 2x2 minors equal 1
  CHECK_FALSE(is_nls(id, 2));

  RatMatrix j(4);  // all-ones: locally singular but itself singular
  for (int i = 0; i < 4; ++i)
    for (int l = i; l < 4; ++l) j.set(i, l, 1);
  CHECK(is_locally_singular(j, 2));
  CHECK_FALSE(is_nls(j, 2));

  CHECK_THROWS_AS(is_locally_singular(id, 5), DomainError);
}

TEST_CASE("matrices outside the cone are not locally singular") {
  // Unit diagonal with one off-diagonal entry of 2: the 2x2 block has a
  // negative eigenvalue, so the matrix leaves the cone.
  SymMatrix m = SymMatrix::identity(3);
  m.set(0, 1, 2);
  CHECK_FALSE(is_locally_singular(m, 2));
}

TEST_CASE("exact enumeration of the 64 sign cases") {
  std::vector<SignCase> cases = enumerate_sign_cases_42();
  REQUIRE(cases.size() == 64);
  int singular = 0, congruent = 0;
  for (const SignCase& c : cases)
    (c.label == SignCase::Label::CongruentToG ? congruent : singular)++;
  CHECK(singular == 56);
  CHECK(congruent == 8);

  // The all-negative pattern is the gram matrix itself.
  CHECK(cases[0].label == SignCase::Label::CongruentToG);
  // Flipping a single off-diagonal sign must produce a singular matrix.
  CHECK(cases[1].label == SignCase::Label::Singular);
}

TEST_CASE("congruence recovery round trip") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> mag(0.4, 2.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 3}, std::pair{6, 4}}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<double> d(n);
      for (double& v : d) v = (unif(rng) < 0.5 ? -1.0 : 1.0) * mag(rng);
      SymMatrix m = dgd_family(n, k, d);
      CongruenceWitness w = diag_congruent_to_g(m, k);
      REQUIRE(w.found);
      SymMatrix rebuilt = dgd_family(n, k, w.d);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(rebuilt(i, j) == doctest::Approx(m(i, j)).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("congruence recovery failure reasons") {
  SymMatrix j(4);
  for (int i = 0; i < 4; ++i)
    for (int l = i; l < 4; ++l) j.set(i, l, 1);
  CHECK(diag_congruent_to_g(j, 2).reason == "singular");

  SymMatrix neg = to_float(gram_g<Rational>(4, 2));
  neg.set(0, 0, -1.0);
  CongruenceWitness w = diag_congruent_to_g(neg, 2);
  CHECK_FALSE(w.found);
  CHECK(w.reason == "wrong diagonal signs");

  SymMatrix off = gram_g<double>(4, 2);
  off.set(0, 1, -0.5);
  CHECK(diag_congruent_to_g(off, 2).reason == "off-diagonal mismatch");

  // Sign pattern that is not a rank-one +-1 pattern: flip one entry of the
  // k=3 gram matrix (the flipped matrix stays nonsingular).
  SymMatrix flip = gram_g<double>(4, 3);
  flip.set(2, 3, 0.5);
  CongruenceWitness wf = diag_congruent_to_g(flip, 3);
  CHECK_FALSE(wf.found);
  CHECK(wf.reason == "sign pattern not rank-one");

  CHECK_THROWS_AS(diag_congruent_to_g(j, 1), DomainError);
}

TEST_CASE("NLS instances from the congruence family have one negative eigenvalue") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> mag(0.4, 2.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> d(5);
    for (double& v : d) v = (unif(rng) < 0.5 ? -1.0 : 1.0) * mag(rng);
    SymMatrix m = dgd_family(5, 3, d);
    CHECK(is_nls(m, 3, 1e-8));
    int negatives = 0;
    for (double lam : eigenvalues_sym(m).values)
      if (lam < -1e-10) ++negatives;
    CHECK(negatives == 1);
  }
}

TEST_CASE("random structure verification passes in the valid parameter range") {
  for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 3}, std::pair{6, 4}, std::pair{7, 3}}) {
    StructureReport rep = verify_structure_theorem(n, k, 25, 99);
    CHECK_FALSE(rep.falsified);
    CHECK(rep.passed == 25);
  }
  CHECK_THROWS_AS(verify_structure_theorem(5, 4, 10, 1), DomainError);
  CHECK_THROWS_AS(verify_structure_theorem(5, 2, 10, 1), DomainError);
}
