#include <doctest.h>

#include <random>

#include "lietower/catalog.hpp"
#include "lietower/derivations.hpp"
#include "lietower/errors.hpp"
#include "oracles.hpp"
#include "random_algebras.hpp"

using namespace lietower;

TEST_CASE("derivation dimensions of the fixtures") {
  CHECK(derivation_space(catalog("sl2")).dim() == 3);
  CHECK(derivation_space(catalog("aff1")).dim() == 2);
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(derivation_space(LieAlgebra::abelian(n)).dim() == n * n);
  }
  // Der(heis3): 4-dimensional gl2-part acting on (x, y) plus maps into z.
  CHECK(derivation_space(catalog("heis3")).dim() == 6);
  CHECK(derivation_space(LieAlgebra::abelian(0)).dim() == 0);
}

TEST_CASE("derivation solver agrees with the all-pairs oracle") {
  for (const auto& name : catalog_names()) {
    const LieAlgebra g = catalog(name);
    CHECK_MESSAGE(derivation_space(g).dim() == oracle::der_dim(g), name);
  }
  std::mt19937 rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    const LieAlgebra g = testsupport::random_extension(rng, trial % 2 == 0);
    CHECK(derivation_space(g).dim() == oracle::der_dim(g));
  }
}

TEST_CASE("derivation basis satisfies Leibniz and ad g is an ideal") {
  for (const auto& name : catalog_names()) {
    const LieAlgebra g = catalog(name);
    const DerivationSpace der = derivation_space(g);
    for (const Matrix& d : der.basis) CHECK(oracle::is_derivation(g, d));
    CHECK(is_ideal(der.as_algebra, der.inner()));
    CHECK(der.inner().dim() == g.dim() - center(g).dim());
  }
}

TEST_CASE("as_algebra brackets are matrix commutators") {
  const LieAlgebra g = catalog("heis3");
  const DerivationSpace der = derivation_space(g);
  for (std::size_t a = 0; a < der.dim(); ++a) {
    for (std::size_t b = a + 1; b < der.dim(); ++b) {
      Matrix expect(3, 3);
      const Vector c = der.as_algebra.bracket_basis(a, b);
      for (std::size_t e = 0; e < der.dim(); ++e) expect += c[e] * der.basis[e];
      CHECK(expect == commutator(der.basis[a], der.basis[b]));
    }
  }
}

TEST_CASE("Gamma-centralizer and the three-way split") {
  SUBCASE("sl2") {
    const LieAlgebra g = catalog("sl2");
    const GammaCentralizer c = der_gamma_centralizer(g, gamma_triple(g));
    CHECK(c.basis.empty());
    CHECK(c.split_verified);
  }
  SUBCASE("abelian") {
    const LieAlgebra g = catalog("abelian(3)");
    const GammaCentralizer c = der_gamma_centralizer(g, gamma_triple(g));
    CHECK(c.basis.size() == 9);
    CHECK_FALSE(c.split_verified);
  }
  SUBCASE("paper5") {
    const LieAlgebra g = catalog("paper5");
    const GammaTriple t = gamma_triple(g);
    const DerivationSpace der = derivation_space(g);
    const GammaCentralizer c = der_gamma_centralizer(g, t, der);
    // ad m is injective here even though the center is not trivial.
    CHECK(der.dim() == 0 + 2 + c.basis.size());
  }
}

TEST_CASE("B for the fixtures") {
  SUBCASE("diag12: all diagonal maps") {
    const PhiData d = phi_data(catalog("diag12"));
    CHECK(d.b.space.dim() == 2);
    CHECK(d.b.space.contains(Matrix{{1, 0}, {0, 0}}.flatten()));
    CHECK(d.b.space.contains(Matrix{{0, 0}, {0, 1}}.flatten()));
  }
  SUBCASE("sl2: trivial") {
    const PhiData d = phi_data(catalog("sl2"));
    CHECK(d.b.space.dim() == 0);
  }
  SUBCASE("paper5: contains mu(x1)") {
    const PhiData d = phi_data(catalog("paper5"));
    CHECK(d.b.space.contains(Matrix{{1, 0}, {0, -1}}.flatten()));
  }
}

TEST_CASE("matrix normalizer and centralizer") {
  const Subspace all = Subspace::full(4);
  const Subspace diag = Subspace::span(4, {Matrix{{1, 0}, {0, 0}}.flatten(),
                                           Matrix{{0, 0}, {0, 1}}.flatten()});
  const Subspace one = Subspace::span(4, {Matrix{{1, 0}, {0, 2}}.flatten()});
  CHECK(matrix_centralizer(all, {Matrix{{1, 0}, {0, 2}}}, 2) == diag);
  CHECK(matrix_normalizer(all, one, 2) == diag);
  CHECK(matrix_normalizer(diag, Subspace::zero(4), 2) == diag);
}

TEST_CASE("assembling with mu(k) reproduces g") {
  for (const char* name : {"diag12", "jordan2", "sl2_ltimes_q2", "aff1"}) {
    const LieAlgebra g = catalog(name);
    const PhiData d = phi_data(g);
    const LieAlgebra back = assemble_phi(g, d.triple, d.mu_k);
    CHECK(back.dim() == g.dim());
    CHECK(derivation_space(back).dim() == derivation_space(g).dim());
  }
}

TEST_CASE("assembling with N_B(mu(k)) matches Der g under the identification") {
  std::mt19937 rng(59);
  std::vector<LieAlgebra> algebras;
  for (const auto& name : catalog_names()) algebras.push_back(catalog(name));
  for (int trial = 0; trial < 8; ++trial) algebras.push_back(testsupport::random_extension(rng, true));
  for (const LieAlgebra& g : algebras) {
    if (!center(g).is_zero()) continue;
    const PhiData d = phi_data(g);
    const std::size_t dm = d.triple.m.dim();
    const Subspace nsub = matrix_normalizer(d.b.space, d.mu_k, dm);
    const LieAlgebra phi = assemble_phi(g, d.triple, nsub);
    const DerivationSpace der = derivation_space(g);
    const GammaCentralizer cent = der_gamma_centralizer(g, d.triple, der);
    CHECK(matrix_span(cent.theta, dm) == nsub);
    const Matrix psi = phi_identification(g, d.triple, nsub, der, cent);
    REQUIRE(inverse(psi).has_value());
    CHECK(change_basis(der.as_algebra, psi).brackets().size() == phi.brackets().size());
    CHECK(is_homomorphism(phi, der.as_algebra, psi));
  }
}

TEST_CASE("assembly rejects nsub of the wrong shape or not closed") {
  const LieAlgebra g = catalog("diag12");
  const PhiData d = phi_data(g);
  CHECK_THROWS_AS(assemble_phi(g, d.triple, Subspace::zero(9)), InputError);
  // e12 and e21 do not close: their commutator is diag(1, -1).
  const Subspace open = Subspace::span(4, {Matrix{{0, 1}, {0, 0}}.flatten(),
                                           Matrix{{0, 0}, {1, 0}}.flatten()});
  CHECK_THROWS_AS(assemble_phi(g, d.triple, open), InputError);
}

TEST_CASE("completeness") {
  CHECK(is_complete(catalog("sl2")).complete);
  CHECK(is_complete(catalog("aff1")).complete);
  const CompletenessResult h = is_complete(catalog("heis3"));
  CHECK_FALSE(h.complete);
  CHECK_FALSE(h.center_trivial);
  CHECK(h.witness == "nonzero center");
  const CompletenessResult d = is_complete(catalog("diag12"));
  CHECK_FALSE(d.complete);
  CHECK(d.witness == "outer derivations exist");
}

TEST_CASE("normalizer criterion agrees with completeness") {
  for (const auto& name : catalog_names()) {
    const LieAlgebra g = catalog(name);
    const PhiData d = phi_data(g);
    const CompletenessResult c = is_complete(g, d);
    CHECK(c.normalizer_criterion.has_value() == center(g).is_zero());
  }
}

TEST_CASE("complete hulls") {
  const Hull sl2 = complete_hull(catalog("sl2"), phi_data(catalog("sl2")));
  CHECK(sl2.algebra.dim() == 3);
  CHECK_FALSE(sl2.degenerate);
  const Hull d12 = complete_hull(catalog("diag12"), phi_data(catalog("diag12")));
  CHECK(d12.algebra.dim() == 4);
  CHECK(is_complete(d12.algebra).complete);
  const Hull ab = complete_hull(catalog("abelian(2)"), phi_data(catalog("abelian(2)")));
  CHECK(ab.algebra.dim() == 0);
  CHECK(ab.degenerate);
  const Hull p5 = complete_hull(catalog("paper5"), phi_data(catalog("paper5")));
  CHECK(p5.algebra.dim() == 4);
  CHECK(is_complete(p5.algebra).complete);
}
