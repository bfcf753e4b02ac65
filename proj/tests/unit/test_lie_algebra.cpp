#include <doctest.h>

#include <random>

#include "lietower/catalog.hpp"
#include "lietower/errors.hpp"
#include "lietower/lie_algebra.hpp"
#include "lietower/polynomial.hpp"
#include "oracles.hpp"
#include "random_algebras.hpp"

using namespace lietower;

namespace {

Subspace units(std::size_t n, std::initializer_list<std::size_t> one_based) {
  std::vector<Vector> v;
  for (std::size_t i : one_based) v.push_back(unit_vector(n, i - 1));
  return Subspace::span(n, v);
}

}  // namespace

TEST_CASE("Jacobi violations are reported with the failing triple") {
  // [x,y] = z, [y,z] = x, [x,z] = x
  std::vector<BracketEntry> br{{0, 1, {Scalar(0), Scalar(0), Scalar(1)}},
                               {1, 2, {Scalar(1), Scalar(0), Scalar(0)}},
                               {0, 2, {Scalar(1), Scalar(0), Scalar(0)}}};
  try {
    LieAlgebra("bad", {"x", "y", "z"}, br);
    FAIL("expected a Jacobi violation");
  } catch (const JacobiError& e) {
    CHECK(e.triple() == std::array<std::size_t, 3>{0, 1, 2});
  }
}

TEST_CASE("malformed bracket tables are rejected") {
  CHECK_THROWS_AS(LieAlgebra("g", {"x", "y"}, {{1, 0, {Scalar(1), Scalar(0)}}}), InputError);
  CHECK_THROWS_AS(LieAlgebra("g", {"x", "y"}, {{0, 2, {Scalar(1), Scalar(0)}}}), InputError);
  CHECK_THROWS_AS(LieAlgebra("g", {"x", "y"}, {{0, 1, {Scalar(1)}}}), InputError);
  CHECK_THROWS_AS(LieAlgebra("g", {"x", "y"},
                             {{0, 1, {Scalar(1), Scalar(0)}}, {0, 1, {Scalar(0), Scalar(1)}}}),
                  InputError);
}

TEST_CASE("catalog fixtures") {
  const LieAlgebra p5 = catalog("paper5");
  CHECK(p5.dim() == 5);
  CHECK(p5.bracket_basis(0, 1) == unit_vector(5, 4));
  CHECK(p5.bracket_basis(2, 3) == unit_vector(5, 4));
  CHECK(catalog("abelian(2)").brackets().empty());
  CHECK(classify_flags(catalog("sl2")).semisimple);
  CHECK(catalog("abelian(1)*sl2").dim() == 4);
  CHECK_THROWS_AS(catalog("nope"), InputError);
  CHECK_THROWS_AS(catalog("abelian(x)"), InputError);
  for (const auto& name : catalog_names()) CHECK(catalog(name).dim() > 0);
}

TEST_CASE("adjoint action on paper5 and sl2") {
  const LieAlgebra p5 = catalog("paper5");
  const Matrix a = ad(p5, unit_vector(5, 0));
  CHECK(a * unit_vector(5, 1) == unit_vector(5, 4));
  CHECK(a * unit_vector(5, 2) == unit_vector(5, 2));
  CHECK(a * unit_vector(5, 3) == Scalar(-1) * unit_vector(5, 3));
  const LieAlgebra sl2 = catalog("sl2");
  const Matrix h = ad(sl2, unit_vector(3, 0));
  CHECK(h * unit_vector(3, 1) == Scalar(2) * unit_vector(3, 1));
  CHECK(h * unit_vector(3, 2) == Scalar(-2) * unit_vector(3, 2));
}

TEST_CASE("centers, series and radicals of the fixtures") {
  const LieAlgebra p5 = catalog("paper5");
  CHECK(center(p5) == units(5, {5}));
  CHECK(c_infty(p5) == units(5, {3, 4, 5}));
  CHECK(radical(p5).is_full());
  CHECK(nilradical(p5) == units(5, {2, 3, 4, 5}));
  const AlgebraFlags f = classify_flags(p5);
  CHECK(f.solvable);
  CHECK_FALSE(f.nilpotent);
  CHECK(ideal_generated(p5, units(5, {3})) == units(5, {3, 5}));

  const LieAlgebra sl2 = catalog("sl2");
  CHECK(radical(sl2).is_zero());
  CHECK(center(sl2).is_zero());
  CHECK(derived_algebra(sl2).is_full());

  const LieAlgebra heis = catalog("heis3");
  CHECK(center(heis) == units(3, {3}));
  CHECK(classify_flags(heis).nilpotent);
  CHECK(nilradical(heis).is_full());

  const LieAlgebra sq = catalog("sl2_ltimes_q2");
  CHECK(radical(sq) == units(5, {4, 5}));
  CHECK(nilradical(sq) == units(5, {4, 5}));
}

TEST_CASE("center and derived algebra agree with the oracle on random algebras") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const LieAlgebra g = testsupport::random_extension(rng, trial % 2 == 0);
    CHECK(center(g).dim() == oracle::center_dim(g));
    CHECK(derived_algebra(g).dim() == oracle::derived_dim(g));
  }
}

TEST_CASE("nilradical is a nilpotent ideal containing every nilpotent ideal tried") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const LieAlgebra g = testsupport::random_extension(rng, false);
    const Subspace n = nilradical(g);
    CHECK(is_ideal(g, n));
    CHECK(is_nilpotent_algebra(restrict_to(g, n)));
    CHECK(radical(g).contains(n));
    // [g, r] is a nilpotent ideal, so it lies in the nilradical.
    CHECK(n.contains(bracket_spaces(g, Subspace::full(g.dim()), radical(g))));
    CHECK(n.contains(center(g)));
  }
}

TEST_CASE("quotients and products") {
  const LieAlgebra p5 = catalog("paper5");
  const Quotient q = quotient(p5, center(p5));
  CHECK(q.algebra.dim() == 4);
  CHECK(is_homomorphism(p5, q.algebra, q.projection));
  CHECK_THROWS_AS(quotient(p5, units(5, {1})), InputError);

  const LieAlgebra prod = direct_product(catalog("aff1"), catalog("heis3"));
  CHECK(prod.dim() == 5);
  CHECK(bracket_spaces(prod, first_factor(catalog("aff1"), catalog("heis3")),
                       second_factor(catalog("aff1"), catalog("heis3")))
            .is_zero());
  const LieAlgebra self = direct_product(catalog("aff1"), catalog("aff1"));
  CHECK(self.basis_names() == std::vector<std::string>{"x_1", "y_1", "x_2", "y_2"});
}

TEST_CASE("change of basis gives an isomorphic algebra") {
  std::mt19937 rng(31);
  for (const auto& name : catalog_names()) {
    const LieAlgebra g = catalog(name);
    const Matrix p = testsupport::random_unimodular(rng, g.dim());
    const LieAlgebra h = change_basis(g, p);
    // p maps coordinates in h to coordinates in g.
    CHECK(is_homomorphism(h, g, p));
    CHECK(center(h).dim() == center(g).dim());
  }
  CHECK_THROWS_AS(change_basis(catalog("aff1"), Matrix{{1, 1}, {1, 1}}), InputError);
}

TEST_CASE("inner automorphisms preserve brackets") {
  for (const auto& name : catalog_names()) {
    const LieAlgebra g = catalog(name);
    for (std::size_t i = 0; i < g.dim(); ++i) {
      if (!is_nilpotent(g.ad_basis(i))) continue;
      CHECK(is_homomorphism(g, g, inner_automorphism(g, unit_vector(g.dim(), i))));
    }
  }
  CHECK_THROWS_AS(inner_automorphism(catalog("aff1"), unit_vector(2, 0)), InputError);
}

TEST_CASE("center and derived algebra are characteristic") {
  for (const auto& name : catalog_names()) {
    const LieAlgebra g = catalog(name);
    std::vector<Matrix> ads;
    for (std::size_t i = 0; i < g.dim(); ++i) ads.push_back(g.ad_basis(i));
    CHECK(is_characteristic_ideal(g, center(g), ads));
    CHECK(is_characteristic_ideal(g, derived_algebra(g), ads));
  }
}

TEST_CASE("restriction to a subalgebra keeps unit-vector names") {
  const LieAlgebra p5 = catalog("paper5");
  const LieAlgebra k = restrict_to(p5, units(5, {1, 2, 5}));
  CHECK(k.basis_names() == std::vector<std::string>{"x1", "x2", "x5"});
  CHECK(k.bracket_basis(0, 1) == unit_vector(3, 2));
  CHECK_THROWS_AS(restrict_to(p5, units(5, {3, 4})), InvariantError);
}

TEST_CASE("zero-dimensional algebra") {
  const LieAlgebra z = LieAlgebra::abelian(0);
  CHECK(z.dim() == 0);
  CHECK(center(z).is_zero());
  CHECK(radical(z).is_zero());
}
