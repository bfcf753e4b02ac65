#include <doctest.h>

#include <random>

#include "lietower/errors.hpp"
#include "lietower/polynomial.hpp"
#include "random_algebras.hpp"

using namespace lietower;

namespace {

Polynomial poly(std::initializer_list<long> low_to_high) {
  std::vector<Scalar> c;
  for (long x : low_to_high) c.emplace_back(x);
  return Polynomial(c);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial p = poly({-1, 0, 1});  // t^2 - 1
  const Polynomial q = poly({1, 1});      // t + 1
  CHECK(p.degree() == 2);
  const auto [quo, rem] = divmod(p, q);
  CHECK(quo == poly({-1, 1}));
  CHECK(rem.is_zero());
  CHECK(gcd(p, poly({1, 2, 1})) == q);
  CHECK(lcm(q, poly({-1, 1})) == p);
  CHECK(p.derivative() == poly({0, 2}));
  CHECK_THROWS_AS(divmod(p, Polynomial{}), InputError);
}

TEST_CASE("inverse modulo a coprime polynomial") {
  const Polynomial m = poly({1, 0, 1});  // t^2 + 1
  const Polynomial a = poly({1, 1});
  const Polynomial inv = inverse_mod(a, m);
  CHECK((a * inv) % m == Polynomial::constant(1));
  CHECK_THROWS_AS(inverse_mod(poly({0, 1}), poly({0, 0, 1})), InvariantError);
}

TEST_CASE("minimal polynomial and squarefree part") {
  const Matrix j{{2, 1, 0}, {0, 2, 0}, {0, 0, 3}};
  const Polynomial p = minimal_polynomial(j);
  // (t - 2)^2 (t - 3) = t^3 - 7t^2 + 16t - 12
  CHECK(p == poly({-12, 16, -7, 1}));
  CHECK(p.evaluate(j).is_zero());
  CHECK(squarefree_part(p) == poly({6, -5, 1}));
  CHECK(minimal_polynomial(Matrix::identity(3)) == poly({-1, 1}));
}

TEST_CASE("Jordan-Chevalley of a known matrix") {
  const Matrix m{{2, 1, 0}, {0, 2, 0}, {0, 0, 3}};
  const JordanChevalley jc = jordan_chevalley(m);
  CHECK(jc.semisimple == Matrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(jc.nilpotent == Matrix{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
}

TEST_CASE("Jordan-Chevalley with an irreducible quadratic factor") {
  // Companion block of (t^2 + 1)^2: semisimple part is not diagonalizable
  // over Q but must still have squarefree minimal polynomial.
  const Matrix m{{0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, -2}, {0, 0, 1, 0}};
  const JordanChevalley jc = jordan_chevalley(m);
  CHECK(jc.semisimple + jc.nilpotent == m);
  CHECK(commutator(jc.semisimple, jc.nilpotent).is_zero());
  CHECK(is_nilpotent(jc.nilpotent));
  CHECK_FALSE(jc.nilpotent.is_zero());
  const Polynomial ps = minimal_polynomial(jc.semisimple);
  CHECK(squarefree_part(ps) == ps);
  CHECK(ps == poly({1, 0, 1}));
}

TEST_CASE("Jordan-Chevalley properties on random matrices") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = testsupport::random_rational(rng, 5, 5);
    const JordanChevalley jc = jordan_chevalley(m);
    CHECK(jc.semisimple + jc.nilpotent == m);
    CHECK(commutator(jc.semisimple, jc.nilpotent).is_zero());
    CHECK(is_nilpotent(jc.nilpotent));
    const Polynomial ps = minimal_polynomial(jc.semisimple);
    CHECK(squarefree_part(ps) == ps);
  }
}

TEST_CASE("exponential of a nilpotent matrix") {
  const Matrix n{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
  const Matrix e = exp_nilpotent(n);
  CHECK(e(0, 2) == Scalar(1, 2));
  CHECK(e * exp_nilpotent(-n) == Matrix::identity(3));
  CHECK_THROWS_AS(exp_nilpotent(Matrix::identity(2)), InputError);
}
