#include <doctest.h>

#include <random>

#include "lietower/errors.hpp"
#include "lietower/exactla.hpp"
#include "oracles.hpp"
#include "random_algebras.hpp"

using namespace lietower;

namespace {

oracle::Rows rows_of(const Matrix& m) {
  oracle::Rows out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Vector v = m.row(r);
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

}  // namespace

TEST_CASE("rationals parse exactly and canonically") {
  CHECK(parse_scalar("6/4") == Scalar(3, 2));
  CHECK(to_string(parse_scalar("6/4")) == "3/2");
  CHECK(to_string(parse_scalar("-10/5")) == "-2");
  CHECK(to_string(parse_scalar("0/7")) == "0");
  CHECK(parse_scalar("123456789012345678901234567890") ==
        Scalar(mpz_class("123456789012345678901234567890")));
  CHECK_THROWS_AS(parse_scalar("1/0"), InputError);
  CHECK_THROWS_AS(parse_scalar("1/-2"), InputError);
  CHECK_THROWS_AS(parse_scalar("1.5"), InputError);
  CHECK_THROWS_AS(parse_scalar(""), InputError);
  CHECK_THROWS_AS(parse_scalar("-"), InputError);
  CHECK_THROWS_AS(parse_scalar("2/"), InputError);
}

TEST_CASE("rref of a known matrix") {
  const Matrix m{{0, 2, 4}, {1, 1, 1}, {2, 4, 6}};
  const RrefResult r = rref(m);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.reduced == Matrix{{1, 0, -1}, {0, 1, 2}, {0, 0, 0}});
}

TEST_CASE("rank agrees with an independent elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const Matrix m = testsupport::random_rational(rng, dim(rng), dim(rng));
    CHECK(rref(m).rank == oracle::rank(rows_of(m)));
  }
}

TEST_CASE("kernel and image satisfy rank-nullity and annihilate") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const Matrix m = testsupport::random_rational(rng, dim(rng), dim(rng));
    const auto [ker, img] = kernel_image(m);
    CHECK(ker.dim() + img.dim() == m.cols());
    for (const Vector& v : ker.vectors()) CHECK(is_zero(m * v));
    for (std::size_t c = 0; c < m.cols(); ++c) CHECK(img.contains(m.column(c)));
  }
}

TEST_CASE("solve returns a particular solution or reports inconsistency") {
  const Matrix a{{1, 1}, {1, 1}};
  CHECK_FALSE(solve(a, {Scalar(1), Scalar(2)}).particular.has_value());
  const SolveResult r = solve(a, {Scalar(3), Scalar(3)});
  REQUIRE(r.particular.has_value());
  CHECK(a * *r.particular == Vector{Scalar(3), Scalar(3)});
  CHECK(r.kernel.dim() == 1);
}

TEST_CASE("inverse of random unimodular matrices") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix p = testsupport::random_unimodular(rng, 5);
    const auto inv = inverse(p);
    REQUIRE(inv.has_value());
    CHECK(p * *inv == Matrix::identity(5));
  }
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("subspaces are canonical and support sum and intersection") {
  const Subspace u = Subspace::span(3, {{Scalar(1), Scalar(1), Scalar(0)}, {Scalar(2), Scalar(2), Scalar(0)}});
  const Subspace u2 = Subspace::span(3, {{Scalar(-3), Scalar(-3), Scalar(0)}});
  CHECK(u == u2);
  CHECK(u.dim() == 1);
  const Subspace v = Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 2)});
  CHECK(subspace_sum(u, v).is_full());
  CHECK(subspace_intersect(u, v).is_zero());
  const Subspace w = Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)});
  CHECK(subspace_intersect(u, w) == u);
  CHECK(subspace_contains(w, u));
  CHECK_FALSE(subspace_contains(u, w));
  CHECK(annihilator(w) == Subspace::span(3, {unit_vector(3, 2)}));
  CHECK_THROWS_AS(u.coordinates(unit_vector(3, 2)), InvariantError);
}

TEST_CASE("random intersections match the dimension formula") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = testsupport::random_rational(rng, 3, 6);
    const Matrix b = testsupport::random_rational(rng, 4, 6);
    const Subspace u = Subspace::row_space(a), v = Subspace::row_space(b);
    const Subspace i = subspace_intersect(u, v);
    CHECK(i.dim() + subspace_sum(u, v).dim() == u.dim() + v.dim());
    CHECK(u.contains(i));
    CHECK(v.contains(i));
  }
}

TEST_CASE("row reducer streams to the same row space as a batch rref") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = testsupport::random_rational(rng, 7, 5);
    RowReducer red(5);
    for (std::size_t r = 0; r < m.rows(); ++r) red.add(m.row(r));
    CHECK(red.row_space() == Subspace::row_space(m));
    CHECK(red.kernel() == kernel(m));
  }
}

TEST_CASE("direct sum splitter recovers components") {
  const Subspace a = Subspace::span(3, {{Scalar(1), Scalar(1), Scalar(0)}});
  const Subspace b = Subspace::span(3, {unit_vector(3, 1)});
  const Subspace c = Subspace::span(3, {unit_vector(3, 2)});
  const DirectSumSplitter split({a, b, c});
  const auto parts = split.components({Scalar(2), Scalar(5), Scalar(-1)});
  CHECK(parts[0] == Vector{Scalar(2), Scalar(2), Scalar(0)});
  CHECK(parts[1] == Vector{Scalar(0), Scalar(3), Scalar(0)});
  CHECK(parts[2] == Vector{Scalar(0), Scalar(0), Scalar(-1)});
  CHECK_THROWS_AS(DirectSumSplitter({a, a, c}), InvariantError);
  CHECK_THROWS_AS(DirectSumSplitter({a, b}), InvariantError);
}

TEST_CASE("restricted matrix on an invariant subspace") {
  const Matrix d{{1, 1, 0}, {0, 1, 0}, {0, 0, 2}};
  const Subspace w = Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)});
  CHECK(restricted_matrix(d, w) == Matrix{{1, 1}, {0, 1}});
  CHECK_THROWS_AS(restricted_matrix(d, Subspace::span(3, {unit_vector(3, 1)})), InvariantError);
}

TEST_CASE("empty and zero-dimensional edge cases") {
  CHECK(Subspace::zero(0).is_full());
  CHECK(Subspace::span(4, {}).is_zero());
  CHECK(kernel(Matrix(0, 3)).is_full());
  CHECK(Subspace::full(3).complement_indices().empty());
  CHECK(is_nilpotent(Matrix{{0, 1}, {0, 0}}));
  CHECK_FALSE(is_nilpotent(Matrix{{1, 0}, {0, 0}}));
}
