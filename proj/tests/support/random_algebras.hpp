#ifndef LIETOWER_TESTS_RANDOM_ALGEBRAS_HPP
#define LIETOWER_TESTS_RANDOM_ALGEBRAS_HPP

#include <random>
#include <string>
#include <vector>

#include "lietower/lie_algebra.hpp"

namespace testsupport {

using lietower::LieAlgebra;
using lietower::Matrix;

/// a x| V where `mats` span a Lie algebra of matrices on V = Q^q; basis
/// a1.., v1...
LieAlgebra semidirect(const std::vector<Matrix>& mats, const std::string& name);

/// Standard sl2 triple (h, e, f) acting on homogeneous polynomials of degree k.
std::vector<Matrix> sl2_sym(std::size_t k);

/// Invertible integer matrix built from random elementary operations.
Matrix random_unimodular(std::mt19937& rng, std::size_t n);

/// Random rational matrix with small numerators and denominators.
Matrix random_rational(std::mt19937& rng, std::size_t rows, std::size_t cols);

/// Solvable or Levi-nontrivial extension of dimension <= 8, written in a
/// scrambled basis. With trivial_center the result always has Z = 0.
LieAlgebra random_extension(std::mt19937& rng, bool trivial_center);

}  // namespace testsupport

#endif
