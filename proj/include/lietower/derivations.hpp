#ifndef LIETOWER_DERIVATIONS_HPP
#define LIETOWER_DERIVATIONS_HPP

// Derivation algebras and the reconstruction of Der g from a Gamma-triple:
// Der g = ad s + ad m + (Der g)^Gamma, with (Der g)^Gamma identified through
// restriction to m with the normalizer of mu(k) in B = (Der nhat)^Gamma|_m.
//
// Spaces of matrices are stored as Subspaces of flattened (row-major)
// matrices, which keeps every basis canonical.

#include <optional>
#include <string>
#include <vector>

#include "lietower/exactla.hpp"
#include "lietower/lie_algebra.hpp"
#include "lietower/structure.hpp"

namespace lietower {

Subspace matrix_span(const std::vector<Matrix>& maps, std::size_t n);
std::vector<Matrix> matrices_of(const Subspace& flat, std::size_t n);
/// {b in space : [b, w] lies in w for every w in w}
Subspace matrix_normalizer(const Subspace& space, const Subspace& w,
                           std::size_t n);
/// {b in space : [b, x] = 0 for every x in maps}
Subspace matrix_centralizer(const Subspace& space,
                            const std::vector<Matrix>& maps, std::size_t n);

struct DerivationSpace {
  std::size_t algebra_dim = 0;
  std::vector<Matrix> basis;  // RREF rows of the flattened solution space
  Subspace flat;
  LieAlgebra as_algebra;      // commutator constants in `basis`, named d1..
  /// dim Der x dim g; column i holds the coordinates of ad e_i.
  Matrix ad_embedding;

  std::size_t dim() const noexcept { return basis.size(); }
  /// Coordinates of a derivation in `basis`.
  Vector coordinates(const Matrix& d) const { return flat.coordinates(d.flatten()); }
  Subspace inner() const;  // image of ad inside as_algebra
};

/// Solves D[x_i, x_j] = [D x_i, x_j] + [x_i, D x_j] for all i < j.
DerivationSpace derivation_space(const LieAlgebra& g, std::string name = {});

struct GammaCentralizer {
  std::vector<Matrix> basis;  // (Der g)^Gamma
  std::vector<Matrix> theta;  // restrictions to m, in m's basis
  /// Der g = ad s + ad m + (Der g)^Gamma was checked to be direct. Only
  /// asserted for trivial center, where ad is injective.
  bool split_verified = false;
};

GammaCentralizer der_gamma_centralizer(const LieAlgebra& g,
                                       const GammaTriple& t,
                                       const DerivationSpace& der);
GammaCentralizer der_gamma_centralizer(const LieAlgebra& g,
                                       const GammaTriple& t);

struct BAlgebra {
  std::size_t m_dim = 0;
  Subspace space;             // flattened m_dim x m_dim matrices
  std::vector<Matrix> basis;
  std::string source = "restriction to m of the Gamma-centralizer in Der(nhat)";
};

/// Also checks that restriction is injective on (Der nhat)^Gamma and that
/// mu(k) lies in B.
BAlgebra b_algebra(const LieAlgebra& g, const GammaTriple& t, const MuRep& mu);

/// Everything the reconstruction needs, computed once.
struct PhiData {
  GammaTriple triple;
  MuRep mu;
  BAlgebra b;
  Subspace mu_k;  // span of mu(k) in B's flattened ambient

  bool center_trivial() const { return mu.injective; }
};

PhiData phi_data(const LieAlgebra& g);

/// Algebra on s + nsub + m (basis names s1.., n1.., m1..).
///
/// The m-m bracket is taken in g, its k-component is sent through mu into
/// nsub and its m-component is kept. Throws InputError when nsub is not
/// closed or does not contain the mu-image of that k-component.
LieAlgebra assemble_phi(const LieAlgebra& g, const GammaTriple& t,
                        const Subspace& nsub, std::string name = {});

/// The map s_i -> ad s_i, n_j -> Theta^{-1}(n_j), m_l -> ad m_l, with columns
/// expressed in der's basis. Requires trivial center.
Matrix phi_identification(const LieAlgebra& g, const GammaTriple& t,
                          const Subspace& nsub, const DerivationSpace& der,
                          const GammaCentralizer& cent);

struct CompletenessResult {
  bool complete = false;
  bool center_trivial = false;
  bool all_inner = false;
  std::size_t der_dim = 0;
  /// N_B(mu(k)) = mu(k); only evaluated when a triple is supplied and the
  /// center is trivial.
  std::optional<bool> normalizer_criterion;
  std::string witness;
};

CompletenessResult is_complete(const LieAlgebra& g);
CompletenessResult is_complete(const LieAlgebra& g, const DerivationSpace& der);
/// Cross-checks against the normalizer criterion; disagreement raises
/// InvariantError.
CompletenessResult is_complete(const LieAlgebra& g, const PhiData& data);

struct Hull {
  LieAlgebra algebra;
  /// m = 0 while k != 0: the radical contributes nothing and the hull is s.
  bool degenerate = false;
};

/// s + B + m, verified complete.
Hull complete_hull(const LieAlgebra& g, const PhiData& data);

}  // namespace lietower

#endif  // LIETOWER_DERIVATIONS_HPP
