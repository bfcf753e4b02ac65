#ifndef LIETOWER_STRUCTURE_HPP
#define LIETOWER_STRUCTURE_HPP

// Levi subalgebras, nilpotent supplements, the maximal completely reducible
// subalgebra Gamma built from them, and the (s, k, m) decompositions it
// induces.

#include <string>
#include <vector>

#include "lietower/exactla.hpp"
#include "lietower/lie_algebra.hpp"

namespace lietower {

/// Decomposition g = s + k + m with Gamma = ad s + (ad h)_S.
struct GammaTriple {
  Subspace s;  // Levi part
  Subspace k;  // fixed points of Gamma
  Subspace m;  // Gamma . r
  std::vector<Matrix> gamma;  // basis of Gamma as derivations of g
  Subspace h;  // nilpotent supplement used to build Gamma
};

/// A semisimple subalgebra complementary to the radical.
///
/// Lifts the basis of g/r to g and corrects the lift stage by stage along the
/// derived series of r, solving the linearized closure equations modulo the
/// next member at each stage. Each stage is solvable by Whitehead's lemma, so
/// an inconsistent system raises InvariantError.
Subspace levi_subalgebra(const LieAlgebra& g);

/// Nilpotent subalgebra h of a solvable algebra q with h + C^inf(q) = q.
/// Splits off the image of the first basis element's semisimple adjoint part
/// and recurses on the kernel.
Subspace nilpotent_supplement(const LieAlgebra& q);

struct McrGamma {
  std::vector<Matrix> gamma;  // ad s basis, then the independent (ad h)_S
  Subspace s;
  Subspace h;
  std::size_t toral_count = 0;  // trailing entries of `gamma` from (ad h)_S
};

McrGamma mcr_gamma(const LieAlgebra& g);

struct GammaSplit {
  Subspace fixed;
  Subspace image;
};

/// g = g^Gamma + Gamma.g; throws InvariantError if the sum is not direct.
GammaSplit gamma_split(const LieAlgebra& g, const std::vector<Matrix>& gamma);

/// k = g^Gamma, m = Gamma . r, s from mcr_gamma; all axioms are verified
/// before returning.
GammaTriple gamma_triple(const LieAlgebra& g);

/// Outcome of checking the four triple axioms on arbitrary subspaces.
///
/// Axiom ii) is checked with k a nilpotent subalgebra centralizing s. The
/// fixed-point space of Gamma is in general not an ideal (already not for
/// the 5-dimensional solvable example with [x1,x3] = x3), so ideal-ness is
/// not demanded.
struct TripleCheck {
  bool levi = false;            // i)
  bool nilpotent_part = false;  // ii)
  bool radical_split = false;   // iii)
  bool direct_sum = false;      // iv)
  std::string failure;

  bool ok() const { return levi && nilpotent_part && radical_split && direct_sum; }
};

TripleCheck check_triple_axioms(const LieAlgebra& g, const Subspace& s,
                                const Subspace& k, const Subspace& m);

/// Image of a triple under an automorphism phi of g.
GammaTriple push_forward(const GammaTriple& t, const Matrix& phi);

struct MuRep {
  std::vector<Matrix> mu;  // ad x|_m in m's basis, one per basis vector of k
  Subspace nhat;           // m + [m, m]
  Subspace ker_mu;
  bool injective = false;
};

/// Representation of k on m together with the identities it satisfies:
/// nhat = C^inf(g) cap n, Z(g) = Z(k) cap ker mu, injective iff Z(g) = 0.
MuRep mu_rep(const LieAlgebra& g, const GammaTriple& t);

/// mu(x) for an arbitrary x in k.
Matrix mu_of(const LieAlgebra& g, const GammaTriple& t, const Vector& x);

}  // namespace lietower

#endif  // LIETOWER_STRUCTURE_HPP
