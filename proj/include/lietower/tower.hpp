#ifndef LIETOWER_TOWER_HPP
#define LIETOWER_TOWER_HPP

// Derivation towers g_0 = g, g_{n+1} = Der g_n: direct iteration, the
// normalizer-chain fast path for trivial center, and the classification of
// how a tower ends.

#include <optional>
#include <string>
#include <vector>

#include "lietower/derivations.hpp"
#include "lietower/lie_algebra.hpp"

namespace lietower {

struct NormalizerChain {
  std::vector<Subspace> members;  // members[0] = start, last = stable member
  std::size_t stable_index = 0;   // first q with N^{q+1} = N^q
};

/// Iterates W -> N_B(W) from `start` (a bracket-closed subspace of B) until
/// it stabilizes.
NormalizerChain normalizer_tower(const BAlgebra& b, const Subspace& start);

struct GhatResult {
  LieAlgebra ghat;
  NormalizerChain chain;
  std::size_t s_dim = 0;
  std::size_t m_dim = 0;
  std::size_t b_dim = 0;
  /// dim(s + N^n + m) for each chain member.
  std::vector<std::size_t> level_dims;
};

/// s + N_B^q(mu(k)) + m. Requires Z(g) = 0 (InputError otherwise). Every
/// level is checked against the dimension of the matching direct derivation
/// iterate, and the result is checked to be complete.
GhatResult ghat_trivial_center(const LieAlgebra& g);

enum class TowerCase {
  case1_complete,          // Z = 0 and every derivation inner
  case2_K_times_perfect,   // K x a with a perfect and complete
  case3_divergent_suspected,
  undetermined,
};

std::string to_string(TowerCase c);

struct TowerStep {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  std::size_t radical_dim = 0;
  std::size_t nilradical_dim = 0;
  std::size_t derived_codim = 0;
  std::size_t der_dim = 0;
  bool complete = false;
};

struct SchenkmanBound {
  std::size_t bound = 0;       // dim Der(C^inf) + dim Z(C^inf)
  std::size_t ghat_dim = 0;
  std::size_t hull_dim = 0;    // dim(s + B + m)
  bool holds = false;
};

enum class FastPath { automatic, on, off };

struct TowerReport {
  std::vector<TowerStep> steps;
  std::optional<LieAlgebra> terminal;
  TowerCase kind = TowerCase::undetermined;
  /// Set when the fast path ran.
  std::optional<std::size_t> q;
  std::optional<std::size_t> ghat_dim;
  std::optional<SchenkmanBound> bound;
  /// Some step had dim Der g_n < dim g_n.
  bool dimension_decrease = false;
};

/// Iterates the derivation tower for at most max_steps algebras.
///
/// Stops at the first g_n that is complete, or that is K x a with a perfect
/// and complete, recognised by: dim Der = dim, dim Z = 1, Z cap [g, g] = 0,
/// dim Z + dim [g, g] = dim, and [g, g] perfect and complete. Otherwise the
/// tower is reported divergent when the last three dimensions strictly
/// increase, and undetermined if not. With trivial starting center the fast
/// path also runs (unless disabled) and its dimensions must agree.
TowerReport tower_iterate(const LieAlgebra& g, std::size_t max_steps = 16,
                          FastPath fast_path = FastPath::automatic);

/// Requires Z(g) = 0.
SchenkmanBound schenkman_bound(const LieAlgebra& g);

struct ProductSplit {
  std::size_t der1 = 0;
  std::size_t der2 = 0;
  std::size_t i12 = 0;  // maps g1 -> Z(g2) vanishing on [g1, g1]
  std::size_t i21 = 0;
  std::size_t total = 0;  // dim Der(g1 x g2) by a separate dense solve

  std::size_t ledger_sum() const { return der1 + der2 + i12 + i21; }
};

ProductSplit product_der_split(const LieAlgebra& g1, const LieAlgebra& g2);

}  // namespace lietower

#endif  // LIETOWER_TOWER_HPP
