#ifndef LIETOWER_LIE_ALGEBRA_HPP
#define LIETOWER_LIE_ALGEBRA_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lietower/exactla.hpp"

namespace lietower {

/// One nonzero bracket [e_i, e_j] = sum_k coeffs[k] e_k with i < j (0-based).
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector coeffs;
};

/// Finite-dimensional Lie algebra over Q given by structure constants.
///
/// Only brackets with i < j are stored; antisymmetry is structural and the
/// Jacobi identity is checked by the constructor. Instances are immutable.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Validates dimensions and the Jacobi identity; throws JacobiError naming
  /// the first failing basis triple.
  LieAlgebra(std::string name, std::vector<std::string> basis_names,
             std::vector<BracketEntry> brackets);

  static LieAlgebra abelian(std::size_t n, std::string name = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

  /// [e_i, e_j] for any i, j.
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  /// c_{ij}^k
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return ad_[i](k, j);
  }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of y -> [e_i, y].
  const Matrix& ad_basis(std::size_t i) const { return ad_[i]; }
  /// Nonzero brackets with i < j, in lexicographic order.
  std::vector<BracketEntry> brackets() const;

  LieAlgebra renamed(std::string name) const;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::string name_;
  std::vector<std::string> names_;
  std::vector<Vector> upper_;  // [e_i, e_j] for i < j, packed row by row
  std::vector<Matrix> ad_;
};

/// Builds and validates an algebra; the operation form of the constructor.
LieAlgebra validate_lie(std::string name, std::vector<std::string> basis_names,
                        std::vector<BracketEntry> brackets);

/// prefix1, prefix2, ...
std::vector<std::string> generic_names(const std::string& prefix, std::size_t n);
/// Builds and validates an algebra from its brackets [e_i, e_j], i < j.
LieAlgebra algebra_from_brackets(
    std::string name, std::vector<std::string> names,
    const std::function<Vector(std::size_t, std::size_t)>& bracket_of);

/// Structure constants with respect to the basis given by the columns of p.
/// Throws InputError when p is singular.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p,
                        std::string name = {});

Matrix ad(const LieAlgebra& g, const Vector& x);
/// span{[u, v] : u in a, v in b}
Subspace bracket_spaces(const LieAlgebra& g, const Subspace& a,
                        const Subspace& b);
bool is_subalgebra(const LieAlgebra& g, const Subspace& w);
bool is_ideal(const LieAlgebra& g, const Subspace& w);

/// Structure constants of a subalgebra in the basis of w's RREF rows.
/// Throws InvariantError when w is not closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& w,
                       std::string name = {});
/// Embeds coordinates w.r.t. w's basis back into g.
Vector lift_from(const Subspace& w, const Vector& coords);
/// Image of a subspace of restrict_to(g, w) inside g.
Subspace lift_subspace(const Subspace& w, const Subspace& inner);

Subspace center(const LieAlgebra& g);
Subspace centralizer(const LieAlgebra& g, const Subspace& w);
Subspace normalizer(const LieAlgebra& g, const Subspace& w);

enum class SeriesKind { derived, lower_central };

/// Members from g itself down to the stable member, each strictly smaller
/// than the one before.
std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind);
Subspace derived_algebra(const LieAlgebra& g);
Subspace c_infty(const LieAlgebra& g);

struct KillingRadical {
  Matrix killing;
  Subspace radical;
};

/// The radical is the Killing-orthogonal of [g, g] (valid in characteristic 0).
KillingRadical killing_radical(const LieAlgebra& g);
Subspace radical(const LieAlgebra& g);

/// Largest nilpotent ideal. Computed as the elements x of the radical r for
/// which ad_r x lies in the trace-form radical of the associative algebra
/// generated by ad_r r and the identity.
Subspace nilradical(const LieAlgebra& g);

struct AlgebraFlags {
  bool solvable = false;
  bool nilpotent = false;
  bool semisimple = false;
  bool perfect = false;
  bool abelian = false;
};

AlgebraFlags classify_flags(const LieAlgebra& g);

struct Quotient {
  LieAlgebra algebra;
  /// dim(g/I) x dim(g) matrix of the canonical projection.
  Matrix projection;
};

/// Quotient on the basis of unit vectors outside the ideal's pivot columns.
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);
LieAlgebra direct_product(const LieAlgebra& a, const LieAlgebra& b,
                          std::string name = {});
/// Embedding of the first / second factor into direct_product(a, b).
Subspace first_factor(const LieAlgebra& a, const LieAlgebra& b);
Subspace second_factor(const LieAlgebra& a, const LieAlgebra& b);
Subspace ideal_generated(const LieAlgebra& g, const Subspace& w);

/// True iff every map in `ders` sends w into w. Throws InputError when w is
/// not an ideal.
bool is_characteristic_ideal(const LieAlgebra& g, const Subspace& w,
                             const std::vector<Matrix>& ders);

/// exp(ad x); requires ad x nilpotent.
Matrix inner_automorphism(const LieAlgebra& g, const Vector& x);

bool is_derivation(const LieAlgebra& g, const Matrix& d);
/// True iff phi([e_i, e_j]) = [phi e_i, phi e_j] for all basis pairs.
bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to,
                     const Matrix& phi);
Subspace apply(const Matrix& phi, const Subspace& w);
bool is_nilpotent_algebra(const LieAlgebra& g);

}  // namespace lietower

#endif  // LIETOWER_LIE_ALGEBRA_HPP
