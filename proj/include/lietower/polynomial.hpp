#ifndef LIETOWER_POLYNOMIAL_HPP
#define LIETOWER_POLYNOMIAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "lietower/exactla.hpp"

namespace lietower {

/// Univariate rational polynomial. Coefficients are stored lowest degree
/// first with no trailing zeros; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial constant(const Scalar& c);
  /// The indeterminate t.
  static Polynomial t();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coefficient(std::size_t i) const;
  const Scalar& leading() const { return coeffs_.back(); }

  Polynomial monic() const;
  Polynomial derivative() const;
  Matrix evaluate(const Matrix& m) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Scalar& c, const Polynomial& a);
/// Quotient and remainder; throws InputError on division by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);
/// Inverse of a modulo m, or throws InvariantError when they share a factor.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);
/// f(g) mod m, by Horner's rule.
Polynomial compose_mod(const Polynomial& f, const Polynomial& g,
                       const Polynomial& m);

/// Monic minimal polynomial, as the lcm of the local minimal polynomials of
/// the unit vectors (each read off a Krylov sequence).
Polynomial minimal_polynomial(const Matrix& m);
/// p / gcd(p, p'). Throws InputError on the zero polynomial.
Polynomial squarefree_part(const Polynomial& p);

struct JordanChevalley {
  Matrix semisimple;
  Matrix nilpotent;
};

/// Additive Jordan-Chevalley decomposition. The semisimple part is obtained
/// as sigma(m) where sigma solves f(sigma) = 0 in Q[t]/(minpoly), f being
/// the squarefree part of the minimal polynomial; sigma is found by Newton
/// iteration starting at t. No eigenvalues are ever computed.
JordanChevalley jordan_chevalley(const Matrix& m);

/// Finite exponential series of a nilpotent matrix. Throws InputError if the
/// matrix is not nilpotent.
Matrix exp_nilpotent(const Matrix& n);

}  // namespace lietower

#endif  // LIETOWER_POLYNOMIAL_HPP
