#include "lietower/polynomial.hpp"

#include <algorithm>

#include "lietower/errors.hpp"

namespace lietower {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}); }

Polynomial Polynomial::t() { return Polynomial({Scalar(0), Scalar(1)}); }

Scalar Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Scalar(0);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = 1 / leading();
  return inv * *this;
}

Polynomial Polynomial::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d.push_back(Scalar(static_cast<long>(i)) * coeffs_[i]);
  }
  return Polynomial(std::move(d));
}

Matrix Polynomial::evaluate(const Matrix& m) const {
  Matrix acc(m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    if (sgn(*it) != 0) acc += *it * id;
  }
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) - b.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  std::vector<Scalar> c(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] += x[i] * y[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Scalar& c, const Polynomial& a) {
  std::vector<Scalar> out = a.coefficients();
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Scalar> rem = a.coefficients();
  const auto& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  std::vector<Scalar> q(rem.size() - db);
  const Scalar inv = 1 / b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Scalar c = rem[k + db] * inv;
    q[k] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * d[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
  return divmod(a, b).second;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return divmod(a * b, gcd(a, b)).first.monic();
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  // Extended Euclid tracking only the coefficient of a.
  Polynomial r0 = m;
  Polynomial r1 = a % m;
  Polynomial s0;
  Polynomial s1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) {
    throw InvariantError("polynomial is not invertible modulo the given modulus");
  }
  return (1 / r0.leading()) * s0 % m;
}

Polynomial compose_mod(const Polynomial& f, const Polynomial& g,
                       const Polynomial& m) {
  Polynomial acc;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = (acc * g + Polynomial::constant(*it)) % m;
  }
  return acc;
}

namespace {

// Minimal polynomial of A restricted to the cyclic space of v.
Polynomial local_minimal_polynomial(const Matrix& a, const Vector& v) {
  const std::size_t n = a.rows();
  std::vector<Vector> krylov{v};
  RowReducer red(n);
  red.add(v);
  Vector next = a * v;
  while (red.add(next)) {
    krylov.push_back(next);
    next = a * krylov.back();
  }
  SolveResult sol = solve(Matrix::from_columns(krylov, n), next);
  if (!sol.particular) throw InvariantError("Krylov dependency not found");
  std::vector<Scalar> coeffs(krylov.size() + 1);
  for (std::size_t i = 0; i < krylov.size(); ++i) coeffs[i] = -(*sol.particular)[i];
  coeffs.back() = 1;
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw InputError("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Polynomial acc = Polynomial::constant(1);
  for (std::size_t i = 0; i < n && acc.degree() < static_cast<long>(n); ++i) {
    const Vector e = unit_vector(n, i);
    if (acc.evaluate(m) * e == zero_vector(n)) continue;
    acc = lcm(acc, local_minimal_polynomial(m, e));
  }
  return acc;
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw InputError("squarefree part of the zero polynomial");
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

JordanChevalley jordan_chevalley(const Matrix& m) {
  if (!m.is_square()) throw InputError("Jordan decomposition of a non-square matrix");
  if (m.rows() == 0) return {m, m};
  const Polynomial p = minimal_polynomial(m);
  const Polynomial f = squarefree_part(p);
  const Polynomial df = f.derivative();
  Polynomial sigma = Polynomial::t() % p;
  // Quadratic convergence: at most ceil(log2(max multiplicity)) + 1 rounds.
  for (std::size_t round = 0; round <= m.rows(); ++round) {
    const Polynomial fs = compose_mod(f, sigma, p);
    if (fs.is_zero()) {
      Matrix s = sigma.evaluate(m);
      Matrix nil = m - s;
      return {std::move(s), std::move(nil)};
    }
    const Polynomial inv = inverse_mod(compose_mod(df, sigma, p), p);
    sigma = (sigma - fs * inv) % p;
  }
  throw InvariantError("Newton iteration for the semisimple part did not converge");
}

Matrix exp_nilpotent(const Matrix& n) {
  if (!n.is_square() || !is_nilpotent(n)) {
    throw InputError("exponential requested for a non-nilpotent matrix");
  }
  Matrix result = Matrix::identity(n.rows());
  Matrix term = Matrix::identity(n.rows());
  for (long k = 1; k <= static_cast<long>(n.rows()); ++k) {
    term = term * n;
    if (term.is_zero()) break;
    term *= Scalar(mpz_class(1), mpz_class(k));
    result += term;
  }
  return result;
}

}  // namespace lietower
