#include "lietower/lie_algebra.hpp"

#include <deque>
#include <set>

#include "lietower/errors.hpp"
#include "lietower/polynomial.hpp"

namespace lietower {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_names,
                       std::vector<BracketEntry> brackets)
    : name_(std::move(name)), names_(std::move(basis_names)) {
  const std::size_t n = names_.size();
  upper_.assign(n * (n > 0 ? n - 1 : 0) / 2, Vector(n));
  std::vector<bool> seen(upper_.size(), false);
  for (auto& b : brackets) {
    if (b.i >= b.j) throw InputError("bracket entries need i < j");
    if (b.j >= n) throw InputError("bracket index out of range");
    if (b.coeffs.size() != n) throw InputError("bracket coefficient vector has wrong length");
    const std::size_t idx = pair_index(b.i, b.j);
    if (seen[idx]) throw InputError("duplicate bracket entry");
    seen[idx] = true;
    upper_[idx] = std::move(b.coeffs);
  }
  ad_.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& c = upper_[pair_index(i, j)];
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(c[k]) == 0) continue;
        ad_[i](k, j) = c[k];
        ad_[j](k, i) = -c[k];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
        Vector jac = ad_[k] * bracket_basis(i, j);
        jac = jac + ad_[i] * bracket_basis(j, k);
        jac = jac + ad_[j] * bracket_basis(k, i);
        if (!is_zero(jac)) {
          throw JacobiError({i, j, k}, "Jacobi identity fails on (" + names_[i] +
                                           ", " + names_[j] + ", " + names_[k] + ")");
        }
      }
    }
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t n, std::string name) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  if (name.empty()) name = "abelian(" + std::to_string(n) + ")";
  return LieAlgebra(std::move(name), std::move(names), {});
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  const std::size_t n = names_.size();
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return Vector(dim());
  if (i < j) return upper_[pair_index(i, j)];
  return Scalar(-1) * upper_[pair_index(j, i)];
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    axpy(out, x[i], ad_[i] * y);
  }
  return out;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      const Vector& c = upper_[pair_index(i, j)];
      if (!is_zero(c)) out.push_back({i, j, c});
    }
  }
  return out;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

LieAlgebra validate_lie(std::string name, std::vector<std::string> basis_names,
                        std::vector<BracketEntry> brackets) {
  return LieAlgebra(std::move(name), std::move(basis_names), std::move(brackets));
}

std::vector<std::string> generic_names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

LieAlgebra algebra_from_brackets(
    std::string name, std::vector<std::string> names,
    const std::function<Vector(std::size_t, std::size_t)>& bracket_of) {
  const std::size_t n = names.size();
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector c = bracket_of(i, j);
      if (!is_zero(c)) entries.push_back({i, j, std::move(c)});
    }
  }
  return LieAlgebra(std::move(name), std::move(names), std::move(entries));
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p, std::string name) {
  auto inv = inverse(p);
  if (!inv || p.rows() != g.dim()) throw InputError("change of basis matrix is singular");
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < p.cols(); ++a) cols.push_back(p.column(a));
  if (name.empty()) name = g.name();
  return algebra_from_brackets(std::move(name), generic_names("y", g.dim()),
                  [&](std::size_t a, std::size_t b) {
                    return *inv * g.bracket(cols[a], cols[b]);
                  });
}

Matrix ad(const LieAlgebra& g, const Vector& x) {
  if (x.size() != g.dim()) throw InputError("vector length does not match algebra");
  Matrix m(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (sgn(x[i]) != 0) m += x[i] * g.ad_basis(i);
  }
  return m;
}

Subspace bracket_spaces(const LieAlgebra& g, const Subspace& a,
                        const Subspace& b) {
  RowReducer red(g.dim());
  for (const auto& u : a.vectors()) {
    const Matrix adu = ad(g, u);
    for (const auto& v : b.vectors()) red.add(adu * v);
  }
  return red.row_space();
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& w) {
  return w.contains(bracket_spaces(g, w, w));
}

bool is_ideal(const LieAlgebra& g, const Subspace& w) {
  return w.contains(bracket_spaces(g, Subspace::full(g.dim()), w));
}

LieAlgebra restrict_to(const LieAlgebra& g, const Subspace& w, std::string name) {
  if (w.ambient_dim() != g.dim()) throw InputError("ambient dimension mismatch");
  std::vector<std::string> names;
  for (std::size_t a = 0; a < w.dim(); ++a) {
    const Vector v = w.vector(a);
    std::size_t nonzero = 0;
    for (const auto& x : v) nonzero += sgn(x) != 0;
    names.push_back(nonzero == 1 ? g.basis_names()[w.pivots()[a]]
                                 : "w" + std::to_string(a + 1));
  }
  const auto vecs = w.vectors();
  if (!is_subalgebra(g, w)) throw InvariantError("subspace is not a subalgebra");
  return algebra_from_brackets(std::move(name), std::move(names), [&](std::size_t a, std::size_t b) {
    return w.coordinates(g.bracket(vecs[a], vecs[b]));
  });
}

Vector lift_from(const Subspace& w, const Vector& coords) { return w.combine(coords); }

Subspace lift_subspace(const Subspace& w, const Subspace& inner) {
  std::vector<Vector> rows;
  for (const auto& v : inner.vectors()) rows.push_back(w.combine(v));
  return Subspace::span(w.ambient_dim(), rows);
}

Subspace center(const LieAlgebra& g) {
  return centralizer(g, Subspace::full(g.dim()));
}

Subspace centralizer(const LieAlgebra& g, const Subspace& w) {
  const std::size_t n = g.dim();
  if (w.ambient_dim() != n) throw InputError("ambient dimension mismatch");
  RowReducer red(n);
  for (const auto& v : w.vectors()) {
    // column i is [e_i, v]
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(g.ad_basis(i) * v);
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = cols[i][k];
      red.add(std::move(row));
    }
  }
  return red.kernel();
}

Subspace normalizer(const LieAlgebra& g, const Subspace& w) {
  const std::size_t n = g.dim();
  if (w.ambient_dim() != n) throw InputError("ambient dimension mismatch");
  const Subspace ann = annihilator(w);
  RowReducer red(n);
  for (const auto& v : w.vectors()) {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(g.ad_basis(i) * v);
    for (const auto& a : ann.vectors()) {
      Vector row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = dot(a, cols[i]);
      red.add(std::move(row));
    }
  }
  return red.kernel();
}

std::vector<Subspace> series(const LieAlgebra& g, SeriesKind kind) {
  const Subspace full = Subspace::full(g.dim());
  std::vector<Subspace> out{full};
  for (;;) {
    const Subspace& cur = out.back();
    Subspace next = kind == SeriesKind::derived ? bracket_spaces(g, cur, cur)
                                                : bracket_spaces(g, full, cur);
    if (next == cur) break;
    out.push_back(std::move(next));
  }
  return out;
}

Subspace derived_algebra(const LieAlgebra& g) {
  const Subspace full = Subspace::full(g.dim());
  return bracket_spaces(g, full, full);
}

Subspace c_infty(const LieAlgebra& g) {
  return series(g, SeriesKind::lower_central).back();
}

KillingRadical killing_radical(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix kf(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      kf(i, j) = trace_product(g.ad_basis(i), g.ad_basis(j));
      kf(j, i) = kf(i, j);
    }
  }
  RowReducer red(n);
  for (const auto& w : derived_algebra(g).vectors()) red.add(kf * w);
  return {std::move(kf), red.kernel()};
}

Subspace radical(const LieAlgebra& g) { return killing_radical(g).radical; }

Subspace nilradical(const LieAlgebra& g) {
  const Subspace r = radical(g);
  if (r.is_zero()) return r;
  const LieAlgebra rad = restrict_to(g, r);
  const std::size_t d = rad.dim();

  // Associative closure of {ad_r x} with the identity adjoined.
  std::vector<Matrix> basis;
  RowReducer span(d * d);
  std::deque<std::size_t> pending;
  auto push = [&](Matrix m) {
    if (span.add(m.flatten())) {
      basis.push_back(std::move(m));
      pending.push_back(basis.size() - 1);
    }
  };
  push(Matrix::identity(d));
  while (!pending.empty()) {
    const std::size_t idx = pending.front();
    pending.pop_front();
    for (std::size_t i = 0; i < d; ++i) push(rad.ad_basis(i) * basis[idx]);
  }

  RowReducer red(d);
  for (const auto& b : basis) {
    Vector row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = trace_product(rad.ad_basis(i), b);
    red.add(std::move(row));
  }
  return lift_subspace(r, red.kernel());
}

AlgebraFlags classify_flags(const LieAlgebra& g) {
  AlgebraFlags f;
  const Subspace d = derived_algebra(g);
  const Subspace r = radical(g);
  f.perfect = d.is_full();
  f.abelian = d.is_zero();
  f.solvable = r.is_full();
  f.semisimple = r.is_zero();
  f.nilpotent = c_infty(g).is_zero();
  return f;
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw InputError("ambient dimension mismatch");
  if (!is_ideal(g, ideal)) throw InputError("quotient by a subspace that is not an ideal");
  const auto comp = ideal.complement_indices();
  const std::size_t q = comp.size();
  auto project = [&](const Vector& v) {
    const Vector red = ideal.reduce(v);
    Vector out(q);
    for (std::size_t a = 0; a < q; ++a) out[a] = red[comp[a]];
    return out;
  };
  std::vector<std::string> names;
  for (auto c : comp) names.push_back(g.basis_names()[c]);
  Matrix proj(q, g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    const Vector col = project(unit_vector(g.dim(), j));
    for (std::size_t a = 0; a < q; ++a) proj(a, j) = col[a];
  }
  LieAlgebra alg = algebra_from_brackets(g.name() + "/I", std::move(names),
                            [&](std::size_t a, std::size_t b) {
                              return project(g.bracket_basis(comp[a], comp[b]));
                            });
  return {std::move(alg), std::move(proj)};
}

LieAlgebra direct_product(const LieAlgebra& a, const LieAlgebra& b,
                          std::string name) {
  const std::size_t na = a.dim();
  const std::size_t n = na + b.dim();
  std::vector<std::string> names = a.basis_names();
  const std::set<std::string> left(names.begin(), names.end());
  bool clash = false;
  for (const auto& s : b.basis_names()) clash = clash || left.count(s) > 0;
  if (clash) {
    for (auto& s : names) s += "_1";
  }
  for (const auto& s : b.basis_names()) names.push_back(clash ? s + "_2" : s);
  std::vector<BracketEntry> entries;
  for (const auto& e : a.brackets()) {
    Vector c(n);
    for (std::size_t k = 0; k < na; ++k) c[k] = e.coeffs[k];
    entries.push_back({e.i, e.j, std::move(c)});
  }
  for (const auto& e : b.brackets()) {
    Vector c(n);
    for (std::size_t k = 0; k < b.dim(); ++k) c[na + k] = e.coeffs[k];
    entries.push_back({na + e.i, na + e.j, std::move(c)});
  }
  if (name.empty()) name = a.name() + "*" + b.name();
  return LieAlgebra(std::move(name), std::move(names), std::move(entries));
}

Subspace first_factor(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) rows.push_back(unit_vector(a.dim() + b.dim(), i));
  return Subspace::span(a.dim() + b.dim(), rows);
}

Subspace second_factor(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < b.dim(); ++i)
    rows.push_back(unit_vector(a.dim() + b.dim(), a.dim() + i));
  return Subspace::span(a.dim() + b.dim(), rows);
}

Subspace ideal_generated(const LieAlgebra& g, const Subspace& w) {
  const Subspace full = Subspace::full(g.dim());
  Subspace cur = w;
  for (;;) {
    Subspace next = subspace_sum(cur, bracket_spaces(g, full, cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_characteristic_ideal(const LieAlgebra& g, const Subspace& w,
                             const std::vector<Matrix>& ders) {
  if (!is_ideal(g, w)) throw InputError("subspace is not an ideal");
  for (const auto& d : ders) {
    for (const auto& v : w.vectors()) {
      if (!w.contains(d * v)) return false;
    }
  }
  return true;
}

Matrix inner_automorphism(const LieAlgebra& g, const Vector& x) {
  return exp_nilpotent(ad(g, x));
}

bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) return false;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(d.column(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = d * g.bracket_basis(i, j);
      const Vector rhs = g.bracket(images[i], unit_vector(n, j)) +
                         g.bracket(unit_vector(n, i), images[j]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to,
                     const Matrix& phi) {
  if (phi.rows() != to.dim() || phi.cols() != from.dim()) return false;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < from.dim(); ++i) images.push_back(phi.column(i));
  for (std::size_t i = 0; i < from.dim(); ++i) {
    for (std::size_t j = i + 1; j < from.dim(); ++j) {
      if (phi * from.bracket_basis(i, j) != to.bracket(images[i], images[j])) {
        return false;
      }
    }
  }
  return true;
}

Subspace apply(const Matrix& phi, const Subspace& w) {
  std::vector<Vector> rows;
  for (const auto& v : w.vectors()) rows.push_back(phi * v);
  return Subspace::span(phi.rows(), rows);
}

bool is_nilpotent_algebra(const LieAlgebra& g) { return c_infty(g).is_zero(); }

}  // namespace lietower
