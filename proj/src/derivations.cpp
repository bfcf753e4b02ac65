#include "lietower/derivations.hpp"

#include "lietower/errors.hpp"

namespace lietower {

namespace {

// {sum_a y_a space_a : sum_a y_a constraint[a] = 0}
Subspace constrained_combinations(const Subspace& space,
                                  const std::vector<Vector>& constraint) {
  const std::size_t len = constraint.empty() ? 0 : constraint.front().size();
  if (len == 0) return space;
  const Subspace ker = kernel(Matrix::from_columns(constraint, len));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < ker.dim(); ++i) out.push_back(space.combine(ker.vector(i)));
  return Subspace::span(space.ambient_dim(), out);
}

Vector concat(std::vector<Vector> parts) {
  Vector out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

Subspace matrix_span(const std::vector<Matrix>& maps, std::size_t n) {
  std::vector<Vector> flat;
  for (const Matrix& m : maps) flat.push_back(m.flatten());
  return Subspace::span(n * n, flat);
}

std::vector<Matrix> matrices_of(const Subspace& flat, std::size_t n) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < flat.dim(); ++i) {
    out.push_back(Matrix::unflatten(flat.vector(i), n));
  }
  return out;
}

Subspace matrix_normalizer(const Subspace& space, const Subspace& w,
                           std::size_t n) {
  const std::vector<Matrix> ws = matrices_of(w, n);
  std::vector<Vector> constraint;
  for (std::size_t a = 0; a < space.dim(); ++a) {
    const Matrix b = Matrix::unflatten(space.vector(a), n);
    std::vector<Vector> parts;
    for (const Matrix& x : ws) parts.push_back(w.reduce(commutator(b, x).flatten()));
    constraint.push_back(concat(std::move(parts)));
  }
  return constrained_combinations(space, constraint);
}

Subspace matrix_centralizer(const Subspace& space,
                            const std::vector<Matrix>& maps, std::size_t n) {
  std::vector<Vector> constraint;
  for (std::size_t a = 0; a < space.dim(); ++a) {
    const Matrix b = Matrix::unflatten(space.vector(a), n);
    std::vector<Vector> parts;
    for (const Matrix& x : maps) parts.push_back(commutator(b, x).flatten());
    constraint.push_back(concat(std::move(parts)));
  }
  return constrained_combinations(space, constraint);
}

Subspace DerivationSpace::inner() const {
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < ad_embedding.cols(); ++i) cols.push_back(ad_embedding.column(i));
  return Subspace::span(dim(), cols);
}

DerivationSpace derivation_space(const LieAlgebra& g, std::string name) {
  const std::size_t n = g.dim();
  // Unknown D(a, b), the e_a-coefficient of D e_b, sits at index a * n + b.
  RowReducer eqs(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(n * n);
        for (std::size_t l = 0; l < n; ++l) row[k * n + l] += g.constant(i, j, l);
        for (std::size_t a = 0; a < n; ++a) {
          row[a * n + i] -= g.constant(a, j, k);
          row[a * n + j] -= g.constant(i, a, k);
        }
        if (!is_zero(row)) eqs.add(std::move(row));
      }
    }
  }

  DerivationSpace out;
  out.algebra_dim = n;
  out.flat = eqs.kernel();
  out.basis = matrices_of(out.flat, n);
  const std::size_t d = out.basis.size();

  if (name.empty()) name = "Der(" + g.name() + ")";
  out.as_algebra = algebra_from_brackets(
      std::move(name), generic_names("d", d), [&](std::size_t a, std::size_t b) {
        return out.flat.coordinates(commutator(out.basis[a], out.basis[b]).flatten());
      });

  out.ad_embedding = Matrix(d, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector c = out.flat.coordinates(g.ad_basis(i).flatten());
    for (std::size_t a = 0; a < d; ++a) out.ad_embedding(a, i) = c[a];
  }
  return out;
}

GammaCentralizer der_gamma_centralizer(const LieAlgebra& g,
                                       const GammaTriple& t,
                                       const DerivationSpace& der) {
  const std::size_t n = g.dim();
  GammaCentralizer out;
  out.basis = matrices_of(matrix_centralizer(der.flat, t.gamma, n), n);

  for (const Matrix& d : out.basis) {
    if (!apply(d, t.s).is_zero() || !t.k.contains(apply(d, t.k)) ||
        !t.m.contains(apply(d, t.m))) {
      throw InvariantError("Gamma-centralizing derivation does not respect s + k + m");
    }
    out.theta.push_back(restricted_matrix(d, t.m));
  }

  if (center(g).is_zero()) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < t.s.dim(); ++i) all.push_back(ad(g, t.s.vector(i)).flatten());
    for (std::size_t i = 0; i < t.m.dim(); ++i) all.push_back(ad(g, t.m.vector(i)).flatten());
    for (const Matrix& d : out.basis) all.push_back(d.flatten());
    const Subspace sum = Subspace::span(n * n, all);
    if (all.size() != der.dim() || sum != der.flat) {
      throw InvariantError("Der g is not ad s + ad m + (Der g)^Gamma as a direct sum");
    }
    out.split_verified = true;
  }
  return out;
}

GammaCentralizer der_gamma_centralizer(const LieAlgebra& g,
                                       const GammaTriple& t) {
  return der_gamma_centralizer(g, t, derivation_space(g));
}

namespace {

// Matrix of a map on nhat (in nhat's coordinates) restricted to m, in m's
// basis.
Matrix restrict_through(const Matrix& d, const Subspace& nhat, const Subspace& m) {
  Matrix out(m.dim(), m.dim());
  for (std::size_t b = 0; b < m.dim(); ++b) {
    const Vector image = nhat.combine(d * nhat.coordinates(m.vector(b)));
    if (!m.contains(image)) throw InvariantError("derivation of nhat does not preserve m");
    const Vector c = m.coordinates(image);
    for (std::size_t a = 0; a < m.dim(); ++a) out(a, b) = c[a];
  }
  return out;
}

}  // namespace

BAlgebra b_algebra(const LieAlgebra& g, const GammaTriple& t, const MuRep& mu) {
  const std::size_t dm = t.m.dim();
  const Subspace& nhat = mu.nhat;
  const LieAlgebra n_alg = restrict_to(g, nhat, "nhat");
  const DerivationSpace der_n = derivation_space(n_alg);

  std::vector<Matrix> gamma_n;
  for (const Matrix& gm : t.gamma) gamma_n.push_back(restricted_matrix(gm, nhat));
  const std::vector<Matrix> cent =
      matrices_of(matrix_centralizer(der_n.flat, gamma_n, nhat.dim()), nhat.dim());

  std::vector<Matrix> restricted;
  for (const Matrix& d : cent) restricted.push_back(restrict_through(d, nhat, t.m));

  BAlgebra out;
  out.m_dim = dm;
  out.space = matrix_span(restricted, dm);
  if (out.space.dim() != cent.size()) {
    throw InvariantError("restriction of (Der nhat)^Gamma to m is not injective");
  }
  out.basis = matrices_of(out.space, dm);
  for (const Matrix& x : mu.mu) {
    if (!out.space.contains(x.flatten())) throw InvariantError("mu(k) is not contained in B");
  }
  return out;
}

PhiData phi_data(const LieAlgebra& g) {
  PhiData out;
  out.triple = gamma_triple(g);
  out.mu = mu_rep(g, out.triple);
  out.b = b_algebra(g, out.triple, out.mu);
  out.mu_k = matrix_span(out.mu.mu, out.triple.m.dim());
  return out;
}

LieAlgebra assemble_phi(const LieAlgebra& g, const GammaTriple& t,
                        const Subspace& nsub, std::string name) {
  const std::size_t ds = t.s.dim();
  const std::size_t dn = nsub.dim();
  const std::size_t dm = t.m.dim();
  const std::size_t total = ds + dn + dm;
  if (nsub.ambient_dim() != dm * dm) {
    throw InputError("nsub does not consist of maps on m");
  }
  const std::vector<Matrix> nmats = matrices_of(nsub, dm);
  const DirectSumSplitter split({t.s, t.k, t.m});

  std::vector<std::string> names = generic_names("s", ds);
  for (auto& x : generic_names("n", dn)) names.push_back(x);
  for (auto& x : generic_names("m", dm)) names.push_back(x);

  auto place = [&](Vector& out, std::size_t offset, const Vector& c) {
    for (std::size_t i = 0; i < c.size(); ++i) out[offset + i] = c[i];
  };

  auto bracket = [&](std::size_t a, std::size_t b) {
    Vector out(total);
    const bool a_s = a < ds, a_n = a >= ds && a < ds + dn;
    const bool b_n = b >= ds && b < ds + dn, b_m = b >= ds + dn;
    if (a_s && b < ds) {
      place(out, 0, t.s.coordinates(g.bracket(t.s.vector(a), t.s.vector(b))));
    } else if (a_s && b_m) {
      place(out, ds + dn,
            t.m.coordinates(g.bracket(t.s.vector(a), t.m.vector(b - ds - dn))));
    } else if (a_n && b_n) {
      const Matrix c = commutator(nmats[a - ds], nmats[b - ds]);
      if (!nsub.contains(c.flatten())) throw InputError("assembly failure: nsub is not closed");
      place(out, ds, nsub.coordinates(c.flatten()));
    } else if (a_n && b_m) {
      place(out, ds + dn, nmats[a - ds].column(b - ds - dn));
    } else if (!a_s && !a_n) {
      const Vector v = g.bracket(t.m.vector(a - ds - dn), t.m.vector(b - ds - dn));
      const std::vector<Vector> parts = split.components(v);
      if (!is_zero(parts[0])) throw InvariantError("[m, m] has a component in s");
      const Vector mu = mu_of(g, t, parts[1]).flatten();
      if (!nsub.contains(mu)) {
        throw InputError("assembly failure: mu of the k-part of [m, m] lies outside nsub");
      }
      place(out, ds, nsub.coordinates(mu));
      place(out, ds + dn, t.m.coordinates(parts[2]));
    }
    return out;
  };

  if (name.empty()) name = "Phi(" + g.name() + ")";
  return algebra_from_brackets(std::move(name), std::move(names), bracket);
}

Matrix phi_identification(const LieAlgebra& g, const GammaTriple& t,
                          const Subspace& nsub, const DerivationSpace& der,
                          const GammaCentralizer& cent) {
  const std::size_t ds = t.s.dim();
  const std::size_t dn = nsub.dim();
  const std::size_t dm = t.m.dim();
  Matrix psi(der.dim(), ds + dn + dm);
  auto put = [&](std::size_t col, const Matrix& d) {
    const Vector c = der.coordinates(d);
    for (std::size_t a = 0; a < c.size(); ++a) psi(a, col) = c[a];
  };

  std::vector<Vector> theta_cols;
  for (const Matrix& th : cent.theta) theta_cols.push_back(th.flatten());
  const Matrix theta = Matrix::from_columns(theta_cols, dm * dm);

  for (std::size_t i = 0; i < ds; ++i) put(i, ad(g, t.s.vector(i)));
  for (std::size_t j = 0; j < dn; ++j) {
    const SolveResult sol = solve(theta, nsub.vector(j));
    if (!sol.particular || !sol.kernel.is_zero()) {
      throw InvariantError("Theta is not invertible on nsub");
    }
    Matrix d(g.dim(), g.dim());
    for (std::size_t c = 0; c < cent.basis.size(); ++c) {
      d += (*sol.particular)[c] * cent.basis[c];
    }
    put(ds + j, d);
  }
  for (std::size_t l = 0; l < dm; ++l) put(ds + dn + l, ad(g, t.m.vector(l)));
  return psi;
}

CompletenessResult is_complete(const LieAlgebra& g, const DerivationSpace& der) {
  CompletenessResult out;
  out.der_dim = der.dim();
  out.center_trivial = center(g).is_zero();
  out.all_inner = der.dim() == g.dim() - center(g).dim();
  out.complete = out.center_trivial && out.all_inner;
  if (!out.center_trivial) {
    out.witness = "nonzero center";
  } else if (!out.all_inner) {
    out.witness = "outer derivations exist";
  }
  return out;
}

CompletenessResult is_complete(const LieAlgebra& g) {
  return is_complete(g, derivation_space(g));
}

CompletenessResult is_complete(const LieAlgebra& g, const PhiData& data) {
  CompletenessResult out = is_complete(g);
  if (data.center_trivial()) {
    const std::size_t dm = data.triple.m.dim();
    out.normalizer_criterion = matrix_normalizer(data.b.space, data.mu_k, dm) == data.mu_k;
    if (*out.normalizer_criterion != out.complete) {
      throw InvariantError("normalizer criterion disagrees with the derivation count");
    }
  }
  return out;
}

Hull complete_hull(const LieAlgebra& g, const PhiData& data) {
  Hull out;
  out.degenerate = data.triple.m.is_zero() && !data.triple.k.is_zero();
  out.algebra = assemble_phi(g, data.triple, data.b.space, "hull(" + g.name() + ")");
  if (!is_complete(out.algebra).complete) {
    throw InvariantError("s + B + m is not complete");
  }
  return out;
}

}  // namespace lietower
