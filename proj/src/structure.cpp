#include "lietower/structure.hpp"

#include "lietower/errors.hpp"
#include "lietower/polynomial.hpp"

namespace lietower {

namespace {

Matrix stack_rows(const std::vector<Matrix>& maps, std::size_t n) {
  std::vector<Vector> rows;
  for (const Matrix& m : maps) {
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  }
  return Matrix::from_rows(rows, n);
}

Subspace image_of_maps(const std::vector<Matrix>& maps, const Subspace& w) {
  const std::size_t n = w.ambient_dim();
  std::vector<Vector> out;
  for (const Matrix& m : maps) {
    for (std::size_t b = 0; b < w.dim(); ++b) out.push_back(m * w.vector(b));
  }
  return Subspace::span(n, out);
}

bool is_semisimple_matrix(const Matrix& m) {
  const Polynomial p = minimal_polynomial(m);
  return squarefree_part(p) == p;
}

}  // namespace

Subspace levi_subalgebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const Subspace r = radical(g);
  if (r.is_full()) return Subspace::zero(n);
  if (r.is_zero()) return Subspace::full(n);

  const std::vector<std::size_t> comp = r.complement_indices();
  const std::size_t d = comp.size();

  // Structure constants of g/r in the basis of the complement unit vectors.
  // c[a][b][e] for a < b.
  auto project = [&](const Vector& v) {
    const Vector red = r.reduce(v);
    Vector out(d);
    for (std::size_t e = 0; e < d; ++e) out[e] = red[comp[e]];
    return out;
  };
  std::vector<std::vector<Vector>> c(d, std::vector<Vector>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      c[a][b] = project(g.bracket_basis(comp[a], comp[b]));
    }
  }

  std::vector<Vector> lifts;
  for (std::size_t a = 0; a < d; ++a) lifts.push_back(unit_vector(n, comp[a]));

  auto error_of = [&](std::size_t a, std::size_t b) {
    Vector err = g.bracket(lifts[a], lifts[b]);
    for (std::size_t e = 0; e < d; ++e) {
      if (sgn(c[a][b][e]) != 0) axpy(err, -c[a][b][e], lifts[e]);
    }
    return err;
  };

  std::vector<Subspace> derived{r};
  while (!derived.back().is_zero()) {
    derived.push_back(bracket_spaces(g, derived.back(), derived.back()));
    if (derived.back() == derived[derived.size() - 2]) {
      throw InvariantError("radical is not solvable");
    }
  }

  for (std::size_t stage = 0; stage + 1 < derived.size(); ++stage) {
    const Subspace& cur = derived[stage];
    const Subspace& next = derived[stage + 1];
    bool done = true;
    for (std::size_t a = 0; a < d && done; ++a) {
      for (std::size_t b = a + 1; b < d && done; ++b) {
        if (!next.contains(error_of(a, b))) done = false;
      }
    }
    if (done) continue;

    // Unknown t_a = sum_l y(a, l) rho_l with rho the basis of the current
    // member; column index a * p + l.
    const std::size_t p = cur.dim();
    const std::size_t pairs = d * (d - 1) / 2;
    Matrix sys(pairs * n, d * p);
    Vector rhs(pairs * n);
    std::size_t row = 0;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b, row += n) {
        auto put = [&](std::size_t col, const Vector& v) {
          const Vector red = next.reduce(v);
          for (std::size_t i = 0; i < n; ++i) sys(row + i, col) += red[i];
        };
        for (std::size_t l = 0; l < p; ++l) {
          const Vector rho = cur.vector(l);
          put(b * p + l, g.bracket(lifts[a], rho));
          put(a * p + l, g.bracket(rho, lifts[b]));
          for (std::size_t e = 0; e < d; ++e) {
            if (sgn(c[a][b][e]) != 0) put(e * p + l, -c[a][b][e] * rho);
          }
        }
        const Vector err = next.reduce(error_of(a, b));
        for (std::size_t i = 0; i < n; ++i) rhs[row + i] = -err[i];
      }
    }
    const SolveResult sol = solve(sys, rhs);
    if (!sol.particular) {
      throw InvariantError("Levi correction equations are inconsistent");
    }
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t l = 0; l < p; ++l) {
        const Scalar& y = (*sol.particular)[a * p + l];
        if (sgn(y) != 0) axpy(lifts[a], y, cur.vector(l));
      }
    }
  }

  const Subspace s = Subspace::span(n, lifts);
  if (s.dim() != d || !is_subalgebra(g, s) ||
      !subspace_intersect(s, r).is_zero()) {
    throw InvariantError("Levi subalgebra construction failed");
  }
  return s;
}

Subspace nilpotent_supplement(const LieAlgebra& q) {
  const std::size_t n = q.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& a = q.ad_basis(i);
    if (is_nilpotent(a)) continue;
    const Matrix semi = jordan_chevalley(a).semisimple;
    // (ad x)_S is a derivation, so its kernel is a subalgebra containing x.
    const Subspace ker = kernel(semi);
    const LieAlgebra sub = restrict_to(q, ker);
    return lift_subspace(ker, nilpotent_supplement(sub));
  }
  return Subspace::full(n);
}

McrGamma mcr_gamma(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  McrGamma out;
  out.s = levi_subalgebra(g);
  const Subspace r = radical(g);
  const Subspace q = subspace_intersect(centralizer(g, out.s), r);
  out.h = lift_subspace(q, nilpotent_supplement(restrict_to(g, q)));

  RowReducer seen(n * n);
  for (std::size_t i = 0; i < out.s.dim(); ++i) {
    Matrix a = ad(g, out.s.vector(i));
    seen.add(a.flatten());
    out.gamma.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < out.h.dim(); ++i) {
    Matrix semi = jordan_chevalley(ad(g, out.h.vector(i))).semisimple;
    if (semi.is_zero() || !seen.add(semi.flatten())) continue;
    out.gamma.push_back(std::move(semi));
    ++out.toral_count;
  }

  const std::size_t first_toral = out.gamma.size() - out.toral_count;
  for (std::size_t i = 0; i < out.gamma.size(); ++i) {
    if (!is_derivation(g, out.gamma[i])) {
      throw InvariantError("Gamma element is not a derivation");
    }
    if (i < first_toral) continue;
    if (!is_semisimple_matrix(out.gamma[i])) {
      throw InvariantError("toral Gamma element is not semisimple");
    }
    for (std::size_t j = 0; j < out.gamma.size(); ++j) {
      if (!commutator(out.gamma[i], out.gamma[j]).is_zero()) {
        throw InvariantError("toral Gamma element does not commute with Gamma");
      }
    }
  }
  return out;
}

GammaSplit gamma_split(const LieAlgebra& g, const std::vector<Matrix>& gamma) {
  const std::size_t n = g.dim();
  GammaSplit out;
  out.fixed = gamma.empty() ? Subspace::full(n) : kernel(stack_rows(gamma, n));
  out.image = image_of_maps(gamma, Subspace::full(n));
  if (out.fixed.dim() + out.image.dim() != n ||
      !subspace_intersect(out.fixed, out.image).is_zero()) {
    throw InvariantError("g is not the direct sum of Gamma-fixed points and Gamma.g");
  }
  return out;
}

TripleCheck check_triple_axioms(const LieAlgebra& g, const Subspace& s,
                                const Subspace& k, const Subspace& m) {
  TripleCheck out;
  const std::size_t n = g.dim();
  const Subspace r = radical(g);

  out.levi = is_subalgebra(g, s) && subspace_intersect(s, r).is_zero() &&
             s.dim() + r.dim() == n;
  if (!out.levi) out.failure = "s is not a Levi subalgebra";

  out.nilpotent_part = is_subalgebra(g, k) &&
                       is_nilpotent_algebra(restrict_to(g, k)) &&
                       bracket_spaces(g, s, k).is_zero();
  if (!out.nilpotent_part && out.failure.empty()) {
    out.failure = "k is not a nilpotent subalgebra centralizing s";
  }

  const Subspace sk = subspace_sum(s, k);
  out.radical_split = r.contains(k) && r.contains(m) &&
                      subspace_intersect(k, m).is_zero() &&
                      k.dim() + m.dim() == r.dim() &&
                      bracket_spaces(g, sk, m) == m;
  if (!out.radical_split && out.failure.empty()) {
    out.failure = "r is not k + m with [s + k, m] = m";
  }

  out.direct_sum = s.dim() + k.dim() + m.dim() == n &&
                   subspace_sum(sk, m).is_full();
  if (!out.direct_sum && out.failure.empty()) {
    out.failure = "g is not the direct sum s + k + m";
  }
  return out;
}

GammaTriple gamma_triple(const LieAlgebra& g) {
  McrGamma mg = mcr_gamma(g);
  const GammaSplit split = gamma_split(g, mg.gamma);
  GammaTriple t;
  t.s = mg.s;
  t.k = split.fixed;
  t.m = image_of_maps(mg.gamma, radical(g));
  t.gamma = std::move(mg.gamma);
  t.h = mg.h;

  const TripleCheck check = check_triple_axioms(g, t.s, t.k, t.m);
  if (!check.ok()) throw InvariantError("Gamma-triple: " + check.failure);
  for (const Matrix& gm : t.gamma) {
    if (!t.s.contains(apply(gm, t.s))) {
      throw InvariantError("Gamma-triple: Gamma does not preserve s");
    }
  }
  return t;
}

GammaTriple push_forward(const GammaTriple& t, const Matrix& phi) {
  const auto inv = inverse(phi);
  if (!inv) throw InputError("push_forward needs an invertible map");
  GammaTriple out;
  out.s = apply(phi, t.s);
  out.k = apply(phi, t.k);
  out.m = apply(phi, t.m);
  out.h = apply(phi, t.h);
  for (const Matrix& gm : t.gamma) out.gamma.push_back(phi * gm * *inv);
  return out;
}

Matrix mu_of(const LieAlgebra& g, const GammaTriple& t, const Vector& x) {
  if (!t.k.contains(x)) throw InputError("mu is only defined on k");
  return restricted_matrix(ad(g, x), t.m);
}

MuRep mu_rep(const LieAlgebra& g, const GammaTriple& t) {
  const std::size_t n = g.dim();
  const std::size_t dm = t.m.dim();
  MuRep out;
  for (std::size_t a = 0; a < t.k.dim(); ++a) {
    out.mu.push_back(restricted_matrix(ad(g, t.k.vector(a)), t.m));
  }

  out.nhat = subspace_sum(t.m, bracket_spaces(g, t.m, t.m));
  if (out.nhat != subspace_intersect(c_infty(g), nilradical(g))) {
    throw InvariantError("m + [m, m] differs from C^inf(g) cap nilradical");
  }
  if (!is_ideal(g, out.nhat) || !is_nilpotent_algebra(restrict_to(g, out.nhat))) {
    throw InvariantError("m + [m, m] is not a nilpotent ideal");
  }

  // Kernel of y -> sum_a y_a mu_a, lifted to g through k's basis.
  std::vector<Vector> cols;
  for (const Matrix& m : out.mu) cols.push_back(m.flatten());
  const Subspace coeffs = kernel(Matrix::from_columns(cols, dm * dm));
  std::vector<Vector> ker;
  for (std::size_t i = 0; i < coeffs.dim(); ++i) {
    ker.push_back(t.k.combine(coeffs.vector(i)));
  }
  out.ker_mu = Subspace::span(n, ker);
  out.injective = out.ker_mu.is_zero();

  const Subspace zk = lift_subspace(t.k, center(restrict_to(g, t.k)));
  const Subspace zg = center(g);
  if (subspace_intersect(zk, out.ker_mu) != zg) {
    throw InvariantError("Z(k) cap ker mu differs from Z(g)");
  }
  if (out.injective != zg.is_zero()) {
    throw InvariantError("mu injectivity disagrees with Z(g) = 0");
  }
  return out;
}

}  // namespace lietower
