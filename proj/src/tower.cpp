#include "lietower/tower.hpp"

#include "lietower/errors.hpp"

namespace lietower {

NormalizerChain normalizer_tower(const BAlgebra& b, const Subspace& start) {
  if (!b.space.contains(start)) throw InputError("normalizer chain must start inside B");
  NormalizerChain out;
  out.members.push_back(start);
  while (true) {
    Subspace next = matrix_normalizer(b.space, out.members.back(), b.m_dim);
    if (next == out.members.back()) break;
    if (!next.contains(out.members.back())) {
      throw InvariantError("normalizer chain is not increasing");
    }
    out.members.push_back(std::move(next));
  }
  out.stable_index = out.members.size() - 1;
  return out;
}

namespace {

GhatResult ghat_from(const LieAlgebra& g, const PhiData& data) {
  GhatResult out;
  out.chain = normalizer_tower(data.b, data.mu_k);
  out.s_dim = data.triple.s.dim();
  out.m_dim = data.triple.m.dim();
  out.b_dim = data.b.space.dim();
  for (const Subspace& w : out.chain.members) {
    out.level_dims.push_back(out.s_dim + w.dim() + out.m_dim);
  }
  out.ghat = assemble_phi(g, data.triple, out.chain.members.back(),
                          "ghat(" + g.name() + ")");

  LieAlgebra cur = g;
  for (std::size_t n = 0; n < out.level_dims.size(); ++n) {
    if (cur.dim() != out.level_dims[n]) {
      throw InvariantError("normalizer level " + std::to_string(n) +
                           " disagrees with the derivation tower");
    }
    if (n + 1 < out.level_dims.size()) cur = derivation_space(cur).as_algebra;
  }
  if (!is_complete(out.ghat).complete) throw InvariantError("ghat is not complete");
  return out;
}

SchenkmanBound bound_from(const LieAlgebra& g, const GhatResult& gh) {
  const LieAlgebra c = restrict_to(g, c_infty(g), "C^inf");
  SchenkmanBound out;
  out.bound = derivation_space(c).dim() + center(c).dim();
  out.ghat_dim = gh.ghat.dim();
  out.hull_dim = gh.s_dim + gh.b_dim + gh.m_dim;
  out.holds = out.ghat_dim <= out.bound && out.hull_dim <= out.bound;
  return out;
}

void require_trivial_center(const LieAlgebra& g, const char* what) {
  if (!center(g).is_zero()) {
    throw InputError(std::string(what) + " requires trivial center");
  }
}

}  // namespace

GhatResult ghat_trivial_center(const LieAlgebra& g) {
  require_trivial_center(g, "ghat");
  return ghat_from(g, phi_data(g));
}

SchenkmanBound schenkman_bound(const LieAlgebra& g) {
  require_trivial_center(g, "Schenkman bound");
  return bound_from(g, ghat_trivial_center(g));
}

std::string to_string(TowerCase c) {
  switch (c) {
    case TowerCase::case1_complete: return "case1_complete";
    case TowerCase::case2_K_times_perfect: return "case2_K_times_perfect";
    case TowerCase::case3_divergent_suspected: return "case3_divergent_suspected";
    case TowerCase::undetermined: return "undetermined";
  }
  return "undetermined";
}

TowerReport tower_iterate(const LieAlgebra& g, std::size_t max_steps,
                          FastPath fast_path) {
  if (max_steps == 0) throw InputError("max_steps must be at least 1");
  TowerReport out;
  bool decided = false;
  LieAlgebra cur = g;
  for (std::size_t step = 0; step < max_steps && !decided; ++step) {
    const DerivationSpace der = derivation_space(cur);
    const Subspace z = center(cur);
    const Subspace dg = derived_algebra(cur);
    TowerStep rec;
    rec.dim = cur.dim();
    rec.center_dim = z.dim();
    rec.radical_dim = radical(cur).dim();
    rec.nilradical_dim = nilradical(cur).dim();
    rec.derived_codim = cur.dim() - dg.dim();
    rec.der_dim = der.dim();
    rec.complete = z.is_zero() && der.dim() == cur.dim();
    out.steps.push_back(rec);
    if (der.dim() < cur.dim()) out.dimension_decrease = true;

    if (rec.complete) {
      out.kind = TowerCase::case1_complete;
      decided = true;
    } else if (der.dim() == cur.dim() && z.dim() == 1 &&
               subspace_intersect(z, dg).is_zero() && z.dim() + dg.dim() == cur.dim()) {
      const LieAlgebra a = restrict_to(cur, dg);
      if (derived_algebra(a).is_full() && is_complete(a).complete) {
        out.kind = TowerCase::case2_K_times_perfect;
        decided = true;
      }
    }
    if (decided) {
      out.terminal = cur;
    } else {
      cur = der.as_algebra;
    }
  }

  if (!decided) {
    const auto& s = out.steps;
    const std::size_t k = s.size();
    const bool rising = k >= 3 && s[k - 3].dim < s[k - 2].dim && s[k - 2].dim < s[k - 1].dim;
    out.kind = rising ? TowerCase::case3_divergent_suspected : TowerCase::undetermined;
  }

  const bool trivial_center = out.steps.front().center_dim == 0;
  if (fast_path == FastPath::on && !trivial_center) {
    throw InputError("fast path requires trivial center");
  }
  if (fast_path != FastPath::off && trivial_center) {
    const GhatResult gh = ghat_from(g, phi_data(g));
    out.q = gh.chain.stable_index;
    out.ghat_dim = gh.ghat.dim();
    for (std::size_t n = 0; n < gh.level_dims.size() && n < out.steps.size(); ++n) {
      if (gh.level_dims[n] != out.steps[n].dim) {
        throw InvariantError("fast path and direct tower disagree at step " + std::to_string(n));
      }
    }
    if (out.kind == TowerCase::case1_complete && out.terminal->dim() != gh.ghat.dim()) {
      throw InvariantError("fast path and direct tower end at different dimensions");
    }
    out.bound = bound_from(g, gh);
  }
  return out;
}

ProductSplit product_der_split(const LieAlgebra& g1, const LieAlgebra& g2) {
  // Maps from a to Z(b) vanishing on [a, a]; unknown phi(r, c) at r * dim a + c.
  auto cross_maps = [](const LieAlgebra& a, const LieAlgebra& b) -> std::size_t {
    const std::size_t n = a.dim();
    const std::size_t z = center(b).dim();
    const Subspace da = derived_algebra(a);
    RowReducer eqs(z * n);
    for (std::size_t v = 0; v < da.dim(); ++v) {
      const Vector x = da.vector(v);
      for (std::size_t r = 0; r < z; ++r) {
        Vector row(z * n);
        for (std::size_t c = 0; c < n; ++c) row[r * n + c] = x[c];
        eqs.add(std::move(row));
      }
    }
    return z * n - eqs.rank();
  };

  ProductSplit out;
  out.der1 = derivation_space(g1).dim();
  out.der2 = derivation_space(g2).dim();
  out.i12 = cross_maps(g1, g2);
  out.i21 = cross_maps(g2, g1);
  out.total = derivation_space(direct_product(g1, g2)).dim();
  return out;
}

}  // namespace lietower
