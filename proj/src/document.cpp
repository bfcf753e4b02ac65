#include "lietower/document.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>

#include "lietower/errors.hpp"

namespace lietower {

namespace {

const Json& field(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(where + ": missing field '" + key + "'");
  return *it;
}

std::size_t index_field(const Json& obj, const char* key, std::size_t dim,
                        const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_number_integer()) throw InputError(where + ": '" + key + "' must be an integer");
  const auto x = v.get<long long>();
  if (x < 1 || static_cast<unsigned long long>(x) > dim) {
    throw InputError(where + ": index " + std::to_string(x) + " out of range 1.." +
                     std::to_string(dim));
  }
  return static_cast<std::size_t>(x - 1);
}

std::size_t parse_index_key(const std::string& key, std::size_t dim, const std::string& where) {
  bool ok = !key.empty() && key.size() <= 9 && key[0] != '0';
  for (char ch : key) ok = ok && ch >= '0' && ch <= '9';
  if (!ok) throw InputError(where + ": coefficient key '" + key + "' is not an index");
  const std::size_t k = std::stoul(key);
  if (k < 1 || k > dim) throw InputError(where + ": index " + key + " out of range");
  return k - 1;
}

}  // namespace

LieAlgebra algebra_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("algebra document must be a JSON object");
  const Json& name = field(doc, "name", "document");
  if (!name.is_string()) throw InputError("document: 'name' must be a string");
  const Json& dim_j = field(doc, "dim", "document");
  if (!dim_j.is_number_unsigned() && !(dim_j.is_number_integer() && dim_j.get<long long>() >= 0)) {
    throw InputError("document: 'dim' must be a nonnegative integer");
  }
  const auto dim = dim_j.get<std::size_t>();
  if (dim > 4096) throw InputError("document: 'dim' is unreasonably large");

  const Json& basis_j = field(doc, "basis", "document");
  if (!basis_j.is_array() || basis_j.size() != dim) {
    throw InputError("document: 'basis' must list exactly dim labels");
  }
  std::vector<std::string> basis;
  for (const Json& b : basis_j) {
    if (!b.is_string()) throw InputError("document: basis labels must be strings");
    basis.push_back(b.get<std::string>());
  }

  const Json& br = field(doc, "brackets", "document");
  if (!br.is_array()) throw InputError("document: 'brackets' must be an array");
  std::vector<BracketEntry> entries;
  for (std::size_t e = 0; e < br.size(); ++e) {
    const std::string where = "brackets[" + std::to_string(e) + "]";
    const Json& entry = br[e];
    if (!entry.is_object()) throw InputError(where + ": must be an object");
    const std::size_t i = index_field(entry, "i", dim, where);
    const std::size_t j = index_field(entry, "j", dim, where);
    if (i >= j) throw InputError(where + ": needs i < j");
    const Json& coeffs = field(entry, "coeffs", where);
    if (!coeffs.is_object()) throw InputError(where + ": 'coeffs' must be an object");
    Vector c(dim);
    for (const auto& [key, value] : coeffs.items()) {
      const std::size_t k = parse_index_key(key, dim, where);
      if (!value.is_string()) {
        throw InputError(where + ": coefficient " + key + " must be a rational string");
      }
      c[k] = parse_scalar(value.get<std::string>());
    }
    entries.push_back({i, j, std::move(c)});
  }
  return LieAlgebra(name.get<std::string>(), std::move(basis), std::move(entries));
}

LieAlgebra parse_algebra(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t p = 0; p < stop; ++p) {
      if (text[p] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, "syntax error at line " + std::to_string(line) + ", column " +
                                    std::to_string(col));
  }
  return algebra_from_json(doc);
}

Json to_json(const Scalar& x) { return to_string(x); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const Scalar& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Subspace& s) {
  Json out = Json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(to_json(s.vector(r)));
  return out;
}

Json algebra_to_json(const LieAlgebra& g) {
  Json doc;
  doc["name"] = g.name();
  doc["dim"] = g.dim();
  doc["basis"] = g.basis_names();
  Json br = Json::array();
  for (const BracketEntry& e : g.brackets()) {
    Json coeffs = Json::object();
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
      if (sgn(e.coeffs[k]) != 0) coeffs[std::to_string(k + 1)] = to_string(e.coeffs[k]);
    }
    Json entry;
    entry["i"] = e.i + 1;
    entry["j"] = e.j + 1;
    entry["coeffs"] = std::move(coeffs);
    br.push_back(std::move(entry));
  }
  doc["brackets"] = std::move(br);
  return doc;
}

std::string serialize_algebra(const LieAlgebra& g) { return algebra_to_json(g).dump(2) + "\n"; }

std::string algebra_hash(const LieAlgebra& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_algebra(g)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

Json series_json(const std::vector<Subspace>& members) {
  Json out = Json::array();
  for (const Subspace& s : members) out.push_back(s.dim());
  return out;
}

Json matrices_json(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const Matrix& m : ms) out.push_back(to_json(m));
  return out;
}

}  // namespace

Json analysis_json(const LieAlgebra& g) {
  const AlgebraFlags f = classify_flags(g);
  Json out;
  out["flags"] = {{"solvable", f.solvable}, {"nilpotent", f.nilpotent},
                  {"semisimple", f.semisimple}, {"perfect", f.perfect},
                  {"abelian", f.abelian}};
  out["center"] = to_json(center(g));
  out["derived_series_dims"] = series_json(series(g, SeriesKind::derived));
  out["lower_central_series_dims"] = series_json(series(g, SeriesKind::lower_central));
  out["c_infty"] = to_json(c_infty(g));
  out["radical"] = to_json(radical(g));
  out["nilradical"] = to_json(nilradical(g));
  out["levi"] = to_json(levi_subalgebra(g));
  return out;
}

Json gamma_triple_json(const LieAlgebra& g, const PhiData& data) {
  const GammaTriple& t = data.triple;
  (void)g;
  Json out;
  out["s"] = to_json(t.s);
  out["k"] = to_json(t.k);
  out["m"] = to_json(t.m);
  out["h"] = to_json(t.h);
  out["gamma"] = matrices_json(t.gamma);
  out["mu"] = matrices_json(data.mu.mu);
  out["mu_injective"] = data.mu.injective;
  out["ker_mu"] = to_json(data.mu.ker_mu);
  out["nhat"] = to_json(data.mu.nhat);
  out["b_dim"] = data.b.space.dim();
  out["b_basis"] = matrices_json(data.b.basis);
  return out;
}

Json derivations_json(const LieAlgebra& g, const DerivationSpace& der) {
  const CompletenessResult c = is_complete(g, der);
  Json out;
  out["dim"] = der.dim();
  out["inner_dim"] = der.inner().dim();
  out["all_inner"] = c.all_inner;
  out["complete"] = c.complete;
  if (!c.witness.empty()) out["witness"] = c.witness;
  out["basis"] = matrices_json(der.basis);
  out["ad_embedding"] = to_json(der.ad_embedding);
  return out;
}

Json hull_json(const Hull& hull) {
  Json out;
  out["dim"] = hull.algebra.dim();
  out["degenerate"] = hull.degenerate;
  out["complete"] = true;
  out["algebra"] = algebra_to_json(hull.algebra);
  return out;
}

Json tower_json(const TowerReport& report) {
  Json out;
  Json dims = Json::array();
  Json steps = Json::array();
  for (const TowerStep& s : report.steps) {
    dims.push_back(s.dim);
    steps.push_back({{"dim", s.dim},
                     {"center_dim", s.center_dim},
                     {"radical_dim", s.radical_dim},
                     {"nilradical_dim", s.nilradical_dim},
                     {"derived_codim", s.derived_codim},
                     {"der_dim", s.der_dim},
                     {"complete", s.complete}});
  }
  out["case"] = to_string(report.kind);
  out["dims"] = std::move(dims);
  out["steps"] = std::move(steps);
  out["dimension_decrease"] = report.dimension_decrease;
  out["q"] = report.q ? Json(*report.q) : Json(nullptr);
  out["ghat_dim"] = report.ghat_dim ? Json(*report.ghat_dim) : Json(nullptr);
  if (report.bound) {
    out["schenkman"] = {{"bound", report.bound->bound},
                        {"ghat_dim", report.bound->ghat_dim},
                        {"hull_dim", report.bound->hull_dim},
                        {"holds", report.bound->holds}};
  } else {
    out["schenkman"] = nullptr;
  }
  out["terminal"] = report.terminal ? algebra_to_json(*report.terminal) : Json(nullptr);
  return out;
}

Json make_report(const LieAlgebra& g, Json analysis, Json gamma_triple,
                 Json derivations, Json tower) {
  Json input;
  input["name"] = g.name();
  input["dim"] = g.dim();
  input["basis"] = g.basis_names();
  input["hash"] = algebra_hash(g);
  if (!analysis.is_null()) input["analysis"] = std::move(analysis);
  Json out;
  out["input"] = std::move(input);
  out["gamma_triple"] = std::move(gamma_triple);
  out["derivations"] = std::move(derivations);
  out["tower"] = std::move(tower);
  out["version"] = LIETOWER_VERSION;
  return out;
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  return std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string flat_text(const Json& j) {
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += scalar_text(j[i]);
  }
  return out + "]";
}

void render(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_primitive()) {
        os << pad << key << ": " << scalar_text(value) << "\n";
      } else if (is_flat(value)) {
        os << pad << key << ": " << flat_text(value) << "\n";
      } else if (value.empty()) {
        os << pad << key << ": " << (value.is_array() ? "[]" : "{}") << "\n";
      } else {
        os << pad << key << ":\n";
        render(os, value, depth + 1);
      }
    }
  } else if (j.is_array()) {
    for (const Json& x : j) {
      if (x.is_primitive()) {
        os << pad << "- " << scalar_text(x) << "\n";
      } else if (is_flat(x)) {
        os << pad << "- " << flat_text(x) << "\n";
      } else {
        os << pad << "-\n";
        render(os, x, depth + 1);
      }
    }
  } else {
    os << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(os, doc, 0);
  return os.str();
}

}  // namespace lietower
