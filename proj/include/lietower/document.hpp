#ifndef LIETOWER_DOCUMENT_HPP
#define LIETOWER_DOCUMENT_HPP

// JSON formats. Algebra documents:
//
//   {"name": "aff1", "dim": 2, "basis": ["x", "y"],
//    "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "1"}}]}
//
// with 1-based indices and rationals written as "p" or "p/q" strings.

#include <json.hpp>

#include <string>
#include <string_view>

#include "lietower/derivations.hpp"
#include "lietower/lie_algebra.hpp"
#include "lietower/structure.hpp"
#include "lietower/tower.hpp"

namespace lietower {

using Json = nlohmann::ordered_json;

/// Throws ParseError (with line and column) on malformed JSON, InputError on
/// schema violations, JacobiError when the brackets are not a Lie algebra.
LieAlgebra parse_algebra(std::string_view text);
LieAlgebra algebra_from_json(const Json& doc);

/// Canonical form: brackets sorted by (i, j), coefficients by index, zeros
/// dropped, rationals in lowest terms.
Json algebra_to_json(const LieAlgebra& g);
std::string serialize_algebra(const LieAlgebra& g);

/// FNV-1a over the canonical serialization, as 16 hex digits.
std::string algebra_hash(const LieAlgebra& g);

Json to_json(const Scalar& x);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
/// Canonical RREF rows.
Json to_json(const Subspace& s);

Json analysis_json(const LieAlgebra& g);
Json gamma_triple_json(const LieAlgebra& g, const PhiData& data);
Json derivations_json(const LieAlgebra& g, const DerivationSpace& der);
Json hull_json(const Hull& hull);
Json tower_json(const TowerReport& report);

/// Top-level report with keys input, gamma_triple, derivations, tower,
/// version; sections not computed are null.
Json make_report(const LieAlgebra& g, Json analysis, Json gamma_triple,
                 Json derivations, Json tower);

/// Indented "key: value" rendering of any JSON tree. Scalar arrays stay on
/// one line, so the numbers match the JSON rendering token for token.
std::string render_text(const Json& doc);

}  // namespace lietower

#endif  // LIETOWER_DOCUMENT_HPP
