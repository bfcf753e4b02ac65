#include "lietower/catalog.hpp"

#include <cctype>

#include "lietower/errors.hpp"

namespace lietower {

namespace {

// Brackets given 1-based with integer coefficients, as in the tables above.
struct Term {
  std::size_t i, j, k;
  long c;
};

LieAlgebra from_terms(std::string name, std::vector<std::string> basis,
                      const std::vector<Term>& terms) {
  const std::size_t n = basis.size();
  std::vector<BracketEntry> entries;
  for (const Term& t : terms) {
    BracketEntry* e = nullptr;
    for (auto& x : entries) {
      if (x.i == t.i - 1 && x.j == t.j - 1) e = &x;
    }
    if (e == nullptr) {
      entries.push_back({t.i - 1, t.j - 1, zero_vector(n)});
      e = &entries.back();
    }
    e->coeffs[t.k - 1] = t.c;
  }
  return LieAlgebra(std::move(name), std::move(basis), std::move(entries));
}

LieAlgebra base_algebra(const std::string& name) {
  if (name == "aff1") return from_terms(name, {"x", "y"}, {{1, 2, 2, 1}});
  if (name == "heis3") return from_terms(name, {"x", "y", "z"}, {{1, 2, 3, 1}});
  if (name == "sl2") {
    return from_terms(name, {"h", "e", "f"}, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}});
  }
  if (name == "paper5") {
    return from_terms(name, {"x1", "x2", "x3", "x4", "x5"},
                      {{1, 2, 5, 1}, {1, 3, 3, 1}, {1, 4, 4, -1}, {3, 4, 5, 1}});
  }
  if (name == "diag12") {
    return from_terms(name, {"a", "v1", "v2"}, {{1, 2, 2, 1}, {1, 3, 3, 2}});
  }
  if (name == "sl2_ltimes_q2") {
    return from_terms(name, {"h", "e", "f", "v1", "v2"},
                      {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1},
                       {1, 4, 4, 1}, {1, 5, 5, -1}, {2, 5, 4, 1}, {3, 4, 5, 1}});
  }
  if (name == "jordan2") {
    return from_terms(name, {"x", "v1", "v2"}, {{1, 2, 2, 1}, {1, 3, 2, 1}, {1, 3, 3, 1}});
  }
  const std::string prefix = "abelian(";
  if (name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
      name.back() == ')') {
    const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    bool ok = !digits.empty() && digits.size() <= 3;
    for (char ch : digits) ok = ok && std::isdigit(static_cast<unsigned char>(ch));
    if (ok) return LieAlgebra::abelian(std::stoul(digits), name);
  }
  throw InputError("unknown catalog algebra '" + name + "'");
}

}  // namespace

LieAlgebra catalog(const std::string& name) {
  const std::size_t star = name.rfind('*');
  if (star == std::string::npos) return base_algebra(name);
  return direct_product(catalog(name.substr(0, star)), base_algebra(name.substr(star + 1)),
                        name);
}

std::vector<std::string> catalog_names() {
  return {"abelian(1)", "abelian(2)", "abelian(3)", "aff1", "heis3", "sl2",
          "paper5", "diag12", "sl2_ltimes_q2", "jordan2", "aff1*aff1", "sl2*aff1"};
}

}  // namespace lietower
