#ifndef LIETOWER_CATALOG_HPP
#define LIETOWER_CATALOG_HPP

#include <string>
#include <vector>

#include "lietower/lie_algebra.hpp"

namespace lietower {

/// Built-in algebras by name:
///   abelian(n)      n-dimensional abelian
///   aff1            [x, y] = y
///   heis3           [x, y] = z
///   sl2             basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h
///   paper5          [x1,x2] = x5, [x1,x3] = x3, [x1,x4] = -x4, [x3,x4] = x5
///   diag12          a = diag(1, 2) acting on Q^2: [a,v1] = v1, [a,v2] = 2 v2
///   sl2_ltimes_q2   sl2 acting on Q^2 by its standard representation
///   jordan2         x acting on Q^2 by the Jordan block with eigenvalue 1
/// and direct products written A*B (left associative). Throws InputError for
/// unknown names.
LieAlgebra catalog(const std::string& name);

/// Names exercised by the "every catalog algebra" test sweeps.
std::vector<std::string> catalog_names();

}  // namespace lietower

#endif  // LIETOWER_CATALOG_HPP
