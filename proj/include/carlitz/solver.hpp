#pragma once

#include "carlitz/tower.hpp"

namespace carlitz {

// All roots, at the given tower level, of the p-linearized equation
//   sum_e coeffs[e] * x^{p^e} = rhs
// (coeffs indexed by e, entries at lvl). Completeness is certified by
// Newton-polygon denominator/degree bounds for every unknown coordinate;
// each returned root is re-verified by exact substitution. Throws when a
// certified numerator degree bound exceeds degree_cap.
std::vector<TVal> solve_linearized(const Tower& tw, int lvl, std::vector<TVal> coeffs,
                                   TVal rhs, int degree_cap);

// roots of C_a(x) = m in the level (convenience wrapper)
std::vector<TVal> solve_carlitz_level(const Tower& tw, int lvl, const PolyT& a,
                                      const TVal& m, int degree_cap);

}  // namespace carlitz
