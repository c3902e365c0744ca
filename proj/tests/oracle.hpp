#pragma once

// Reference complexes built straight from structure constants with the
// textbook formulas, kept independent of the mixed graded pipeline. Used
// to cross-check every homology number the library reports.

#include "mgce/pbw.hpp" // for the Word alias only; the formulas are local

#include <map>

namespace oracle {

// exterior powers of g (discrete), boundary
//   d(g_1 ^ .. ^ g_n) = sum_{i<j} (-1)^{i+j} [g_i,g_j] ^ .. ^ omit i, j
mgce::ChainComplex classical_homological(const mgce::DgLieAlgebra& g);

// Hom(Lambda^p g, M) in chain degree -p (trivial coefficients when m is
// null), coboundary with the action and bracket sums
mgce::ChainComplex classical_cohomological(const mgce::DgLieAlgebra& g,
                                           const mgce::Representation* m);

// Betti numbers by cohomological degree
std::map<int, long> betti_cohomological(const mgce::DgLieAlgebra& g,
                                        const mgce::Representation* m);
std::map<int, long> betti_homological(const mgce::DgLieAlgebra& g);

} // namespace oracle
