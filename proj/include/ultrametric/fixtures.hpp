#pragma once

#include <vector>

#include "ultrametric/matrix.hpp"

namespace ultrametric::fixtures {

/// The 4x4 block matrix [[1,1,0,0],[1,1,0,0],[0,0,1,0],[0,0,0,1]].
/// Spectrum {0, 1, 1, 2}; row radii {1, 1, 0, 0} for any nontrivial
/// valuation. Every tri-oval has radius product 0 and all centres equal 1,
/// so the tri-oval union is {1} and misses the eigenvalues 0 and 2 whenever
/// |2| != 0.
Matrix counterexample(const Valuation& val);

/// Eigenvalues of counterexample() with multiplicity, ascending.
std::vector<Rational> counterexample_spectrum();

}  // namespace ultrametric::fixtures
