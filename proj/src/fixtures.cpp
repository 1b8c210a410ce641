#include "ultrametric/fixtures.hpp"

namespace ultrametric::fixtures {

Matrix counterexample(const Valuation& val) {
  return Matrix({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, val);
}

std::vector<Rational> counterexample_spectrum() { return {0, 1, 1, 2}; }

}  // namespace ultrametric::fixtures
