#pragma once

// Random instance generators with known answers: matrices with a planted
// Q-rational spectrum, rank-deficient matrices, and polynomials with planted
// roots. Values are drawn with prescribed valuations so that every regime
// (|x| < 1, |x| = 1, |x| > 1) is exercised.

#include <cstddef>
#include <random>
#include <vector>

#include "ultrametric/matrix.hpp"
#include "ultrametric/monic_poly.hpp"

namespace ultrametric {

using Rng = std::mt19937_64;

struct ValuationRange {
  int min = -3;
  int max = 3;
};

/// Nonzero rational +-p^v u / w with v uniform in `range` and u, w small
/// integers prime to p. Under the trivial valuation v is ignored.
Rational random_with_valuation(Rng& rng, const Valuation& val, ValuationRange range);

/// As above, but zero with probability `zero_prob`.
Rational random_entry(Rng& rng, const Valuation& val, ValuationRange range, double zero_prob);

Matrix random_matrix(Rng& rng, std::size_t n, const Valuation& val, ValuationRange range,
                     double zero_prob = 0.25);

/// A = S D S^-1 with D diagonal and S a product of integer elementary
/// operations (multipliers in [-3, 3]). Column i of S is an eigenvector for
/// eigenvalues[i].
struct PlantedMatrix {
  Matrix a;
  std::vector<Rational> eigenvalues;
  std::vector<std::vector<Rational>> eigenvectors;
};

/// Draws 0..3n elementary operations; zero operations leave A diagonal.
PlantedMatrix planted_spectrum(Rng& rng, std::size_t n, const Valuation& val, ValuationRange range);

/// Random matrix with one row replaced by a rational multiple (possibly 0)
/// of another, so det = 0.
Matrix singular_matrix(Rng& rng, std::size_t n, const Valuation& val, ValuationRange range);

MonicPoly random_poly(Rng& rng, std::size_t degree, const Valuation& val, ValuationRange range,
                      double zero_prob = 0.2);

struct PlantedPoly {
  MonicPoly poly;
  std::vector<Rational> roots;  // with multiplicity
};

/// prod (z - a_i) over random a_i; a root is 0 with probability `zero_prob`.
PlantedPoly random_factorable(Rng& rng, std::size_t degree, const Valuation& val, ValuationRange range,
                              double zero_prob = 0.1);

}  // namespace ultrametric
