#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ultrametric/valued_field.hpp"

namespace ultrametric {

/// p(z) = c0 + c1 z + ... + c_{n-1} z^{n-1} + z^n over Q with a valuation.
/// The leading coefficient is implicit, so the polynomial is monic by
/// construction.
class MonicPoly {
 public:
  /// `coeffs` lists c0..c_{n-1}; the degree is coeffs.size() and must be >= 1.
  MonicPoly(std::vector<Rational> coeffs, Valuation valuation);

  /// Monic polynomial with the given roots (with multiplicity).
  static MonicPoly from_roots(std::span<const Rational> roots, Valuation valuation);

  std::size_t degree() const { return coeffs_.size(); }
  /// c_i for i < n; c_n = 1.
  Rational coeff(std::size_t i) const;
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Valuation& valuation() const { return valuation_; }

  Rational evaluate(const Rational& z) const;

  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

 private:
  std::vector<Rational> coeffs_;
  Valuation valuation_;
};

}  // namespace ultrametric
