#include "ultrametric/monic_poly.hpp"

#include <stdexcept>

#include "ultrametric/errors.hpp"

namespace ultrametric {

MonicPoly::MonicPoly(std::vector<Rational> coeffs, Valuation valuation)
    : coeffs_(std::move(coeffs)), valuation_(valuation) {
  if (coeffs_.empty()) {
    throw InputError("monic polynomial must have degree >= 1");
  }
}

MonicPoly MonicPoly::from_roots(std::span<const Rational> roots, Valuation valuation) {
  if (roots.empty()) {
    throw InputError("monic polynomial must have degree >= 1");
  }
  // Full coefficient vector including the leading 1, low degree first.
  std::vector<Rational> full{Rational(1)};
  for (const Rational& root : roots) {
    std::vector<Rational> next(full.size() + 1);
    for (std::size_t i = 0; i < full.size(); ++i) {
      next[i + 1] += full[i];
      next[i] -= root * full[i];
    }
    full = std::move(next);
  }
  full.pop_back();
  return MonicPoly(std::move(full), valuation);
}

Rational MonicPoly::coeff(std::size_t i) const {
  if (i > coeffs_.size()) {
    throw std::out_of_range("coefficient index out of range");
  }
  return i == coeffs_.size() ? Rational(1) : coeffs_[i];
}

Rational MonicPoly::evaluate(const Rational& z) const {
  Rational acc(1);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

}  // namespace ultrametric
