#pragma once

#include <cstddef>
#include <vector>

#include "ultrametric/monic_poly.hpp"
#include "ultrametric/valued_field.hpp"

namespace ultrametric {

/// Dense n x n matrix over Q carrying the valuation its radii are measured in.
/// Indices are zero-based.
class Matrix {
 public:
  /// Zero matrix; n must be >= 1.
  Matrix(std::size_t n, Valuation valuation);
  /// Throws InputError unless `rows` is a non-empty square array.
  Matrix(const std::vector<std::vector<Rational>>& rows, Valuation valuation);

  static Matrix identity(std::size_t n, Valuation valuation);
  static Matrix diagonal(const std::vector<Rational>& diag, Valuation valuation);

  std::size_t size() const { return n_; }
  const Valuation& valuation() const { return valuation_; }

  const Rational& operator()(std::size_t j, std::size_t k) const { return a_[j * n_ + k]; }
  Rational& operator()(std::size_t j, std::size_t k) { return a_[j * n_ + k]; }
  /// Bounds-checked access; throws std::out_of_range.
  const Rational& at(std::size_t j, std::size_t k) const;

  /// |a_jk| under the matrix valuation.
  AbsExp abs(std::size_t j, std::size_t k) const { return valuation_.abs((*this)(j, k)); }

  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_;
  std::vector<Rational> a_;
  Valuation valuation_;
};

/// h_j(A): largest |a_jk| over k != j. For n = 1 this is the empty max, |0|.
AbsExp row_radius(const Matrix& a, std::size_t j);
/// v_k(A): largest |a_jk| over j != k.
AbsExp col_radius(const Matrix& a, std::size_t k);

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational det(const Matrix& a);

/// det(zI - A) via Faddeev-LeVerrier.
MonicPoly char_poly(const Matrix& a);

/// Bound on |lambda| for every eigenvalue lambda in Q. The row-wise and
/// column-wise maxima are both the largest entry, so the min is taken over
/// two equal values.
AbsExp spectral_abs_bound(const Matrix& a);

struct DetBoundReport {
  AbsExp bound;    // spectral_abs_bound(A)^n
  AbsExp det_abs;  // |det(A)|
  bool holds;      // det_abs <= bound
};

DetBoundReport det_abs_bound(const Matrix& a);

}  // namespace ultrametric
