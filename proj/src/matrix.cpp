#include "ultrametric/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "ultrametric/errors.hpp"

namespace ultrametric {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) {
    throw InputError("matrix dimension mismatch");
  }
  if (!(a.valuation() == b.valuation())) {
    throw InputError("matrix valuation mismatch");
  }
}

}  // namespace

Matrix::Matrix(std::size_t n, Valuation valuation) : n_(n), a_(n * n), valuation_(valuation) {
  if (n == 0) {
    throw InputError("matrix dimension must be >= 1");
  }
}

Matrix::Matrix(const std::vector<std::vector<Rational>>& rows, Valuation valuation)
    : n_(rows.size()), valuation_(valuation) {
  if (n_ == 0) {
    throw InputError("matrix dimension must be >= 1");
  }
  a_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) {
      throw InputError("matrix is not square: row of length " + std::to_string(row.size()) +
                       " in a " + std::to_string(n_) + "-row matrix");
    }
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n, Valuation valuation) {
  Matrix m(n, valuation);
  for (std::size_t j = 0; j < n; ++j) {
    m(j, j) = 1;
  }
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& diag, Valuation valuation) {
  Matrix m(diag.size(), valuation);
  for (std::size_t j = 0; j < diag.size(); ++j) {
    m(j, j) = diag[j];
  }
  return m;
}

const Rational& Matrix::at(std::size_t j, std::size_t k) const {
  if (j >= n_ || k >= n_) {
    throw std::out_of_range("matrix index out of range");
  }
  return (*this)(j, k);
}

Matrix Matrix::transpose() const {
  Matrix t(n_, valuation_);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t k = 0; k < n_; ++k) {
      t(k, j) = (*this)(j, k);
    }
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  const std::size_t n = a.size();
  Matrix c(n, a.valuation());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      if (a(i, l).is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        c(i, j) += a(i, l) * b(l, j);
      }
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix c = a;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      c(j, k) += b(j, k);
    }
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix c = a;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      c(j, k) -= b(j, k);
    }
  }
  return c;
}

AbsExp row_radius(const Matrix& a, std::size_t j) {
  if (j >= a.size()) {
    throw std::out_of_range("row index out of range");
  }
  AbsExp r = AbsExp::zero();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k != j) {
      r = std::max(r, a.abs(j, k));
    }
  }
  return r;
}

AbsExp col_radius(const Matrix& a, std::size_t k) {
  if (k >= a.size()) {
    throw std::out_of_range("column index out of range");
  }
  AbsExp r = AbsExp::zero();
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j != k) {
      r = std::max(r, a.abs(j, k));
    }
  }
  return r;
}

Rational det(const Matrix& a) {
  const std::size_t n = a.size();
  // Clear denominators row by row: det(A) = det(M) / prod(row scales).
  std::vector<mpz_class> m(n * n);
  mpz_class scale = 1;
  for (std::size_t j = 0; j < n; ++j) {
    mpz_class row_lcm = 1;
    for (std::size_t k = 0; k < n; ++k) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(j, k).value().get_den_mpz_t());
    }
    for (std::size_t k = 0; k < n; ++k) {
      const mpq_class& q = a(j, k).value();
      m[j * n + k] = q.get_num() * (row_lcm / q.get_den());
    }
    scale *= row_lcm;
  }

  auto at = [&](std::size_t j, std::size_t k) -> mpz_class& { return m[j * n + k]; };
  int sign = 1;
  mpz_class prev_pivot = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (at(i, i) == 0) {
      std::size_t r = i + 1;
      while (r < n && at(r, i) == 0) {
        ++r;
      }
      if (r == n) {
        return Rational(0);
      }
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(at(i, k), at(r, k));
      }
      sign = -sign;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = i + 1; k < n; ++k) {
        at(j, k) = at(j, k) * at(i, i) - at(j, i) * at(i, k);
        mpz_divexact(at(j, k).get_mpz_t(), at(j, k).get_mpz_t(), prev_pivot.get_mpz_t());
      }
      at(j, i) = 0;
    }
    prev_pivot = at(i, i);
  }
  mpz_class d = at(n - 1, n - 1);
  if (sign < 0) {
    d = -d;
  }
  return Rational(d, scale);
}

MonicPoly char_poly(const Matrix& a) {
  const std::size_t n = a.size();
  const Valuation& val = a.valuation();
  // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix m(n, val);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) {
      next(i, i) += c[n - k + 1];
    }
    m = std::move(next);
    const Matrix am = a * m;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) {
      trace += am(i, i);
    }
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  c.pop_back();
  return MonicPoly(std::move(c), val);
}

AbsExp spectral_abs_bound(const Matrix& a) {
  const std::size_t n = a.size();
  AbsExp by_rows = AbsExp::zero();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      by_rows = std::max(by_rows, a.abs(j, k));
    }
  }
  AbsExp by_cols = AbsExp::zero();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      by_cols = std::max(by_cols, a.abs(j, k));
    }
  }
  return std::min(by_rows, by_cols);
}

DetBoundReport det_abs_bound(const Matrix& a) {
  const AbsExp bound = spectral_abs_bound(a).pow(static_cast<unsigned>(a.size()));
  const AbsExp det_abs = a.valuation().abs(det(a));
  return {bound, det_abs, det_abs <= bound};
}

}  // namespace ultrametric
