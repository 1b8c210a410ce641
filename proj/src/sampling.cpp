#include "ultrametric/sampling.hpp"

namespace ultrametric {

namespace {

long small_unit(Rng& rng, const Valuation& val) {
  std::uniform_int_distribution<long> pick(1, 7);
  for (;;) {
    const long u = pick(rng);
    if (val.is_trivial() || u % static_cast<long>(val.prime()) != 0) {
      return u;
    }
  }
}

bool coin(Rng& rng, double prob) { return std::bernoulli_distribution(prob)(rng); }

}  // namespace

Rational random_with_valuation(Rng& rng, const Valuation& val, ValuationRange range) {
  const long u = small_unit(rng, val);
  const long w = small_unit(rng, val);
  Rational x(mpz_class(coin(rng, 0.5) ? -u : u), mpz_class(w));
  if (val.is_trivial()) {
    return x;
  }
  const int v = std::uniform_int_distribution<int>(range.min, range.max)(rng);
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), val.prime(), static_cast<unsigned long>(v < 0 ? -v : v));
  return v >= 0 ? x * Rational(power, 1) : x / Rational(power, 1);
}

Rational random_entry(Rng& rng, const Valuation& val, ValuationRange range, double zero_prob) {
  if (coin(rng, zero_prob)) {
    return Rational(0);
  }
  return random_with_valuation(rng, val, range);
}

Matrix random_matrix(Rng& rng, std::size_t n, const Valuation& val, ValuationRange range, double zero_prob) {
  Matrix m(n, val);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      m(j, k) = random_entry(rng, val, range, zero_prob);
    }
  }
  return m;
}

PlantedMatrix planted_spectrum(Rng& rng, std::size_t n, const Valuation& val, ValuationRange range) {
  std::vector<Rational> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Occasional zero and repeated eigenvalues.
    if (coin(rng, 0.1)) {
      eigenvalues[i] = 0;
    } else if (i > 0 && coin(rng, 0.1)) {
      eigenvalues[i] = eigenvalues[i - 1];
    } else {
      eigenvalues[i] = random_with_valuation(rng, val, range);
    }
  }

  Matrix s = Matrix::identity(n, val);
  Matrix s_inv = Matrix::identity(n, val);
  if (n > 1) {
    const auto ops = std::uniform_int_distribution<std::size_t>(0, 3 * n)(rng);
    std::uniform_int_distribution<std::size_t> index(0, n - 1);
    std::uniform_int_distribution<long> mult(-3, 3);
    for (std::size_t t = 0; t < ops; ++t) {
      const std::size_t i = index(rng);
      std::size_t j = index(rng);
      while (j == i) {
        j = index(rng);
      }
      const long c = mult(rng);
      if (c == 0) {
        continue;
      }
      // S <- S E with E = I + c e_i e_j^T; S^-1 <- E^-1 S^-1.
      for (std::size_t r = 0; r < n; ++r) {
        s(r, j) += Rational(c) * s(r, i);
      }
      for (std::size_t col = 0; col < n; ++col) {
        s_inv(i, col) -= Rational(c) * s_inv(j, col);
      }
    }
  }

  PlantedMatrix out{s * Matrix::diagonal(eigenvalues, val) * s_inv, eigenvalues, {}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> v(n);
    for (std::size_t r = 0; r < n; ++r) {
      v[r] = s(r, i);
    }
    out.eigenvectors.push_back(std::move(v));
  }
  return out;
}

Matrix singular_matrix(Rng& rng, std::size_t n, const Valuation& val, ValuationRange range) {
  Matrix m = random_matrix(rng, n, val, range);
  if (n == 1) {
    m(0, 0) = 0;
    return m;
  }
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  const std::size_t target = index(rng);
  std::size_t source = index(rng);
  while (source == target) {
    source = index(rng);
  }
  const Rational factor = random_entry(rng, val, range, 0.1);
  for (std::size_t k = 0; k < n; ++k) {
    m(target, k) = factor * m(source, k);
  }
  return m;
}

MonicPoly random_poly(Rng& rng, std::size_t degree, const Valuation& val, ValuationRange range,
                      double zero_prob) {
  std::vector<Rational> c(degree);
  for (auto& x : c) {
    x = random_entry(rng, val, range, zero_prob);
  }
  return MonicPoly(std::move(c), val);
}

PlantedPoly random_factorable(Rng& rng, std::size_t degree, const Valuation& val, ValuationRange range,
                              double zero_prob) {
  std::vector<Rational> roots(degree);
  for (auto& r : roots) {
    r = random_entry(rng, val, range, zero_prob);
  }
  return {MonicPoly::from_roots(roots, val), roots};
}

}  // namespace ultrametric
