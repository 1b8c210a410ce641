#include "ultrametric/valued_field.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "ultrametric/errors.hpp"

namespace ultrametric {

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Canonical decimal: "0" or no leading zero.
bool is_canonical_natural(std::string_view s) {
  return is_digits(s) && (s.size() == 1 || s.front() != '0');
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("absolute-value exponent overflow");
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  q_.canonicalize();
}

Rational::Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string quoted = "\"" + std::string(text) + "\"";
  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!is_canonical_natural(den) || den == "0") {
      throw InputError("invalid rational " + quoted + ": bad denominator");
    }
  }
  std::string_view magnitude = num;
  if (!magnitude.empty() && magnitude.front() == '-') {
    magnitude.remove_prefix(1);
  }
  if (!is_canonical_natural(magnitude) || num == "-0") {
    throw InputError("invalid rational " + quoted + ": bad numerator");
  }
  const mpz_class n(std::string(num), 10);
  const mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) {
    throw InputError("invalid rational " + quoted + ": not reduced");
  }
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (q_.get_den() == 1) {
    return q_.get_num().get_str();
  }
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw std::domain_error("inverse of zero");
  }
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero");
  }
  q_ /= rhs.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

// ------------------------------------------------------------------ AbsExp

std::int64_t AbsExp::exponent() const {
  if (zero_) {
    throw std::domain_error("exponent of |0| is +inf");
  }
  return exp_;
}

std::string AbsExp::to_string() const { return zero_ ? "inf" : std::to_string(exp_); }

AbsExp AbsExp::parse(std::string_view text) {
  if (text == "inf") {
    return zero();
  }
  std::int64_t e = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, e);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw InputError("invalid absolute-value exponent \"" + std::string(text) + "\"");
  }
  return AbsExp(e);
}

AbsExp AbsExp::pow(unsigned n) const {
  if (n == 0) {
    return one();
  }
  if (zero_) {
    return zero();
  }
  std::int64_t r = 0;
  if (__builtin_mul_overflow(exp_, static_cast<std::int64_t>(n), &r)) {
    throw std::overflow_error("absolute-value exponent overflow");
  }
  return AbsExp(r);
}

AbsExp operator*(AbsExp a, AbsExp b) {
  if (a.zero_ || b.zero_) {
    return AbsExp::zero();
  }
  return AbsExp(checked_add(a.exp_, b.exp_));
}

AbsExp operator/(AbsExp a, AbsExp b) {
  if (b.zero_) {
    throw std::domain_error("division by |0|");
  }
  if (a.zero_) {
    return AbsExp::zero();
  }
  return AbsExp(checked_add(a.exp_, -b.exp_));
}

std::ostream& operator<<(std::ostream& os, AbsExp a) { return os << a.to_string(); }

AbsExp abs_max(std::span<const AbsExp> values) {
  AbsExp best = AbsExp::zero();
  for (const AbsExp v : values) {
    best = std::max(best, v);
  }
  return best;
}

AbsExp abs_max(std::initializer_list<AbsExp> values) {
  return abs_max(std::span<const AbsExp>(values.begin(), values.size()));
}

// --------------------------------------------------------------- Valuation

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

Valuation Valuation::p_adic(std::uint64_t p) {
  if (!is_prime(p)) {
    throw InputError("p = " + std::to_string(p) + " is not prime");
  }
  return Valuation(p);
}

std::int64_t Valuation::order(const mpz_class& n) const {
  if (n == 0) {
    throw std::domain_error("order of zero");
  }
  if (is_trivial()) {
    return 0;
  }
  const mpz_class p(static_cast<unsigned long>(prime_));
  mpz_class rest;
  return static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

AbsExp Valuation::abs(const Rational& x) const {
  if (x.is_zero()) {
    return AbsExp::zero();
  }
  return AbsExp(order(x.numerator()) - order(x.denominator()));
}

std::string Valuation::to_string() const {
  return is_trivial() ? "trivial" : std::to_string(prime_);
}

}  // namespace ultrametric
