#pragma once

// Exact rationals with a p-adic (or trivial) absolute value.
//
// Absolute values are never materialised as reals. |x| = p^(-e) is carried
// as the integer exponent e, with e = +inf standing for |0| = 0. Every bound
// in the library is a max, min, product or comparison of such values, so
// the exponent form is exact.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ultrametric {

/// Reduced fraction num/den with den >= 1; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Strict parse of "num" or "num/den". Rejects non-reduced fractions,
  /// zero or negative denominators, signs other than a leading '-' on the
  /// numerator, and leading zeros.
  static Rational parse(std::string_view text);

  /// "num/den", or "num" when den = 1.
  std::string to_string() const;

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  Rational inverse() const;

  Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
  Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
  Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// An absolute value p^(-e), stored as the exponent e in Z or +inf (|x| = 0).
///
/// Comparison operators order by MAGNITUDE, not by exponent: a < b means
/// |a| < |b|, i.e. a.exponent() > b.exponent(). Zero is the least element.
class AbsExp {
 public:
  /// |x| = 1.
  constexpr AbsExp() = default;
  constexpr explicit AbsExp(std::int64_t exponent) : exp_(exponent) {}

  static constexpr AbsExp zero() {
    AbsExp z;
    z.zero_ = true;
    return z;
  }
  static constexpr AbsExp one() { return AbsExp(0); }

  constexpr bool is_zero() const { return zero_; }
  /// The exponent e; throws std::domain_error for the zero value.
  std::int64_t exponent() const;

  /// "inf" for zero, otherwise the decimal exponent.
  std::string to_string() const;
  static AbsExp parse(std::string_view text);

  /// |x|^n; exponent times n. pow(0) is 1.
  AbsExp pow(unsigned n) const;

  friend AbsExp operator*(AbsExp a, AbsExp b);
  /// Exponent subtraction. Dividing by zero throws std::domain_error.
  friend AbsExp operator/(AbsExp a, AbsExp b);

  friend constexpr bool operator==(AbsExp a, AbsExp b) {
    return a.zero_ == b.zero_ && (a.zero_ || a.exp_ == b.exp_);
  }
  friend constexpr std::strong_ordering operator<=>(AbsExp a, AbsExp b) {
    if (a.zero_ || b.zero_) {
      return b.zero_ <=> a.zero_;
    }
    return b.exp_ <=> a.exp_;
  }

 private:
  std::int64_t exp_ = 0;
  bool zero_ = false;
};

std::ostream& operator<<(std::ostream& os, AbsExp a);

/// Largest absolute value in the list; the empty max is |0|.
AbsExp abs_max(std::span<const AbsExp> values);
AbsExp abs_max(std::initializer_list<AbsExp> values);

/// Which absolute value Q carries: p-adic for a prime p, or trivial.
class Valuation {
 public:
  /// Throws InputError unless p is prime.
  static Valuation p_adic(std::uint64_t p);
  static Valuation trivial() { return Valuation(0); }

  bool is_trivial() const { return prime_ == 0; }
  /// The prime p; 0 for the trivial valuation.
  std::uint64_t prime() const { return prime_; }

  /// p-adic order of a nonzero integer; 0 under the trivial valuation.
  std::int64_t order(const mpz_class& n) const;

  AbsExp abs(const Rational& x) const;

  /// "p" as written in the JSON formats: the prime, or "trivial".
  std::string to_string() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  explicit Valuation(std::uint64_t p) : prime_(p) {}
  std::uint64_t prime_;
};

bool is_prime(std::uint64_t n);

}  // namespace ultrametric
