#pragma once

// Exact scalar arithmetic: arbitrary-precision integers and canonical
// rationals backed by GMP.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dcsum {

using Int = mpz_class;

// Raised when an operation is called outside its documented domain
// (e.g. a Dedekind sum with gcd(h,k) != 1).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rational number in lowest terms with a positive denominator.
// Zero is always 0/1. Every constructor and operator leaves the value
// canonical, so two equal rationals have identical representations.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)

  template <std::unsigned_integral T>
  Rational(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(implicit)

  Rational(const Int& v) : value_(v) {}  // NOLINT(implicit)

  // Throws std::domain_error when den == 0.
  Rational(const Int& num, const Int& den);

  // Accepts `a`, `-a`, `a/b`, `-a/b` with decimal digits and b > 0.
  // Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  Int numerator() const { return value_.get_num(); }
  Int denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  // Canonical text: `-13/108`; integers print without a denominator.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v);
  void check_canonical() const;

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// C(n, k); zero when k > n.
Int binomial(unsigned long n, unsigned long k);

// q^e with 0^0 = 1.
Rational rat_pow(const Rational& q, unsigned long e);

// Largest integer <= q.
Int floor(const Rational& q);

// (-1)^e for any integer e.
inline int neg_one_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }
inline int neg_one_pow(const Int& e) { return mpz_even_p(e.get_mpz_t()) ? 1 : -1; }

// Conversion for small integer values such as indices; throws
// std::overflow_error when the value does not fit.
std::int64_t to_int64(const Int& v);

}  // namespace dcsum
