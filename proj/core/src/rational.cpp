#include "dcsum/rational.hpp"

#include <cassert>
#include <ostream>
#include <utility>

namespace dcsum {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(mpq_class v) : value_(std::move(v)) { check_canonical(); }

Rational::Rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.get_num() = num;
  value_.get_den() = den;
  value_.canonicalize();
  check_canonical();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_part = body;
  std::string_view den_part = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
  }
  if (!all_digits(num_part) || !all_digits(den_part)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  Int num(std::string(num_part), 10);
  Int den(std::string(den_part), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

void Rational::check_canonical() const {
  assert(value_.get_den() > 0);
  assert([this] {
    Int g;
    mpz_gcd(g.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return g == 1;
  }());
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Rational rat_pow(const Rational& q, unsigned long e) {
  Int num;
  Int den;
  mpz_pow_ui(num.get_mpz_t(), q.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.raw().get_den_mpz_t(), e);
  return Rational(num, den);
}

Int floor(const Rational& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.raw().get_num_mpz_t(), q.raw().get_den_mpz_t());
  return out;
}

std::int64_t to_int64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return v.get_si();
}

}  // namespace dcsum
