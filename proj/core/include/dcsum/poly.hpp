#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "dcsum/rational.hpp"

namespace dcsum {

// Dense univariate polynomial over the rationals. coeffs()[i] is the
// coefficient of x^i. The highest stored coefficient is nonzero; the zero
// polynomial stores no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, std::size_t degree);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  // Coefficient of x^i, zero beyond the degree.
  Rational coeff(std::size_t i) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }

  friend bool operator==(const Poly&, const Poly&) = default;

  // Descending powers, e.g. `x^3 - 3/2*x^2 + 1/4`; the zero polynomial is `0`.
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Horner evaluation.
Rational eval_poly(const Poly& p, const Rational& x);

Poly poly_derivative(const Poly& p);

// Antiderivative with zero constant term.
Poly poly_integral(const Poly& p);

// p(x + c) as a polynomial in x.
Poly poly_shift(const Poly& p, const Rational& c);

// p(a*x) as a polynomial in x.
Poly poly_scale(const Poly& p, const Rational& a);

}  // namespace dcsum
