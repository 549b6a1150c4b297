#include "dcsum/poly.hpp"

#include <algorithm>
#include <utility>

namespace dcsum {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational{};
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (c.sign() < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    const Rational mag = c.sign() < 0 ? -c : c;
    const bool unit = mag == Rational(1);
    if (i == 0) {
      out += mag.to_string();
      continue;
    }
    if (!unit) out += mag.to_string() + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Rational eval_poly(const Poly& p, const Rational& x) {
  Rational acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly poly_derivative(const Poly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Rational(i);
  return Poly(std::move(out));
}

Poly poly_integral(const Poly& p) {
  const auto& c = p.coeffs();
  if (c.empty()) return {};
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i] / Rational(i + 1);
  return Poly(std::move(out));
}

Poly poly_shift(const Poly& p, const Rational& c) {
  // Horner in the polynomial ring: acc = acc*(x + c) + a_i.
  const Poly linear({c, Rational(1)});
  Poly acc;
  const auto& a = p.coeffs();
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc *= linear;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly poly_scale(const Poly& p, const Rational& a) {
  std::vector<Rational> out = p.coeffs();
  Rational power(1);
  for (auto& c : out) {
    c *= power;
    power *= a;
  }
  return Poly(std::move(out));
}

}  // namespace dcsum
