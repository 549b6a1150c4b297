#include "dcsum/umbral.hpp"

#include <set>
#include <string>
#include <vector>

#include "dcsum/appell.hpp"

namespace dcsum {

namespace {

constexpr UmbraId kFirst = 0;
constexpr UmbraId kSecond = 1;

Rational frac(std::int64_t num, std::int64_t den) { return Rational(Int(num), Int(den)); }

}  // namespace

Rational umbral_power(std::span<const UmbralTerm> terms, std::int64_t p) {
  if (p < 0) throw PreconditionError("umbral_power: p must be >= 0");
  std::set<UmbraId> seen;
  for (const auto& t : terms) {
    if (!seen.insert(t.umbra).second) {
      throw PreconditionError("umbral_power: umbra " + std::to_string(t.umbra) +
                              " appears in more than one term");
    }
  }

  // Product of exponential series sum_s c^s E_s(x) t^s / s!, truncated at t^p.
  const auto n = static_cast<std::size_t>(p);
  std::vector<Rational> inv_fact(n + 1);
  inv_fact[0] = Rational(1);
  for (std::size_t s = 1; s <= n; ++s) inv_fact[s] = inv_fact[s - 1] / Rational(s);

  std::vector<Rational> product(n + 1);
  product[0] = Rational(1);
  if (terms.empty()) return p == 0 ? Rational(1) : Rational();

  for (const auto& t : terms) {
    std::vector<Rational> factor(n + 1);
    Rational c_pow(1);
    for (std::size_t s = 0; s <= n; ++s) {
      if (s > 0) c_pow *= t.coeff;
      factor[s] = c_pow * euler_value(s, t.shift) * inv_fact[s];
    }
    std::vector<Rational> next(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      if (product[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= n; ++j) next[i + j] += product[i] * factor[j];
    }
    product = std::move(next);
  }
  return product[n] / inv_fact[n];
}

Rational theorem9_rhs(std::int64_t p, std::int64_t h, std::int64_t k) {
  if (p < 1 || p % 2 == 0) throw PreconditionError("theorem9_rhs: p must be odd and >= 1");
  if (h < 1 || k < 1) throw PreconditionError("theorem9_rhs: h, k must be >= 1");
  Rational odd_part;
  for (std::int64_t u = 0; u < k; ++u) {
    const std::int64_t f = (h * u) / k;
    if ((u - f) % 2 == 0) continue;
    const UmbralTerm form[] = {
        {Rational(k * h), frac(u, k), kFirst},
        {Rational(k), Rational(h - f), kSecond},
    };
    odd_part += umbral_power(form, p);
  }
  const UmbralTerm cross[] = {
      {Rational(h), Rational(), kFirst},
      {Rational(k), Rational(), kSecond},
  };
  return Rational(2) * odd_part + umbral_power(cross, p) +
         Rational(p + 2) * euler_number(static_cast<std::size_t>(p));
}

Rational theorem7_sum(std::int64_t p, std::int64_t h, std::int64_t k) {
  if (p < 0) throw PreconditionError("theorem7_sum: p must be >= 0");
  if (h < 1 || k < 1) throw PreconditionError("theorem7_sum: h, k must be >= 1");
  Rational acc;
  for (std::int64_t u = 0; u < k; ++u) {
    const std::int64_t f = (h * u) / k;
    const UmbralTerm form[] = {
        {Rational(h), frac(u, k), kFirst},
        {Rational(1), Rational(h - f), kSecond},
    };
    Rational term = umbral_power(form, p);
    if (u % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return rat_pow(Rational(k), static_cast<unsigned long>(p)) * acc;
}

Rational theorem7_closed(std::int64_t p, std::int64_t h, std::int64_t k) {
  if (p < 0) throw PreconditionError("theorem7_closed: p must be >= 0");
  const auto n = static_cast<std::size_t>(p);
  const Rational hk(h * k);
  Rational acc;
  for (std::size_t s = 0; s <= n; ++s) {
    acc += Rational(binomial(n, s)) * rat_pow(hk, n - s) * euler_number(s) *
           euler_value(n - s, Rational(1));
  }
  return acc;
}

}  // namespace dcsum
