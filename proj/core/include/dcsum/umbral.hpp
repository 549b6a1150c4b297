#pragma once

// Symbolic (umbral) evaluation of powers of linear forms in Euler umbrae.
//
// A single umbra follows (E + x)^n -> E_n(x). A sum of terms attached to
// independent umbrae expands multinomially, each umbra resolving on its own:
//
//   (a(E + x) + b(E' + y))^p = sum_s C(p,s) a^s E_s(x) b^{p-s} E_{p-s}(y).

#include <cstdint>
#include <span>

#include "dcsum/rational.hpp"

namespace dcsum {

using UmbraId = int;

// coeff * (E_umbra + shift)
struct UmbralTerm {
  Rational coeff;
  Rational shift;
  UmbraId umbra = 0;
};

// Expands (sum of terms)^p and resolves every umbra. Each umbra id may appear
// in at most one term; repeats throw PreconditionError. An empty form is 0
// (so the result is 1 when p = 0).
Rational umbral_power(std::span<const UmbralTerm> terms, std::int64_t p);

// Right-hand side of the DC-sum reciprocity law:
//
//   2 sum_{u<k, u-[hu/k] odd} (kh(E + u/k) + k(E' + h - [hu/k]))^p
//     + (hE + kE')^p + (p+2) E_p
//
// Requires odd p >= 1 and h, k >= 1.
Rational theorem9_rhs(std::int64_t p, std::int64_t h, std::int64_t k);

// k^p sum_{u<k} (-1)^u (h(E + u/k) + (E' + h - [hu/k]))^p.
Rational theorem7_sum(std::int64_t p, std::int64_t h, std::int64_t k);

// sum_s C(p,s) k^{p-s} E_s h^{p-s} E_{p-s}(1), exactly as the closed form is
// stated.
Rational theorem7_closed(std::int64_t p, std::int64_t h, std::int64_t k);

}  // namespace dcsum
