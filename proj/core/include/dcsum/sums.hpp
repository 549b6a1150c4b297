#pragma once

// Finite sums: classical and generalized Dedekind sums, the Dedekind type
// DC sums T_p(h,k), alternating power sums, and the lattice sums that arise
// when k^p T_p(h,k) + h^p T_p(k,h) is rewritten over the (u,v) grid.
//
// Integer arguments are plain 64-bit values; every sum is O(h*k) at most and
// intended for desk-scale parameters.

#include <cstdint>
#include <vector>

#include "dcsum/rational.hpp"

namespace dcsum {

// S(h,k) = sum_{u=1}^{k-1} ((u/k)) ((hu/k)). Requires h, k >= 1, gcd(h,k) = 1.
Rational dedekind_sum(std::int64_t h, std::int64_t k);

// S_p(h,k) = sum_{a=1}^{k-1} (a/k) Bbar_p(ah/k). Requires p, h, k >= 1 and
// gcd(h,k) = 1.
Rational gen_dedekind_sum(std::int64_t p, std::int64_t h, std::int64_t k);

// T_p(h,k) = 2 sum_{u=1}^{k-1} (-1)^{u-1} (u/k) Ebar_p(hu/k).
// Defined for any h, k >= 1; coprimality is not required.
Rational dc_sum(std::int64_t p, std::int64_t h, std::int64_t k);

// 2 sum_{j=0}^{n-1} (-1)^j j^l with 0^0 = 1. Requires n >= 1, l >= 0.
Rational alt_power_sum(std::int64_t n, std::int64_t l);

// Which Euler function the double lattice sum is taken over.
enum class EulerExtension {
  periodic,    // Ebar_p, antiperiodic extension
  polynomial,  // E_p evaluated directly, also for arguments >= 1
};

// 2 (hk)^p sum_{u<k} sum_{v<h} (-1)^{u+v-1} ((uh+vk)/(hk)) F_p(u/k + v/h).
Rational theorem8_rhs(std::int64_t p, std::int64_t h, std::int64_t k,
                      EulerExtension ext);

// 2 sum (-1)^{u+v-1} E_p(u/k + v/h) over u<k, v<h with uh + vk < hk.
Rational restricted_lattice_sum(std::int64_t p, std::int64_t h, std::int64_t k);

struct LatticePartition {
  std::vector<std::int64_t> a;  // uh+vk in [0, hk)
  std::vector<std::int64_t> b;  // uh+vk in [hk+1, 2hk)
};

// Splits {uh + vk : 0 <= u < k, 0 <= v < h} at hk. Both lists are sorted.
// Requires gcd(h,k) = 1.
LatticePartition lattice_partition(std::int64_t h, std::int64_t k);

}  // namespace dcsum
