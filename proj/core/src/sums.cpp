#include "dcsum/sums.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dcsum/appell.hpp"
#include "dcsum/periodic.hpp"

namespace dcsum {

namespace {

void require_positive(std::int64_t v, const char* name, const char* op) {
  if (v < 1) {
    throw PreconditionError(std::string(op) + ": " + name + " must be >= 1, got " +
                            std::to_string(v));
  }
}

void require_coprime(std::int64_t h, std::int64_t k, const char* op) {
  if (std::gcd(h, k) != 1) {
    throw PreconditionError(std::string(op) + ": gcd(" + std::to_string(h) + ", " +
                            std::to_string(k) + ") != 1");
  }
}

Rational frac(std::int64_t num, std::int64_t den) { return Rational(Int(num), Int(den)); }

}  // namespace

Rational dedekind_sum(std::int64_t h, std::int64_t k) {
  require_positive(h, "h", "dedekind_sum");
  require_positive(k, "k", "dedekind_sum");
  require_coprime(h, k, "dedekind_sum");
  Rational acc;
  for (std::int64_t u = 1; u < k; ++u) {
    acc += sawtooth(frac(u, k)) * sawtooth(frac(h * u, k));
  }
  return acc;
}

Rational gen_dedekind_sum(std::int64_t p, std::int64_t h, std::int64_t k) {
  require_positive(p, "p", "gen_dedekind_sum");
  require_positive(h, "h", "gen_dedekind_sum");
  require_positive(k, "k", "gen_dedekind_sum");
  require_coprime(h, k, "gen_dedekind_sum");
  Rational acc;
  for (std::int64_t a = 1; a < k; ++a) {
    acc += frac(a, k) * bernoulli_function(static_cast<std::size_t>(p), frac(a * h, k));
  }
  return acc;
}

Rational dc_sum(std::int64_t p, std::int64_t h, std::int64_t k) {
  if (p < 0) throw PreconditionError("dc_sum: p must be >= 0");
  require_positive(h, "h", "dc_sum");
  require_positive(k, "k", "dc_sum");
  Rational acc;
  for (std::int64_t u = 1; u < k; ++u) {
    Rational term = frac(u, k) * euler_function(static_cast<std::size_t>(p), frac(h * u, k));
    if (neg_one_pow(u - 1) > 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return Rational(2) * acc;
}

Rational alt_power_sum(std::int64_t n, std::int64_t l) {
  require_positive(n, "n", "alt_power_sum");
  if (l < 0) throw PreconditionError("alt_power_sum: l must be >= 0");
  Int acc = 0;
  for (std::int64_t j = 0; j < n; ++j) {
    Int power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(j),
                  static_cast<unsigned long>(l));
    if (j % 2 == 0) {
      acc += power;
    } else {
      acc -= power;
    }
  }
  return Rational(Int(2 * acc));
}

Rational theorem8_rhs(std::int64_t p, std::int64_t h, std::int64_t k, EulerExtension ext) {
  require_positive(p, "p", "theorem8_rhs");
  require_positive(h, "h", "theorem8_rhs");
  require_positive(k, "k", "theorem8_rhs");
  const auto pu = static_cast<std::size_t>(p);
  const std::int64_t hk = h * k;
  Rational acc;
  for (std::int64_t u = 0; u < k; ++u) {
    for (std::int64_t v = 0; v < h; ++v) {
      const std::int64_t weight = u * h + v * k;
      if (weight == 0) continue;
      const Rational arg = frac(u, k) + frac(v, h);
      const Rational value = ext == EulerExtension::periodic ? euler_function(pu, arg)
                                                             : euler_value(pu, arg);
      Rational term = frac(weight, hk) * value;
      if (neg_one_pow(u + v - 1) > 0) {
        acc += term;
      } else {
        acc -= term;
      }
    }
  }
  return Rational(2) * rat_pow(Rational(hk), pu) * acc;
}

Rational restricted_lattice_sum(std::int64_t p, std::int64_t h, std::int64_t k) {
  require_positive(p, "p", "restricted_lattice_sum");
  require_positive(h, "h", "restricted_lattice_sum");
  require_positive(k, "k", "restricted_lattice_sum");
  const auto pu = static_cast<std::size_t>(p);
  Rational acc;
  for (std::int64_t u = 0; u < k; ++u) {
    for (std::int64_t v = 0; v < h; ++v) {
      if (u * h + v * k >= h * k) continue;
      Rational value = euler_value(pu, frac(u, k) + frac(v, h));
      if (neg_one_pow(u + v - 1) > 0) {
        acc += value;
      } else {
        acc -= value;
      }
    }
  }
  return Rational(2) * acc;
}

LatticePartition lattice_partition(std::int64_t h, std::int64_t k) {
  require_positive(h, "h", "lattice_partition");
  require_positive(k, "k", "lattice_partition");
  require_coprime(h, k, "lattice_partition");
  LatticePartition out;
  const std::int64_t hk = h * k;
  for (std::int64_t u = 0; u < k; ++u) {
    for (std::int64_t v = 0; v < h; ++v) {
      const std::int64_t w = u * h + v * k;
      if (w < hk) {
        out.a.push_back(w);
      } else {
        out.b.push_back(w);
      }
    }
  }
  std::sort(out.a.begin(), out.a.end());
  std::sort(out.b.begin(), out.b.end());
  return out;
}

}  // namespace dcsum
