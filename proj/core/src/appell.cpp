#include "dcsum/appell.hpp"

#include <mutex>

namespace dcsum {

namespace {

Poly appell_poly(std::size_t n, const auto& number) {
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t l = 0; l <= n; ++l) {
    coeffs[n - l] = Rational(binomial(n, l)) * number(l);
  }
  return Poly(std::move(coeffs));
}

}  // namespace

SequenceCache& SequenceCache::global() {
  static SequenceCache cache;
  return cache;
}

Rational SequenceCache::euler(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < euler_.size()) return euler_[n];
  }
  std::unique_lock lock(mutex_);
  extend_euler(n);
  return euler_[n];
}

Rational SequenceCache::bernoulli(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < bernoulli_.size()) return bernoulli_[n];
  }
  std::unique_lock lock(mutex_);
  extend_bernoulli(n);
  return bernoulli_[n];
}

Poly SequenceCache::euler_poly(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < euler_poly_.size()) return euler_poly_[n];
  }
  std::unique_lock lock(mutex_);
  extend_euler(n);
  extend_euler_poly(n);
  return euler_poly_[n];
}

// Callers hold the unique lock.
void SequenceCache::extend_euler(std::size_t n) {
  const Rational half(Int(1), Int(2));
  while (euler_.size() <= n) {
    const std::size_t m = euler_.size();
    if (m == 0) {
      euler_.emplace_back(1);
      continue;
    }
    // Even-index values past E_0 vanish; the recurrence agrees.
    Rational acc;
    for (std::size_t l = 0; l < m; ++l) {
      if (euler_[l].is_zero()) continue;
      acc += Rational(binomial(m, l)) * euler_[l];
    }
    euler_.push_back(-half * acc);
  }
}

void SequenceCache::extend_bernoulli(std::size_t n) {
  while (bernoulli_.size() <= n) {
    const std::size_t m = bernoulli_.size();
    if (m == 0) {
      bernoulli_.emplace_back(1);
      continue;
    }
    // (m+1) B_m = -sum_{k<m} C(m+1,k) B_k
    Rational acc;
    for (std::size_t k = 0; k < m; ++k) {
      if (bernoulli_[k].is_zero()) continue;
      acc += Rational(binomial(m + 1, k)) * bernoulli_[k];
    }
    bernoulli_.push_back(-acc / Rational(m + 1));
  }
}

void SequenceCache::extend_euler_poly(std::size_t n) {
  while (euler_poly_.size() <= n) {
    const std::size_t m = euler_poly_.size();
    euler_poly_.push_back(appell_poly(m, [this](std::size_t l) { return euler_[l]; }));
  }
}

Rational euler_number(std::size_t n) { return SequenceCache::global().euler(n); }

Rational bernoulli_number(std::size_t n) { return SequenceCache::global().bernoulli(n); }

Poly euler_poly(std::size_t n) { return SequenceCache::global().euler_poly(n); }

Poly bernoulli_poly(std::size_t n) {
  auto& cache = SequenceCache::global();
  return appell_poly(n, [&cache](std::size_t k) { return cache.bernoulli(k); });
}

Rational euler_value(std::size_t n, const Rational& x) {
  return eval_poly(euler_poly(n), x);
}

std::vector<Rational> series_coeffs_oracle(std::size_t n_max, SeriesKind kind,
                                           const Rational& x) {
  // Ordinary power-series coefficients (in t) of numerator and denominator.
  //   euler:     2 e^{xt}  /  (e^t + 1)
  //   bernoulli:   e^{xt}  /  ((e^t - 1)/t)
  std::vector<Rational> num(n_max + 1);
  std::vector<Rational> den(n_max + 1);
  Rational inv_fact(1);   // 1/n!
  Rational x_pow(1);      // x^n
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      inv_fact /= Rational(n);
      x_pow *= x;
    }
    if (kind == SeriesKind::euler) {
      num[n] = Rational(2) * x_pow * inv_fact;
      den[n] = n == 0 ? Rational(2) : inv_fact;
    } else {
      num[n] = x_pow * inv_fact;
      den[n] = inv_fact / Rational(n + 1);
    }
  }

  std::vector<Rational> quot(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational acc = num[n];
    for (std::size_t i = 0; i < n; ++i) acc -= quot[i] * den[n - i];
    quot[n] = acc / den[0];
  }

  Rational fact(1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) fact *= Rational(n);
    quot[n] *= fact;
  }
  return quot;
}

}  // namespace dcsum
