#pragma once

// Euler and Bernoulli numbers and polynomials.
//
//   2 e^{xt} / (e^t + 1) = sum_n E_n(x) t^n / n!,   E_n = E_n(0)
//   t e^{xt} / (e^t - 1) = sum_n B_n(x) t^n / n!,   B_n = B_n(0)
//
// E_n here are the rational Euler numbers (E_1 = -1/2), not the integer
// secant numbers.

#include <cstddef>
#include <deque>
#include <shared_mutex>
#include <vector>

#include "dcsum/poly.hpp"
#include "dcsum/rational.hpp"

namespace dcsum {

// Memoized E_n, B_n and E_n(x). Entries are only ever appended, so an
// index once filled keeps its value. Reads take a shared lock; growth is
// serialized.
class SequenceCache {
 public:
  Rational euler(std::size_t n);
  Rational bernoulli(std::size_t n);
  Poly euler_poly(std::size_t n);

  // Process-wide instance used by the free functions below.
  static SequenceCache& global();

 private:
  void extend_euler(std::size_t n);
  void extend_bernoulli(std::size_t n);
  void extend_euler_poly(std::size_t n);

  mutable std::shared_mutex mutex_;
  std::deque<Rational> euler_;
  std::deque<Rational> bernoulli_;
  std::deque<Poly> euler_poly_;
};

// E_0 = 1, E_n = -1/2 * sum_{l<n} C(n,l) E_l.
Rational euler_number(std::size_t n);

// B_0 = 1, sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1.
Rational bernoulli_number(std::size_t n);

// E_n(x) = sum_l C(n,l) E_l x^{n-l}.
Poly euler_poly(std::size_t n);

// B_n(x) = sum_k C(n,k) B_k x^{n-k}.
Poly bernoulli_poly(std::size_t n);

// Shorthand for eval_poly(euler_poly(n), x).
Rational euler_value(std::size_t n, const Rational& x);

enum class SeriesKind { euler, bernoulli };

// [F_0(x), ..., F_{n_max}(x)] read off the exponential generating function
// by truncated power-series division, with no use of the recurrences above.
std::vector<Rational> series_coeffs_oracle(std::size_t n_max, SeriesKind kind,
                                           const Rational& x);

}  // namespace dcsum
