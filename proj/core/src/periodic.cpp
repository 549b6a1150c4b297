#include "dcsum/periodic.hpp"

#include "dcsum/appell.hpp"

namespace dcsum {

FloorFrac floor_frac(const Rational& x) {
  Int whole = floor(x);
  Rational frac = x - Rational(whole);
  return {std::move(whole), std::move(frac)};
}

Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return {};
  return floor_frac(x).frac - Rational(Int(1), Int(2));
}

Rational bernoulli_function(std::size_t p, const Rational& x) {
  if (p == 0) throw PreconditionError("bernoulli_function requires p >= 1");
  return eval_poly(bernoulli_poly(p), floor_frac(x).frac);
}

Rational euler_function(std::size_t p, const Rational& x) {
  const auto [whole, frac] = floor_frac(x);
  Rational value = euler_value(p, frac);
  return neg_one_pow(whole) > 0 ? value : -value;
}

}  // namespace dcsum
