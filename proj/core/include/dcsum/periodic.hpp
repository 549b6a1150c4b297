#pragma once

// Periodic and antiperiodic extensions evaluated exactly at rational points.

#include <cstddef>
#include <utility>

#include "dcsum/rational.hpp"

namespace dcsum {

struct FloorFrac {
  Int whole;      // [x], rounded toward -infinity
  Rational frac;  // {x} in [0, 1)
};

FloorFrac floor_frac(const Rational& x);

// ((x)) = x - [x] - 1/2 off the integers, 0 on them.
Rational sawtooth(const Rational& x);

// B_p({x}), period 1. Requires p >= 1.
Rational bernoulli_function(std::size_t p, const Rational& x);

// (-1)^{[x]} E_p({x}): agrees with E_p on [0,1) and flips sign under x -> x+1.
Rational euler_function(std::size_t p, const Rational& x);

}  // namespace dcsum
