#include <numeric>
#include <vector>

#include "dcsum/appell.hpp"
#include "dcsum/umbral.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

using namespace dcsum;
using dcsum::testing::R;
using dcsum::testing::RationalGen;

TEST_CASE("umbral power examples") {
  for (std::int64_t p = 0; p <= 12; ++p) {
    const UmbralTerm one[] = {{Rational(1), Rational(), 0}};
    CHECK(umbral_power(one, p) == euler_number(static_cast<std::size_t>(p)));
  }
  const UmbralTerm pair[] = {{Rational(1), Rational(), 0}, {Rational(1), Rational(), 1}};
  CHECK(umbral_power(pair, 3) == R("1/2"));
  for (std::int64_t h = 1; h <= 6; ++h) {
    for (std::int64_t k = 1; k <= 6; ++k) {
      const UmbralTerm hk[] = {{Rational(h), Rational(), 0}, {Rational(k), Rational(), 1}};
      CHECK(umbral_power(hk, 1) == Rational(Int(-(h + k)), Int(2)));
    }
  }
  const UmbralTerm shifted[] = {{Rational(3), R("1/3"), 0}, {Rational(3), Rational(1), 1}};
  CHECK(umbral_power(shifted, 3) == R("-25/2"));
}

TEST_CASE("empty form and duplicate umbrae") {
  CHECK(umbral_power({}, 0) == Rational(1));
  CHECK(umbral_power({}, 4) == Rational());
  const UmbralTerm dup[] = {{Rational(1), Rational(), 2}, {Rational(2), R("1/2"), 2}};
  CHECK_THROWS_AS(umbral_power(dup, 2), PreconditionError);
  const UmbralTerm one[] = {{Rational(1), Rational(), 0}};
  CHECK_THROWS_AS(umbral_power(one, -1), PreconditionError);
}

TEST_CASE("single umbra reproduces the Euler polynomial") {
  RationalGen gen(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational x = gen();
    const UmbralTerm term[] = {{Rational(1), x, 5}};
    for (std::int64_t n = 0; n <= 10; ++n) {
      REQUIRE(umbral_power(term, n) == eval_poly(euler_poly(static_cast<std::size_t>(n)), x));
    }
  }
}

TEST_CASE("two-umbra expansion matches the term-by-term oracle") {
  RationalGen gen(99, 9, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a = gen();
    const Rational b = gen();
    const Rational x = gen();
    const Rational y = gen();
    const UmbralTerm terms[] = {{a, x, 0}, {b, y, 1}};
    const UmbralTerm flat[] = {{a, Rational(), 0}, {b, Rational(), 1}};
    for (std::int64_t p = 0; p <= 9; ++p) {
      REQUIRE(umbral_power(terms, p) == oracle::umbral2(a, x, b, y, p));
      REQUIRE(umbral_power(flat, p) == oracle::umbral2(a, Rational(), b, Rational(), p));
    }
  }
}

TEST_CASE("three umbrae expand multinomially") {
  // (E + E' + E'')^p = sum over s of C(p,s) E_s (E' + E'')^{p-s}
  const UmbralTerm three[] = {{Rational(1), Rational(), 0}, {Rational(1), Rational(), 1},
                              {Rational(1), Rational(), 2}};
  for (std::int64_t p = 0; p <= 8; ++p) {
    Rational expected;
    for (std::int64_t s = 0; s <= p; ++s) {
      expected += oracle::binom(p, s) * oracle::euler(s) *
                  oracle::umbral2(Rational(1), Rational(), Rational(1), Rational(), p - s);
    }
    CHECK(umbral_power(three, p) == expected);
  }
}

TEST_CASE("reciprocity right-hand side") {
  CHECK(theorem9_rhs(3, 1, 1) == R("7/4"));
  CHECK(theorem9_rhs(3, 1, 3) == R("-67/4"));
  CHECK(theorem9_rhs(5, 3, 5) == R("3413801/2"));
  CHECK(theorem9_rhs(3, 5, 3) == R("-6927/4"));
  CHECK_THROWS_AS(theorem9_rhs(2, 1, 3), PreconditionError);
  CHECK_THROWS_AS(theorem9_rhs(0, 1, 3), PreconditionError);
  CHECK_THROWS_AS(theorem9_rhs(3, 0, 3), PreconditionError);
}

TEST_CASE("alternating two-umbra sum and its closed form") {
  // Both sides computed independently here.
  for (std::int64_t p = 3; p <= 7; p += 2) {
    for (std::int64_t k = 1; k <= 9; k += 2) {
      for (std::int64_t h = 1; h <= 9; ++h) {
        if (std::gcd(h, k) != 1) continue;
        Rational closed;
        for (std::int64_t s = 0; s <= p; ++s) {
          closed += oracle::binom(p, s) * rat_pow(Rational(h * k), static_cast<unsigned long>(p - s)) *
                    oracle::euler(s) * oracle::euler(p - s, Rational(1));
        }
        REQUIRE(theorem7_closed(p, h, k) == closed);

        Rational sum;
        for (std::int64_t u = 0; u < k; ++u) {
          const Rational term = oracle::umbral2(Rational(h), Rational(Int(u), Int(k)), Rational(1),
                                                Rational(h - (h * u) / k), p);
          sum += (u % 2 == 0) ? term : -term;
        }
        REQUIRE(theorem7_sum(p, h, k) == rat_pow(Rational(k), static_cast<unsigned long>(p)) * sum);
      }
    }
  }
}
