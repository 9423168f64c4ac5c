#include <doctest.h>

#include "betalab/rational.hpp"
#include "betalab/rng.hpp"
#include "betalab/types.hpp"

using namespace betalab;

TEST_CASE("literals parse and print in canonical form") {
  CHECK(format_rational(parse_rational("3/4")) == "3/4");
  CHECK(format_rational(parse_rational("-2/5")) == "-2/5");
  CHECK(format_rational(parse_rational("7")) == "7");
  CHECK(format_rational(parse_rational("0")) == "0");
  CHECK(format_rational(parse_rational("6/8")) == "3/4");
  CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
  CHECK(format_rational(parse_rational("0/9")) == "0");
}

TEST_CASE("canonical reduced form invariants") {
  const Rational r = parse_rational("-6/8");
  CHECK(numerator(r) == -3);
  CHECK(denominator(r) == 4);
  CHECK(denominator(r) > 0);
}

TEST_CASE("malformed literals are rejected") {
  CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("--1"), ArgumentError);
  CHECK_THROWS_AS(parse_rational(""), ArgumentError);
  CHECK_THROWS_AS(parse_rational("a/b"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("1.5"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("1/"), ArgumentError);
}

TEST_CASE("arithmetic laws on seeded rationals") {
  Rng rng(7);
  auto draw = [&]() {
    const long long p = static_cast<long long>(rng.bounded(41)) - 20;
    const long long q = 1 + static_cast<long long>(rng.bounded(12));
    return Rational(p, q);
  };
  for (int i = 0; i < 200; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    // Comparison agrees with the sign of the difference.
    CHECK((a < b) == (a - b < 0));
    CHECK((a == b) == (a - b == 0));
    // Parse/print round trip.
    CHECK(parse_rational(format_rational(a)) == a);
  }
}

TEST_CASE("denominators grow without overflow") {
  // Harmonic-style sums mix 1/k terms exactly.
  Rational sum(0);
  for (int k = 1; k <= 60; ++k) sum += Rational(1, k);
  Rational back(0);
  for (int k = 60; k >= 1; --k) back += Rational(1, k);
  CHECK(sum == back);
  CHECK(sum > 4);
  CHECK(sum < 5);
}

TEST_CASE("rat helper validates the denominator") {
  CHECK(rat(3, 6) == parse_rational("1/2"));
  CHECK_THROWS_AS(rat(1, 0), ArgumentError);
  CHECK_THROWS_AS(rat(1, -2), ArgumentError);
}
