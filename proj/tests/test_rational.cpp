#include "doctest.h"

#include <random>

#include "abelcount/errors.hpp"
#include "abelcount/rational.hpp"

using namespace abelcount;

TEST_CASE("rational canonicalizes sign, gcd and zero") {
  const auto g2_constant = rational(-1, 24);
  CHECK(g2_constant.numerator() == -1);
  CHECK(g2_constant.denominator() == 24);

  const auto zero = rational(0, 7);
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(zero.is_zero());

  const auto r = rational(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(rational(1, 0), ArgumentError);
  CHECK_THROWS_AS(rational(0, 0), ArgumentError);
}

TEST_CASE("to_integer") {
  CHECK(to_integer(ExactRational(12)) == 12);
  CHECK(to_integer(rational(0, 1)) == 0);
  CHECK(to_integer(rational(48, 4)) == 12);
  CHECK_THROWS_AS(to_integer(rational(-1, 24)), IntegralityError);
}

TEST_CASE("arithmetic keeps canonical form") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = rational(num(rng), den(rng));
    const auto b = rational(num(rng), den(rng));
    for (const auto& r : {a + b, a - b, a * b, -a}) {
      CHECK(r.denominator() > 0);
      BigInt g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      CHECK(g == 1);
    }
  }
}

TEST_CASE("decimal parsing") {
  CHECK(parse_decimal("2126400") == 2126400);
  CHECK(parse_decimal("-17") == -17);
  CHECK(to_decimal(parse_decimal("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK_THROWS_AS(parse_decimal(""), ArgumentError);
  CHECK_THROWS_AS(parse_decimal("12a"), ArgumentError);
  CHECK_THROWS_AS(parse_decimal("-"), ArgumentError);
}
