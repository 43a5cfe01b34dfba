#include "doctest.h"

#include <vector>

#include "abelcount/errors.hpp"
#include "abelcount/modular.hpp"

using namespace abelcount;

namespace {

std::vector<long> as_longs(const QSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coefficients()) out.push_back(to_integer(c).get_si());
  return out;
}

// sigma(k) by listing divisors; kept separate from the library's sieve.
long sigma(long k) {
  long s = 0;
  for (long d = 1; d <= k; ++d) {
    if (k % d == 0) s += d;
  }
  return s;
}

}  // namespace

TEST_CASE("kind names round-trip") {
  for (const auto kind : kAllKinds) CHECK(parse_kind(to_string(kind)) == kind);
  CHECK_FALSE(parse_kind("N").has_value());
  CHECK_FALSE(parse_kind("zero12").has_value());
  CHECK(is_zero_kind(InvariantKind::Zero23));
  CHECK_FALSE(is_zero_kind(InvariantKind::N34));
}

TEST_CASE("GenusNodeIndex") {
  const GenusNodeIndex idx(4, 3);
  CHECK(idx.exponent() == 6);
  CHECK_THROWS_AS(GenusNodeIndex(0, 0), ArgumentError);
  CHECK_THROWS_AS(GenusNodeIndex(2, -1), ArgumentError);
}

TEST_CASE("eisenstein_g2") {
  const auto g2 = eisenstein_g2(40);
  CHECK(g2.coefficient(0) == rational(-1, 24));
  CHECK(g2.coefficient(1) == ExactRational(1));
  CHECK(g2.coefficient(6) == ExactRational(12));
  CHECK(g2.coefficient(12) == ExactRational(28));
  for (std::size_t k = 1; k < 40; ++k) CHECK(g2.coefficient(k) == ExactRational(sigma(static_cast<long>(k))));
  CHECK(eisenstein_g2(1).prec() == 1);
  CHECK_THROWS_AS(eisenstein_g2(0), ArgumentError);
}

TEST_CASE("generating_series examples") {
  CHECK(as_longs(generating_series(InvariantKind::N, 2, 9)) ==
        std::vector<long>{0, 2, 12, 24, 56, 60, 144, 112, 240});
  CHECK(generating_series(InvariantKind::N, 1, 4) == QSeries::one(4));

  const auto fls3 = as_longs(generating_series(InvariantKind::FLS, 3, 10));
  CHECK(std::vector<long>(fls3.begin() + 2, fls3.end()) ==
        std::vector<long>{1, 18, 120, 500, 1620, 4116, 9920, 19440});

  CHECK(generating_series(InvariantKind::Zero13, 4, 5) == QSeries::zero(5));
  CHECK(generating_series(InvariantKind::N12, 1, 6).is_zero());
}

TEST_CASE("generating_series domain") {
  CHECK_THROWS_AS(generating_series(InvariantKind::FLS, 1, 5), DomainError);
  CHECK_THROWS_AS(generating_series(InvariantKind::N, 0, 5), ArgumentError);
  CHECK_THROWS_AS(generating_series(InvariantKind::N, 2, 0), ArgumentError);
}

TEST_CASE("invariant") {
  CHECK(invariant(InvariantKind::FLS, 4, 4) == 6594);
  CHECK(invariant(InvariantKind::N, 5, 7) == 2126400);
  CHECK(invariant(InvariantKind::N34, 2, 1) == 6);
  CHECK(invariant(InvariantKind::N, 1, 0) == 1);
  for (int n = 1; n < 6; ++n) CHECK(invariant(InvariantKind::N, 1, n) == 0);
  CHECK(invariant(InvariantKind::Zero24, 3, 3) == 0);
  CHECK_THROWS_AS(invariant(InvariantKind::FLS, 1, 0), DomainError);
  CHECK_THROWS_AS(invariant(InvariantKind::N, 2, -1), ArgumentError);
}

TEST_CASE("fls_identity_series") {
  const auto g2 = eisenstein_g2(9);
  CHECK(fls_identity_series(2, 9) == d_operator(d_operator(g2)));
  CHECK(as_longs(fls_identity_series(2, 9)) == std::vector<long>{0, 1, 12, 36, 112, 150, 432, 392, 960});
  CHECK(fls_identity_series(3, 6).coefficient(3) == ExactRational(18));
  for (std::size_t prec : {1, 5, 17}) {
    CHECK(fls_identity_series(5, prec) == generating_series(InvariantKind::FLS, 5, prec));
  }
  CHECK_THROWS_AS(fls_identity_series(1, 5), DomainError);
}

TEST_CASE("structural identities and support") {
  for (int g = 1; g <= 6; ++g) {
    for (int n = 0; n <= 8; ++n) {
      const auto n34 = invariant(InvariantKind::N34, g, n);
      CHECK(invariant(InvariantKind::N, g, n) == g * n34);
      CHECK(invariant(InvariantKind::N12, g, n) == (n + g - 1) * n34);
      if (g >= 2) CHECK((g - 1) * invariant(InvariantKind::FLS, g, n) == invariant(InvariantKind::N12, g, n));
    }
    if (g >= 2) {
      CHECK(invariant(InvariantKind::FLS, g, 0) == 1);
      CHECK(invariant(InvariantKind::N, g, 0) == g);
    }
    for (const auto kind : {InvariantKind::N, InvariantKind::FLS, InvariantKind::N12, InvariantKind::N34}) {
      if (g < min_genus(kind)) continue;
      const auto s = generating_series(kind, g, 12);
      for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(g) && k < s.prec(); ++k) {
        CHECK(s.coefficient(k).is_zero());
      }
    }
  }
}
