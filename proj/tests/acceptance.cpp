// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abelcount/cli.hpp"
#include "abelcount/modular.hpp"
#include "abelcount/oracle.hpp"
#include "abelcount/qseries.hpp"
#include "abelcount/verify.hpp"

using namespace abelcount;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && passed) {
      passed = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string cell(std::string_view kind, int g, int n) {
  std::ostringstream s;
  s << to_string(*parse_kind(kind)) << " g=" << g << " n=" << n;
  return s.str();
}

Outcome golden_tables() {
  Outcome o;
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli({"verify", "--gmax", "5", "--nmax", "7"}, out, err);
  o.require(code == kExitOk, "verify exited " + std::to_string(code) + ": " + err.str());
  o.require(out.str().find("PASS golden table fls (32 comparisons)") != std::string::npos,
            "FLS table not fully reproduced");
  o.require(out.str().find("PASS golden table n (32 comparisons)") != std::string::npos,
            "N table not fully reproduced");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto kind : {InvariantKind::N, InvariantKind::FLS, InvariantKind::N12, InvariantKind::N34}) {
    for (int g = min_genus(kind); g <= 6; ++g) {
      for (int n = 0; n <= 10; ++n) {
        const auto closed = invariant(kind, g, n);
        const auto brute = oracle::oracle_invariant(kind, g, n);
        o.require(closed == brute, cell(to_string(kind), g, n) + ": closed " + to_decimal(closed) +
                                       " oracle " + to_decimal(brute));
      }
    }
  }
  return o;
}

Outcome identity_suite() {
  Outcome o;
  for (int g = 2; g <= 8; ++g) {
    for (int n = 0; n <= 12; ++n) {
      const auto n34 = invariant(InvariantKind::N34, g, n);
      const auto n12 = invariant(InvariantKind::N12, g, n);
      o.require(invariant(InvariantKind::N, g, n) == g * n34, cell("n", g, n) + ": N != g*N34");
      o.require(n12 == (n + g - 1) * n34, cell("n12", g, n) + ": N12 != (n+g-1)*N34");
      o.require((g - 1) * invariant(InvariantKind::FLS, g, n) == n12, cell("fls", g, n) + ": (g-1)*FLS != N12");
      for (const auto kind : kAllKinds) {
        if (is_zero_kind(kind)) o.require(invariant(kind, g, n) == 0, cell(to_string(kind), g, n) + " nonzero");
      }
    }
    o.require(fls_identity_series(g, 25) == generating_series(InvariantKind::FLS, g, 25),
              "FLS identity series differs at g=" + std::to_string(g));
    for (const auto kind : kAllKinds) {
      if (is_zero_kind(kind)) o.require(generating_series(kind, g, 25).is_zero(), "zero series nonzero");
    }
  }
  return o;
}

Outcome sigma_oracle() {
  Outcome o;
  for (std::uint64_t k = 1; k <= 200; ++k) {
    o.require(oracle::sublattice_count(k) == oracle::divisor_sum(k), "sublattice/divisor mismatch at k=" + std::to_string(k));
  }
  std::mt19937_64 rng(1998);
  std::uniform_int_distribution<std::uint64_t> pick(1, 9999);
  int pairs = 0;
  while (pairs < 100) {
    const auto m = pick(rng);
    const auto n = pick(rng);
    if (std::gcd(m, n) != 1) continue;
    ++pairs;
    o.require(oracle::divisor_sum(m * n) == oracle::divisor_sum(m) * oracle::divisor_sum(n),
              "sigma not multiplicative at " + std::to_string(m) + "*" + std::to_string(n));
  }
  return o;
}

QSeries random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> value(-50, 50);
  std::vector<ExactRational> c;
  for (int k = 0; k < 20; ++k) c.emplace_back(value(rng));
  return QSeries(std::move(c));
}

Outcome series_ring() {
  Outcome o;
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = random_series(rng);
    const auto g = random_series(rng);
    const auto h = random_series(rng);
    const auto t = std::to_string(trial);
    o.require(mul(f, g) == mul(g, f), "commutativity, triple " + t);
    o.require(mul(mul(f, g), h) == mul(f, mul(g, h)), "associativity, triple " + t);
    o.require(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)), "distributivity, triple " + t);
    o.require(d_operator(mul(f, g)) == add(mul(d_operator(f), g), mul(f, d_operator(g))), "Leibniz, triple " + t);
  }
  return o;
}

Outcome genus_two_spot_value() {
  Outcome o;
  const BigInt expected = 4 * oracle::divisor_sum(2);
  o.require(expected == 12, "2^2 sigma(2) != 12");
  o.require(invariant(InvariantKind::FLS, 2, 1) == expected, "closed form");
  o.require(to_integer(fls_identity_series(2, 3).coefficient(2)) == expected, "identity series");
  o.require(oracle::oracle_fls(2, 1) == expected, "composition oracle");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden tables: 32 FLS + 32 N published values reproduced exactly", 1.0, golden_tables},
      {2, "oracle equivalence: g 1..6 (FLS 2..6), n 0..10, four kinds", 5.0, oracle_equivalence},
      {3, "identity suite: g 2..8, n 0..12, FLS series at prec 25, vanishing kinds", 5.0, identity_suite},
      {4, "sigma oracle: sublattices k<=200, multiplicativity on 100 coprime pairs", 1.0, sigma_oracle},
      {5, "series ring: 200 seeded triples at prec 20, ring axioms + Leibniz", 2.0, series_ring},
      {6, "spot value N^FLS_{2,1} = 12 = 2^2 sigma(2) on three paths", 1.0, genus_two_spot_value},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && elapsed >= c.time_limit_s) {
      o.passed = false;
      o.detail = "took " + std::to_string(elapsed) + " s, limit " + std::to_string(c.time_limit_s) + " s";
    }
    std::printf("%s [%d] %s (%.3f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), elapsed,
                o.passed ? "" : ": ", o.detail.c_str());
    if (!o.passed) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
