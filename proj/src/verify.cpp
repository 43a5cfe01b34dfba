#include "abelcount/verify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "abelcount/errors.hpp"
#include "abelcount/oracle.hpp"
#include "abelcount/qseries.hpp"

namespace abelcount {

namespace {

const std::array<GoldenTable, 2> kGolden = {{
    {InvariantKind::FLS,
     2,
     0,
     {{1, 12, 36, 112, 150, 432, 392, 960},
      {1, 18, 120, 500, 1620, 4116, 9920, 19440},
      {1, 24, 240, 1464, 6594, 23808, 73008, 198480},
      {1, 30, 396, 3220, 18960, 88452, 344960, 1169520}}},
    {InvariantKind::N,
     2,
     0,
     {{2, 12, 24, 56, 60, 144, 112, 240},
      {3, 36, 180, 600, 1620, 3528, 7440, 12960},
      {4, 72, 576, 2928, 11304, 35712, 97344, 238176},
      {5, 120, 1320, 9200, 47400, 196560, 689920, 2126400}}},
}};

// Records the first mismatch of a check; later ones only bump the count.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect_equal(InvariantKind kind, int g, int n, const BigInt& expected, const BigInt& actual,
                    std::string_view what = {}) {
    ++result_.cells;
    if (expected == actual) return;
    if (!result_.passed) return;
    result_.passed = false;
    std::ostringstream msg;
    msg << "kind=" << to_string(kind) << " g=" << g << " n=" << n;
    if (!what.empty()) msg << " (" << what << ")";
    msg << ": expected " << to_decimal(expected) << ", got " << to_decimal(actual);
    result_.failure = msg.str();
  }

  void fail(std::string message) {
    ++result_.cells;
    if (result_.passed) result_.failure = std::move(message);
    result_.passed = false;
  }

  void pass() { ++result_.cells; }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string golden_name(InvariantKind kind) {
  return "golden table " + std::string(to_string(kind));
}

}  // namespace

std::span<const GoldenTable> embedded_golden_tables() { return kGolden; }

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

VerifyReport run_verify(const VerifyOptions& options, std::span<const GoldenTable> golden) {
  if (options.g_max < 1) throw ArgumentError("--gmax must be at least 1");
  if (options.n_max < 0) throw ArgumentError("--nmax must be non-negative");
  if (options.sigma_max < 1) throw ArgumentError("--sigma-max must be at least 1");

  const int g_max = options.g_max;
  const int n_max = options.n_max;
  VerifyReport report;

  for (const auto& table : golden) {
    Check check(golden_name(table.kind));
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      const int g = table.g_lo + static_cast<int>(r);
      if (g > g_max) break;
      for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
        const int n = table.n_lo + static_cast<int>(c);
        if (n > n_max) break;
        check.expect_equal(table.kind, g, n, BigInt(static_cast<unsigned long>(table.rows[r][c])),
                           invariant(table.kind, g, n), "published value vs closed form");
      }
    }
    report.checks.push_back(check.take());
  }

  for (const auto kind : {InvariantKind::N, InvariantKind::FLS, InvariantKind::N12, InvariantKind::N34}) {
    Check check("oracle equivalence " + std::string(to_string(kind)));
    for (int g = min_genus(kind); g <= g_max; ++g) {
      for (int n = 0; n <= n_max; ++n) {
        check.expect_equal(kind, g, n, oracle::oracle_invariant(kind, g, n), invariant(kind, g, n),
                           "oracle vs closed form");
      }
    }
    report.checks.push_back(check.take());
  }

  {
    Check scaling("identity N = g * N34");
    Check shift("identity N12 = (n+g-1) * N34");
    Check fls("identity (g-1) * FLS = N12");
    for (int g = 1; g <= g_max; ++g) {
      for (int n = 0; n <= n_max; ++n) {
        const BigInt n34 = invariant(InvariantKind::N34, g, n);
        scaling.expect_equal(InvariantKind::N, g, n, BigInt(g) * n34, invariant(InvariantKind::N, g, n));
        const BigInt n12 = invariant(InvariantKind::N12, g, n);
        shift.expect_equal(InvariantKind::N12, g, n, BigInt(n + g - 1) * n34, n12);
        if (g >= 2) {
          fls.expect_equal(InvariantKind::FLS, g, n, n12, BigInt(g - 1) * invariant(InvariantKind::FLS, g, n));
        }
      }
    }
    report.checks.push_back(scaling.take());
    report.checks.push_back(shift.take());
    report.checks.push_back(fls.take());
  }

  {
    Check series("FLS identity series");
    const auto prec = static_cast<std::size_t>(g_max + n_max);
    for (int g = 2; g <= g_max; ++g) {
      const QSeries lhs = fls_identity_series(g, prec);
      const QSeries rhs = generating_series(InvariantKind::FLS, g, prec);
      if (lhs == rhs) {
        series.pass();
        continue;
      }
      for (std::size_t k = 0; k < prec; ++k) {
        if (lhs.coefficient(k) != rhs.coefficient(k)) {
          series.fail("kind=fls g=" + std::to_string(g) + " exponent " + std::to_string(k) +
                      ": generating series " + rhs.coefficient(k).to_string() +
                      ", identity series " + lhs.coefficient(k).to_string());
          break;
        }
      }
    }
    report.checks.push_back(series.take());
  }

  {
    Check vanishing("vanishing of zero13/zero14/zero23/zero24");
    for (const auto kind : kAllKinds) {
      if (!is_zero_kind(kind)) continue;
      for (int g = 1; g <= g_max; ++g) {
        for (int n = 0; n <= n_max; ++n) {
          vanishing.expect_equal(kind, g, n, BigInt(0), invariant(kind, g, n));
        }
      }
    }
    report.checks.push_back(vanishing.take());
  }

  {
    Check sigma("sublattice count vs divisor sum");
    for (int k = 1; k <= options.sigma_max; ++k) {
      const auto a = oracle::divisor_sum(static_cast<std::uint64_t>(k));
      const auto b = oracle::sublattice_count(static_cast<std::uint64_t>(k));
      if (a == b) {
        sigma.pass();
      } else {
        sigma.fail("k=" + std::to_string(k) + ": divisor_sum " + std::to_string(a) +
                   ", sublattice_count " + std::to_string(b));
      }
    }
    report.checks.push_back(sigma.take());
  }

  return report;
}

}  // namespace abelcount
