#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abelcount/modular.hpp"

namespace abelcount {

/// A published table of counts: rows g = g_lo.., columns n = n_lo...
struct GoldenTable {
  InvariantKind kind;
  int g_lo;
  int n_lo;
  std::vector<std::vector<std::uint64_t>> rows;
};

/// The two reference tables (N^FLS and N for g = 2..5, n = 0..7).
std::span<const GoldenTable> embedded_golden_tables();

struct VerifyOptions {
  int g_max = 5;
  int n_max = 7;
  int sigma_max = 200;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cells = 0;   // comparisons performed
  std::string failure;     // first mismatch, empty when passed
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
  /// The first failing check, or nullptr.
  [[nodiscard]] const CheckResult* first_failure() const;
};

/// Runs every check over g <= g_max, n <= n_max and k <= sigma_max:
/// golden-table comparison (restricted to the requested ranges), oracle vs
/// closed form for each non-vanishing kind, the scaling / D-shift / FLS
/// identities, vanishing of the Zero kinds, and sublattice vs divisor sums.
/// Throws ArgumentError unless all bounds are >= 1 (n_max >= 0).
VerifyReport run_verify(const VerifyOptions& options,
                        std::span<const GoldenTable> golden = embedded_golden_tables());

}  // namespace abelcount
