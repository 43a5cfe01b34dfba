#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "abelcount/modular.hpp"
#include "abelcount/oracle.hpp"
#include "abelcount/rational.hpp"

namespace abelcount {

/// Inclusive integer interval [lo, hi].
struct IntRange {
  int lo = 0;
  int hi = 0;

  [[nodiscard]] bool empty() const { return hi < lo; }
  [[nodiscard]] std::size_t size() const { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

enum class Source { closed_form, oracle };

std::string_view to_string(Source source);

/// Grid of counts: rows are genera, columns node counts.
class CountTable {
 public:
  /// Throws ArgumentError when the grid shape does not match the ranges.
  CountTable(InvariantKind kind, IntRange g_range, IntRange n_range, Source source,
             std::vector<std::vector<BigInt>> values);

  [[nodiscard]] InvariantKind kind() const { return kind_; }
  [[nodiscard]] IntRange g_range() const { return g_range_; }
  [[nodiscard]] IntRange n_range() const { return n_range_; }
  [[nodiscard]] Source source() const { return source_; }
  [[nodiscard]] const std::vector<std::vector<BigInt>>& values() const { return values_; }

  /// Throws ArgumentError outside the ranges.
  [[nodiscard]] const BigInt& at(int g, int n) const;

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  InvariantKind kind_;
  IntRange g_range_;
  IntRange n_range_;
  Source source_;
  std::vector<std::vector<BigInt>> values_;
};

/// Fills every cell from the closed form or the oracle. Cells are computed
/// independently, in parallel for Exec::parallel.
/// Throws ArgumentError on empty ranges, g_lo < 1 or n_lo < 0, and
/// DomainError when an FLS table starts below genus 2.
CountTable build_table(InvariantKind kind, IntRange g_range, IntRange n_range, Source source,
                       oracle::Exec exec = oracle::Exec::parallel);

std::string to_markdown(const CountTable& table);
std::string to_csv(const CountTable& table);

/// {"kind", "g_range", "n_range", "source", "values"}; counts are decimal strings.
std::string to_json(const CountTable& table);

/// Inverse of to_json. Throws ArgumentError on malformed input.
CountTable table_from_json(std::string_view text);

}  // namespace abelcount
