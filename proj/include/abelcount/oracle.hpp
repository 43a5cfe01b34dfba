#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "abelcount/modular.hpp"
#include "abelcount/rational.hpp"

namespace abelcount::oracle {

// Brute-force counts over compositions of the fiber degrees. Nothing here
// touches QSeries: all arithmetic is on plain big integers, so agreement
// with the generating series is a real cross-check.

/// Ordered tuple of positive integers together with its sum.
class Composition {
 public:
  /// Throws ArgumentError if any part is zero or the parts do not sum to total.
  Composition(std::vector<std::uint32_t> parts, std::uint32_t total);

  [[nodiscard]] const std::vector<std::uint32_t>& parts() const { return parts_; }
  [[nodiscard]] std::uint32_t total() const { return total_; }
  [[nodiscard]] std::size_t size() const { return parts_.size(); }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  friend class CompositionRange;
  Composition() = default;

  std::vector<std::uint32_t> parts_;
  std::uint32_t total_ = 0;
};

/// All compositions of `total` into exactly `length` positive parts, in
/// lexicographic order, each exactly once. The only composition of 0 into 0
/// parts is the empty one; every other impossible request is an empty range.
///
/// Iteration is single-pass and the iterator owns its current composition.
class CompositionRange {
 public:
  CompositionRange(std::uint32_t total, std::uint32_t length) : total_(total), length_(length) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using pointer = const Composition*;
    using reference = const Composition&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class CompositionRange;
    Composition current_;
    bool done_ = true;
  };

  [[nodiscard]] iterator begin() const;
  [[nodiscard]] std::default_sentinel_t end() const { return {}; }

 private:
  std::uint32_t total_;
  std::uint32_t length_;
};

inline CompositionRange enumerate_compositions(std::uint32_t total, std::uint32_t length) {
  return {total, length};
}

/// sigma(k) by trial division up to sqrt(k). Throws ArgumentError for k == 0.
std::uint64_t divisor_sum(std::uint64_t k);

/// Number of index-k sublattices of Z^2, counted as Hermite normal forms
/// [[a, b], [0, d]] with a*d = k and 0 <= b < d. Throws ArgumentError for k == 0.
std::uint64_t sublattice_count(std::uint64_t k);

enum class Exec { serial, parallel };

/// g * sum over (g-1)-part compositions k of n+g-1 of prod k_i sigma(k_i).
BigInt oracle_n(int g, int n, Exec exec = Exec::parallel);

/// Same sum with the last part weighted k^2 sigma(k). Throws DomainError for g < 2.
BigInt oracle_fls(int g, int n, Exec exec = Exec::parallel);

/// (g-1) * sum with the first part weighted k^2 sigma(k); 0 at g = 1.
BigInt oracle_n12(int g, int n, Exec exec = Exec::parallel);

/// Sum of prod k_i sigma(k_i) over (g-1)-part compositions of n+g-1.
BigInt oracle_n34(int g, int n, Exec exec = Exec::parallel);

/// Dispatch by kind. The Zero kinds count an empty moduli space and return 0.
BigInt oracle_invariant(InvariantKind kind, int g, int n, Exec exec = Exec::parallel);

}  // namespace abelcount::oracle
