#include "abelcount/oracle.hpp"

#include <numeric>
#include <string>

#include "abelcount/errors.hpp"

namespace abelcount::oracle {

Composition::Composition(std::vector<std::uint32_t> parts, std::uint32_t total)
    : parts_(std::move(parts)), total_(total) {
  std::uint64_t sum = 0;
  for (auto p : parts_) {
    if (p == 0) throw ArgumentError("composition parts must be positive");
    sum += p;
  }
  if (sum != total_) throw ArgumentError("composition parts do not sum to its total");
}

CompositionRange::iterator CompositionRange::begin() const {
  iterator it;
  const bool exists = (length_ == 0) ? (total_ == 0) : (total_ >= length_);
  if (!exists) return it;
  it.current_.total_ = total_;
  it.current_.parts_.assign(length_, 1);
  if (length_ > 0) it.current_.parts_.back() = total_ - (length_ - 1);
  it.done_ = false;
  return it;
}

CompositionRange::iterator& CompositionRange::iterator::operator++() {
  auto& p = current_.parts_;
  // Successor in lex order: find the rightmost part beyond the first that
  // exceeds 1, move one unit from the tail into its left neighbour, and
  // push the rest of the tail into the last slot.
  std::size_t j = p.size();
  while (j > 1 && p[j - 1] == 1) --j;
  if (j <= 1) {
    done_ = true;
    return *this;
  }
  const std::size_t i = j - 2;
  std::uint32_t tail = 0;
  for (std::size_t t = i + 1; t < p.size(); ++t) tail += p[t];
  ++p[i];
  --tail;
  for (std::size_t t = i + 1; t + 1 < p.size(); ++t) p[t] = 1;
  p.back() = tail - static_cast<std::uint32_t>(p.size() - 2 - i);
  return *this;
}

std::uint64_t divisor_sum(std::uint64_t k) {
  if (k == 0) throw ArgumentError("divisor_sum: k must be positive");
  std::uint64_t sum = 0;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d != 0) continue;
    sum += d;
    const std::uint64_t co = k / d;
    if (co != d) sum += co;
  }
  return sum;
}

std::uint64_t sublattice_count(std::uint64_t k) {
  if (k == 0) throw ArgumentError("sublattice_count: k must be positive");
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= k; ++a) {
    for (std::uint64_t d = 1; d <= k; ++d) {
      if (a * d != k) continue;
      for (std::uint64_t b = 0; b < d; ++b) ++count;
    }
  }
  return count;
}

namespace {

enum class Marked { none, first, last };

// Per-degree weights: plain[k] = k sigma(k) for a fiber curve with one
// marked point, doubled[k] = k^2 sigma(k) for one carrying two.
struct Weights {
  std::vector<BigInt> plain;
  std::vector<BigInt> doubled;

  explicit Weights(std::uint32_t max_degree) : plain(max_degree + 1), doubled(max_degree + 1) {
    for (std::uint32_t k = 1; k <= max_degree; ++k) {
      const BigInt s(static_cast<unsigned long>(divisor_sum(k)));
      plain[k] = s * k;
      doubled[k] = plain[k] * k;
    }
  }
};

BigInt weight_of(const std::vector<std::uint32_t>& parts, const Weights& w, Marked marked) {
  BigInt product = 1;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool special = (marked == Marked::first && i == 0) ||
                         (marked == Marked::last && i + 1 == parts.size());
    product *= special ? w.doubled[parts[i]] : w.plain[parts[i]];
  }
  return product;
}

BigInt composition_sum_serial(std::uint32_t total, std::uint32_t length, Marked marked) {
  const Weights w(total);
  BigInt sum = 0;
  for (const auto& c : enumerate_compositions(total, length)) sum += weight_of(c.parts(), w, marked);
  return sum;
}

// Splits the composition space by the value of the first part. Each bucket
// is summed independently and buckets are reduced in order.
BigInt composition_sum_parallel(std::uint32_t total, std::uint32_t length, Marked marked) {
  if (length < 2 || total < length) return composition_sum_serial(total, length, marked);
  const Weights w(total);
  const std::uint32_t max_first = total - (length - 1);
  std::vector<BigInt> partial(max_first + 1);
  const auto buckets = static_cast<std::ptrdiff_t>(max_first);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t b = 0; b < buckets; ++b) {
    const auto first = static_cast<std::uint32_t>(b + 1);
    const BigInt& head = marked == Marked::first ? w.doubled[first] : w.plain[first];
    const Marked tail_mark = marked == Marked::last ? Marked::last : Marked::none;
    BigInt sum = 0;
    for (const auto& c : enumerate_compositions(total - first, length - 1)) {
      sum += weight_of(c.parts(), w, tail_mark);
    }
    partial[first] = head * sum;
  }
  return std::accumulate(partial.begin(), partial.end(), BigInt(0));
}

BigInt composition_sum(int g, int n, Marked marked, Exec exec) {
  const auto total = static_cast<std::uint32_t>(n + g - 1);
  const auto length = static_cast<std::uint32_t>(g - 1);
  return exec == Exec::parallel ? composition_sum_parallel(total, length, marked)
                                : composition_sum_serial(total, length, marked);
}

void check_args(int g, int n, int min_g) {
  if (g < 1) throw ArgumentError("genus must be at least 1, got " + std::to_string(g));
  if (n < 0) throw ArgumentError("node count must be non-negative, got " + std::to_string(n));
  if (g < min_g) {
    throw DomainError("the fixed-linear-system count is defined only for genus >= 2");
  }
}

}  // namespace

BigInt oracle_n(int g, int n, Exec exec) {
  check_args(g, n, 1);
  return BigInt(g) * composition_sum(g, n, Marked::none, exec);
}

BigInt oracle_fls(int g, int n, Exec exec) {
  check_args(g, n, 2);
  return composition_sum(g, n, Marked::last, exec);
}

BigInt oracle_n12(int g, int n, Exec exec) {
  check_args(g, n, 1);
  if (g == 1) return 0;
  return BigInt(g - 1) * composition_sum(g, n, Marked::first, exec);
}

BigInt oracle_n34(int g, int n, Exec exec) {
  check_args(g, n, 1);
  return composition_sum(g, n, Marked::none, exec);
}

BigInt oracle_invariant(InvariantKind kind, int g, int n, Exec exec) {
  switch (kind) {
    case InvariantKind::N:
      return oracle_n(g, n, exec);
    case InvariantKind::FLS:
      return oracle_fls(g, n, exec);
    case InvariantKind::N12:
      return oracle_n12(g, n, exec);
    case InvariantKind::N34:
      return oracle_n34(g, n, exec);
    default:
      check_args(g, n, 1);
      return 0;
  }
}

}  // namespace abelcount::oracle
