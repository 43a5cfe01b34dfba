#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "abelcount/rational.hpp"

namespace abelcount {

/// Truncated formal power series in q with exact rational coefficients,
/// known modulo q^prec. Binary operations return the smaller of the two
/// precisions; there is no implicit zero-extension, and reading a
/// coefficient at or beyond prec is an error.
///
/// Values are immutable once built, so they can be shared across threads.
class QSeries {
 public:
  /// Takes ownership of coefficients 0..prec-1. Throws ArgumentError if empty.
  explicit QSeries(std::vector<ExactRational> coefficients);

  static QSeries zero(std::size_t prec);
  static QSeries one(std::size_t prec);
  /// c * q^exponent at the given precision (the zero series if exponent >= prec).
  static QSeries monomial(std::size_t exponent, const ExactRational& c, std::size_t prec);

  [[nodiscard]] std::size_t prec() const { return coefficients_.size(); }
  [[nodiscard]] std::span<const ExactRational> coefficients() const { return coefficients_; }

  /// Throws PrecisionError when k >= prec().
  [[nodiscard]] const ExactRational& coefficient(std::size_t k) const;

  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  std::vector<ExactRational> coefficients_;
};

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries scale(const ExactRational& c, const QSeries& f);

/// Cauchy product truncated to min(a.prec, b.prec). Dispatches to the
/// parallel kernel once the precision makes it worthwhile.
QSeries mul(const QSeries& a, const QSeries& b);

/// f^e at f.prec by binary exponentiation; pow(f, 0) is one(f.prec).
QSeries pow(const QSeries& f, unsigned e);

/// D = q d/dq: the q^k coefficient is multiplied by k. Precision is kept.
QSeries d_operator(const QSeries& f);

/// Drops every coefficient at exponent >= prec. Throws PrecisionError if
/// prec exceeds f.prec(), ArgumentError if prec is zero.
QSeries truncate(const QSeries& f, std::size_t prec);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

namespace kernels {

/// Below this truncation order mul() stays on the serial kernel.
inline constexpr std::size_t kParallelMulThreshold = 48;

/// Reference O(P^2) convolution, one output coefficient at a time.
QSeries mul_serial(const QSeries& a, const QSeries& b);

/// Same convolution with output coefficients distributed over OpenMP
/// threads. Bit-identical to mul_serial.
QSeries mul_parallel(const QSeries& a, const QSeries& b);

}  // namespace kernels

}  // namespace abelcount
