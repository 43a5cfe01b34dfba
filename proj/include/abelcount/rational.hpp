#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace abelcount {

/// Arbitrary-precision signed integer. Every count in this library is one.
using BigInt = mpz_class;

/// Exact rational number in canonical form: positive denominator, numerator
/// and denominator coprime, zero stored as 0/1. The representation is
/// re-canonicalized after every arithmetic operation.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// num/den reduced to lowest terms. Throws ArgumentError if den == 0.
  ExactRational(const BigInt& num, const BigInt& den);

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  /// "p/q", or just "p" when the denominator is 1.
  [[nodiscard]] std::string to_string() const;

  ExactRational& operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  ExactRational& operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  ExactRational& operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator-(const ExactRational& a) {
    ExactRational r;
    r.value_ = -a.value_;
    return r;
  }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    return os << r.to_string();
  }

  /// Access for kernels that want GMP's fused operations.
  [[nodiscard]] const mpq_class& raw() const { return value_; }
  static ExactRational from_raw(mpq_class v);

 private:
  mpq_class value_;
};

/// Convenience constructor matching the usual num/den notation.
ExactRational rational(const BigInt& num, const BigInt& den);

/// The numerator of r. Throws IntegralityError if r's denominator is not 1.
BigInt to_integer(const ExactRational& r);

/// Decimal representation of a big integer.
std::string to_decimal(const BigInt& value);

/// Parses a signed decimal integer; throws ArgumentError on anything else.
BigInt parse_decimal(const std::string& text);

}  // namespace abelcount
