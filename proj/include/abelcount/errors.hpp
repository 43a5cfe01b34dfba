#pragma once

#include <stdexcept>

namespace abelcount {

/// Malformed input: zero denominator, zero precision, genus 0, k = 0, ...
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but outside the domain where a formula is defined
/// (e.g. the fixed-linear-system count at genus 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A coefficient was requested at or beyond a series' truncation order.
class PrecisionError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A value expected to be an integer carried a non-unit denominator.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace abelcount
