#include "abelcount/rational.hpp"

#include <utility>

#include "abelcount/errors.hpp"

namespace abelcount {

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArgumentError("rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

std::string ExactRational::to_string() const { return value_.get_str(10); }

ExactRational ExactRational::from_raw(mpq_class v) {
  v.canonicalize();
  ExactRational r;
  r.value_ = std::move(v);
  return r;
}

ExactRational rational(const BigInt& num, const BigInt& den) { return {num, den}; }

BigInt to_integer(const ExactRational& r) {
  if (!r.is_integer()) {
    throw IntegralityError("to_integer: " + r.to_string() + " is not an integer");
  }
  return r.numerator();
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(const std::string& text) {
  std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (i == text.size()) throw ArgumentError("not a decimal integer: '" + text + "'");
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ArgumentError("not a decimal integer: '" + text + "'");
    }
  }
  BigInt v;
  v.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return v;
}

}  // namespace abelcount
