#pragma once

#include <random>
#include <vector>

#include "abelcount/qseries.hpp"

namespace abelcount::testing {

// Series with integer coefficients drawn uniformly from [lo, hi], plus an
// occasional small-denominator rational so canonicalization gets exercised.
inline QSeries random_series(std::mt19937_64& rng, std::size_t prec, long lo = -50, long hi = 50,
                             bool with_fractions = false) {
  std::uniform_int_distribution<long> value(lo, hi);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<ExactRational> coeffs;
  coeffs.reserve(prec);
  for (std::size_t k = 0; k < prec; ++k) {
    coeffs.push_back(with_fractions ? rational(value(rng), den(rng)) : ExactRational(value(rng)));
  }
  return QSeries(std::move(coeffs));
}

}  // namespace abelcount::testing
