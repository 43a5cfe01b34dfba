#include "abelcount/qseries.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "abelcount/errors.hpp"

namespace abelcount {

QSeries::QSeries(std::vector<ExactRational> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw ArgumentError("QSeries: precision must be positive");
}

QSeries QSeries::zero(std::size_t prec) {
  return QSeries(std::vector<ExactRational>(prec));
}

QSeries QSeries::one(std::size_t prec) { return monomial(0, 1, prec); }

QSeries QSeries::monomial(std::size_t exponent, const ExactRational& c, std::size_t prec) {
  std::vector<ExactRational> coeffs(prec);
  if (exponent < prec) coeffs[exponent] = c;
  return QSeries(std::move(coeffs));
}

const ExactRational& QSeries::coefficient(std::size_t k) const {
  if (k >= coefficients_.size()) {
    throw PrecisionError("coefficient of q^" + std::to_string(k) +
                         " requested from a series known modulo q^" +
                         std::to_string(coefficients_.size()));
  }
  return coefficients_[k];
}

bool QSeries::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const ExactRational& c) { return c.is_zero(); });
}

QSeries add(const QSeries& a, const QSeries& b) {
  const std::size_t prec = std::min(a.prec(), b.prec());
  std::vector<ExactRational> out(prec);
  for (std::size_t k = 0; k < prec; ++k) out[k] = a.coefficients()[k] + b.coefficients()[k];
  return QSeries(std::move(out));
}

QSeries sub(const QSeries& a, const QSeries& b) {
  const std::size_t prec = std::min(a.prec(), b.prec());
  std::vector<ExactRational> out(prec);
  for (std::size_t k = 0; k < prec; ++k) out[k] = a.coefficients()[k] - b.coefficients()[k];
  return QSeries(std::move(out));
}

QSeries scale(const ExactRational& c, const QSeries& f) {
  std::vector<ExactRational> out(f.prec());
  for (std::size_t k = 0; k < f.prec(); ++k) out[k] = c * f.coefficients()[k];
  return QSeries(std::move(out));
}

namespace {

// Coefficient k of a*b. Zero terms are skipped, which matters for the
// (DG2)^e powers whose low coefficients vanish.
mpq_class convolve_at(std::span<const ExactRational> a, std::span<const ExactRational> b,
                      std::size_t k) {
  mpq_class acc(0);
  mpq_class term;
  for (std::size_t i = 0; i <= k; ++i) {
    const mpq_class& x = a[i].raw();
    if (sgn(x) == 0) continue;
    const mpq_class& y = b[k - i].raw();
    if (sgn(y) == 0) continue;
    term = x * y;
    acc += term;
  }
  return acc;
}

}  // namespace

namespace kernels {

QSeries mul_serial(const QSeries& a, const QSeries& b) {
  const std::size_t prec = std::min(a.prec(), b.prec());
  std::vector<ExactRational> out(prec);
  for (std::size_t k = 0; k < prec; ++k) {
    out[k] = ExactRational::from_raw(convolve_at(a.coefficients(), b.coefficients(), k));
  }
  return QSeries(std::move(out));
}

QSeries mul_parallel(const QSeries& a, const QSeries& b) {
  const std::size_t prec = std::min(a.prec(), b.prec());
  std::vector<ExactRational> out(prec);
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  const auto n = static_cast<std::ptrdiff_t>(prec);
  // Work grows linearly in k, so hand out small chunks dynamically.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] =
        ExactRational::from_raw(convolve_at(ac, bc, static_cast<std::size_t>(k)));
  }
  return QSeries(std::move(out));
}

}  // namespace kernels

QSeries mul(const QSeries& a, const QSeries& b) {
  if (std::min(a.prec(), b.prec()) >= kernels::kParallelMulThreshold) {
    return kernels::mul_parallel(a, b);
  }
  return kernels::mul_serial(a, b);
}

QSeries pow(const QSeries& f, unsigned e) {
  QSeries result = QSeries::one(f.prec());
  QSeries base = f;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

QSeries d_operator(const QSeries& f) {
  std::vector<ExactRational> out(f.prec());
  for (std::size_t k = 1; k < f.prec(); ++k) {
    out[k] = ExactRational(static_cast<long>(k)) * f.coefficients()[k];
  }
  return QSeries(std::move(out));
}

QSeries truncate(const QSeries& f, std::size_t prec) {
  if (prec > f.prec()) {
    throw PrecisionError("cannot extend a series known modulo q^" + std::to_string(f.prec()) +
                         " to q^" + std::to_string(prec));
  }
  const auto c = f.coefficients();
  return QSeries(std::vector<ExactRational>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(prec)));
}

}  // namespace abelcount
