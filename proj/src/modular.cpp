#include "abelcount/modular.hpp"

#include <string>
#include <vector>

#include "abelcount/errors.hpp"

namespace abelcount {

namespace {

struct KindName {
  InvariantKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 8> kKindNames = {{
    {InvariantKind::N, "n"},
    {InvariantKind::FLS, "fls"},
    {InvariantKind::N12, "n12"},
    {InvariantKind::N34, "n34"},
    {InvariantKind::Zero13, "zero13"},
    {InvariantKind::Zero14, "zero14"},
    {InvariantKind::Zero23, "zero23"},
    {InvariantKind::Zero24, "zero24"},
}};

void check_genus(InvariantKind kind, int g) {
  if (g < 1) throw ArgumentError("genus must be at least 1, got " + std::to_string(g));
  if (kind == InvariantKind::FLS && g < 2) {
    throw DomainError("the fixed-linear-system count is defined only for genus >= 2");
  }
}

// DG2 at prec, i.e. sum k*sigma(k) q^k. Built directly from a divisor sieve.
QSeries d_g2(std::size_t prec) { return d_operator(eisenstein_g2(prec)); }

}  // namespace

std::string_view to_string(InvariantKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<InvariantKind> parse_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

bool is_zero_kind(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::Zero13:
    case InvariantKind::Zero14:
    case InvariantKind::Zero23:
    case InvariantKind::Zero24:
      return true;
    default:
      return false;
  }
}

int min_genus(InvariantKind kind) { return kind == InvariantKind::FLS ? 2 : 1; }

GenusNodeIndex::GenusNodeIndex(int g, int n) : g_(g), n_(n) {
  if (g < 1) throw ArgumentError("genus must be at least 1, got " + std::to_string(g));
  if (n < 0) throw ArgumentError("node count must be non-negative, got " + std::to_string(n));
}

QSeries eisenstein_g2(std::size_t prec) {
  if (prec == 0) throw ArgumentError("eisenstein_g2: precision must be positive");
  // sigma(k) for all k < prec at once: every d contributes to its multiples.
  std::vector<unsigned long> sigma(prec, 0);
  for (std::size_t d = 1; d < prec; ++d) {
    for (std::size_t m = d; m < prec; m += d) sigma[m] += d;
  }
  std::vector<ExactRational> coeffs(prec);
  coeffs[0] = rational(-1, 24);
  for (std::size_t k = 1; k < prec; ++k) coeffs[k] = ExactRational(BigInt(sigma[k]));
  return QSeries(std::move(coeffs));
}

QSeries generating_series(InvariantKind kind, int g, std::size_t prec) {
  check_genus(kind, g);
  if (prec == 0) throw ArgumentError("generating_series: precision must be positive");
  if (is_zero_kind(kind)) return QSeries::zero(prec);

  const QSeries dg2 = d_g2(prec);
  const auto e = static_cast<unsigned>(g - 1);
  switch (kind) {
    case InvariantKind::N:
      return scale(ExactRational(static_cast<long>(g)), pow(dg2, e));
    case InvariantKind::FLS:
      return mul(pow(dg2, e - 1), d_operator(dg2));
    case InvariantKind::N12:
      return d_operator(pow(dg2, e));
    case InvariantKind::N34:
      return pow(dg2, e);
    default:
      break;
  }
  throw ArgumentError("generating_series: unhandled kind");
}

QSeries fls_identity_series(int g, std::size_t prec) {
  check_genus(InvariantKind::FLS, g);
  if (prec == 0) throw ArgumentError("fls_identity_series: precision must be positive");
  const QSeries power = pow(d_g2(prec), static_cast<unsigned>(g - 1));
  return scale(rational(1, g - 1), d_operator(power));
}

BigInt invariant(InvariantKind kind, const GenusNodeIndex& index) {
  const std::size_t e = index.exponent();
  const QSeries series = generating_series(kind, index.genus(), e + 1);
  return to_integer(series.coefficient(e));
}

BigInt invariant(InvariantKind kind, int g, int n) {
  check_genus(kind, g);
  return invariant(kind, GenusNodeIndex(g, n));
}

}  // namespace abelcount
