#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "abelcount/qseries.hpp"
#include "abelcount/rational.hpp"

namespace abelcount {

/// Which curve count is requested. The four Zero* tags are the pairs of
/// 1-cycles whose counts vanish; they are kept as separate values so that
/// each one is exercised.
enum class InvariantKind { N, FLS, N12, N34, Zero13, Zero14, Zero23, Zero24 };

inline constexpr std::array<InvariantKind, 8> kAllKinds = {
    InvariantKind::N,      InvariantKind::FLS,    InvariantKind::N12,    InvariantKind::N34,
    InvariantKind::Zero13, InvariantKind::Zero14, InvariantKind::Zero23, InvariantKind::Zero24};

/// Lower-case flag spelling: "n", "fls", "n12", "n34", "zero13", ...
std::string_view to_string(InvariantKind kind);
std::optional<InvariantKind> parse_kind(std::string_view text);

bool is_zero_kind(InvariantKind kind);

/// Smallest genus at which the kind is defined (2 for FLS, 1 otherwise).
int min_genus(InvariantKind kind);

/// A (genus, nodes) pair. The invariant sits at exponent n + g - 1 = C.C/2
/// of its generating series.
class GenusNodeIndex {
 public:
  /// Throws ArgumentError unless g >= 1 and n >= 0.
  GenusNodeIndex(int g, int n);

  [[nodiscard]] int genus() const { return g_; }
  [[nodiscard]] int nodes() const { return n_; }
  [[nodiscard]] std::size_t exponent() const { return static_cast<std::size_t>(n_ + g_ - 1); }

 private:
  int g_;
  int n_;
};

/// G2 = -1/24 + sum_{k>=1} sigma(k) q^k, truncated at prec.
/// Throws ArgumentError if prec == 0.
QSeries eisenstein_g2(std::size_t prec);

/// Generating series sum_n X_{g,n} q^{n+g-1} for kind X:
///   N    g (DG2)^{g-1}
///   FLS  (DG2)^{g-2} D^2 G2        (g >= 2)
///   N12  D((DG2)^{g-1})
///   N34  (DG2)^{g-1}
///   Zero the zero series
/// Throws ArgumentError for g < 1 or prec == 0, DomainError for FLS at g = 1.
QSeries generating_series(InvariantKind kind, int g, std::size_t prec);

/// (g-1)^{-1} D((DG2)^{g-1}); equals generating_series(FLS, g, prec).
/// Throws DomainError for g < 2.
QSeries fls_identity_series(int g, std::size_t prec);

/// Coefficient of q^{n+g-1} in generating_series(kind, g, n+g).
BigInt invariant(InvariantKind kind, const GenusNodeIndex& index);
BigInt invariant(InvariantKind kind, int g, int n);

}  // namespace abelcount
