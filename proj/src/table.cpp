#include "abelcount/table.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

#include "abelcount/errors.hpp"

namespace abelcount {

std::string_view to_string(Source source) {
  return source == Source::closed_form ? "closed_form" : "oracle";
}

CountTable::CountTable(InvariantKind kind, IntRange g_range, IntRange n_range, Source source,
                       std::vector<std::vector<BigInt>> values)
    : kind_(kind), g_range_(g_range), n_range_(n_range), source_(source), values_(std::move(values)) {
  if (g_range_.empty() || n_range_.empty()) throw ArgumentError("table ranges must be nonempty");
  if (values_.size() != g_range_.size()) throw ArgumentError("table row count does not match g range");
  for (const auto& row : values_) {
    if (row.size() != n_range_.size()) throw ArgumentError("table column count does not match n range");
  }
}

const BigInt& CountTable::at(int g, int n) const {
  if (g < g_range_.lo || g > g_range_.hi || n < n_range_.lo || n > n_range_.hi) {
    throw ArgumentError("cell (" + std::to_string(g) + ", " + std::to_string(n) + ") outside table");
  }
  return values_[static_cast<std::size_t>(g - g_range_.lo)][static_cast<std::size_t>(n - n_range_.lo)];
}

CountTable build_table(InvariantKind kind, IntRange g_range, IntRange n_range, Source source,
                       oracle::Exec exec) {
  if (g_range.empty()) throw ArgumentError("empty genus range");
  if (n_range.empty()) throw ArgumentError("empty node range");
  if (g_range.lo < 1) throw ArgumentError("genus range must start at 1 or above");
  if (n_range.lo < 0) throw ArgumentError("node range must start at 0 or above");
  if (g_range.lo < min_genus(kind)) {
    throw DomainError("the fixed-linear-system count is defined only for genus >= 2");
  }

  const std::size_t rows = g_range.size();
  const std::size_t cols = n_range.size();
  std::vector<std::vector<BigInt>> values(rows, std::vector<BigInt>(cols));
  const auto cells = static_cast<std::ptrdiff_t>(rows * cols);
  // Oracle cells already parallelize internally; keep the two levels from nesting.
  const oracle::Exec inner = oracle::Exec::serial;

  auto fill = [&](std::ptrdiff_t cell) {
    const auto r = static_cast<std::size_t>(cell) / cols;
    const auto c = static_cast<std::size_t>(cell) % cols;
    const int g = g_range.lo + static_cast<int>(r);
    const int n = n_range.lo + static_cast<int>(c);
    values[r][c] = source == Source::closed_form ? invariant(kind, g, n)
                                                 : oracle::oracle_invariant(kind, g, n, inner);
  };

  if (exec == oracle::Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t cell = 0; cell < cells; ++cell) fill(cell);
  } else {
    for (std::ptrdiff_t cell = 0; cell < cells; ++cell) fill(cell);
  }
  return {kind, g_range, n_range, source, std::move(values)};
}

namespace {

std::string kind_label(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::N:
      return "N_{g,n}";
    case InvariantKind::FLS:
      return "N^FLS_{g,n}";
    case InvariantKind::N12:
      return "N^12_{g,n}";
    case InvariantKind::N34:
      return "N^34_{g,n}";
    case InvariantKind::Zero13:
      return "N^13_{g,n}";
    case InvariantKind::Zero14:
      return "N^14_{g,n}";
    case InvariantKind::Zero23:
      return "N^23_{g,n}";
    case InvariantKind::Zero24:
      return "N^24_{g,n}";
  }
  return "?";
}

}  // namespace

std::string to_markdown(const CountTable& table) {
  std::ostringstream out;
  out << "| " << kind_label(table.kind()) << " |";
  for (int n = table.n_range().lo; n <= table.n_range().hi; ++n) out << " n=" << n << " |";
  out << "\n|---|";
  for (std::size_t c = 0; c < table.n_range().size(); ++c) out << "---:|";
  out << '\n';
  for (int g = table.g_range().lo; g <= table.g_range().hi; ++g) {
    out << "| g=" << g << " |";
    for (int n = table.n_range().lo; n <= table.n_range().hi; ++n) out << ' ' << to_decimal(table.at(g, n)) << " |";
    out << '\n';
  }
  return out.str();
}

std::string to_csv(const CountTable& table) {
  std::ostringstream out;
  out << "g\\n";
  for (int n = table.n_range().lo; n <= table.n_range().hi; ++n) out << ',' << n;
  out << '\n';
  for (int g = table.g_range().lo; g <= table.g_range().hi; ++g) {
    out << g;
    for (int n = table.n_range().lo; n <= table.n_range().hi; ++n) out << ',' << to_decimal(table.at(g, n));
    out << '\n';
  }
  return out.str();
}

std::string to_json(const CountTable& table) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(table.kind()));
  j["g_range"] = {table.g_range().lo, table.g_range().hi};
  j["n_range"] = {table.n_range().lo, table.n_range().hi};
  j["source"] = std::string(to_string(table.source()));
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.values()) {
    auto cells = nlohmann::ordered_json::array();
    for (const auto& v : row) cells.push_back(to_decimal(v));
    rows.push_back(std::move(cells));
  }
  j["values"] = std::move(rows);
  return j.dump() + "\n";
}

CountTable table_from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const auto kind = parse_kind(j.at("kind").get<std::string>());
    if (!kind) throw ArgumentError("unknown kind in table json");
    const auto src = j.at("source").get<std::string>();
    Source source;
    if (src == "closed_form") {
      source = Source::closed_form;
    } else if (src == "oracle") {
      source = Source::oracle;
    } else {
      throw ArgumentError("unknown source in table json: " + src);
    }
    const auto gr = j.at("g_range").get<std::vector<int>>();
    const auto nr = j.at("n_range").get<std::vector<int>>();
    if (gr.size() != 2 || nr.size() != 2) throw ArgumentError("ranges must be [lo, hi] pairs");
    std::vector<std::vector<BigInt>> values;
    for (const auto& row : j.at("values")) {
      std::vector<BigInt> cells;
      for (const auto& cell : row) cells.push_back(parse_decimal(cell.get<std::string>()));
      values.push_back(std::move(cells));
    }
    return {*kind, {gr[0], gr[1]}, {nr[0], nr[1]}, source, std::move(values)};
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed table json: ") + e.what());
  }
}

}  // namespace abelcount
