#include "abelcount/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "abelcount/errors.hpp"
#include "abelcount/modular.hpp"
#include "abelcount/oracle.hpp"
#include "abelcount/table.hpp"
#include "abelcount/verify.hpp"

namespace abelcount {

namespace {

std::vector<std::string> kind_names() {
  std::vector<std::string> names;
  for (const auto kind : kAllKinds) names.emplace_back(to_string(kind));
  return names;
}

InvariantKind kind_from(const std::string& name) {
  // CLI11 has already validated membership.
  return *parse_kind(name);
}

Source source_from(const std::string& name) {
  return name == "oracle" ? Source::oracle : Source::closed_form;
}

std::string series_text(const QSeries& s, const std::string& format, InvariantKind kind, int g) {
  std::ostringstream out;
  const auto coeffs = s.coefficients();
  if (format == "text") {
    for (std::size_t k = 0; k < coeffs.size(); ++k) out << (k ? " " : "") << k << ':' << coeffs[k];
    out << '\n';
  } else if (format == "csv") {
    out << "exponent,coefficient\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k) out << k << ',' << coeffs[k] << '\n';
  } else if (format == "md") {
    out << "| exponent | coefficient |\n|---:|---:|\n";
    for (std::size_t k = 0; k < coeffs.size(); ++k) out << "| " << k << " | " << coeffs[k] << " |\n";
  } else {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(kind));
    j["genus"] = g;
    j["prec"] = coeffs.size();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : coeffs) arr.push_back(c.to_string());
    j["coefficients"] = std::move(arr);
    out << j.dump() << '\n';
  }
  return out.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact curve counts on Abelian surfaces from quasi-modular generating series",
               "abelcount"};
  app.require_subcommand(1);

  const auto kinds = kind_names();
  const std::vector<std::string> sources = {"closed", "oracle"};

  std::string kind_name;
  std::string source_name = "closed";
  std::string format;
  int genus = 0;
  int nodes = 0;
  int prec = 0;
  int gmin = 2, gmax = 5, nmin = 0, nmax = 7;
  int sigma_max = 200;

  auto* coeff = app.add_subcommand("coeff", "Print one invariant");
  coeff->add_option("--kind", kind_name, "Invariant family")->required()->check(CLI::IsMember(kinds));
  coeff->add_option("--genus", genus, "Geometric genus g >= 1")->required();
  coeff->add_option("--nodes", nodes, "Node count n >= 0")->required();
  coeff->add_option("--source", source_name, "closed | oracle")->check(CLI::IsMember(sources));

  auto* table = app.add_subcommand("table", "Print a (g, n) table of invariants");
  table->add_option("--kind", kind_name, "Invariant family")->required()->check(CLI::IsMember(kinds));
  table->add_option("--gmin", gmin, "First genus")->capture_default_str();
  table->add_option("--gmax", gmax, "Last genus")->capture_default_str();
  table->add_option("--nmin", nmin, "First node count")->capture_default_str();
  table->add_option("--nmax", nmax, "Last node count")->capture_default_str();
  table->add_option("--format", format, "md | csv | json")
      ->check(CLI::IsMember({"md", "csv", "json"}))
      ->default_val("md");
  table->add_option("--source", source_name, "closed | oracle")->check(CLI::IsMember(sources));

  auto* series = app.add_subcommand("series", "Print a generating series up to q^(prec-1)");
  series->add_option("--kind", kind_name, "Invariant family")->required()->check(CLI::IsMember(kinds));
  series->add_option("--genus", genus, "Geometric genus g >= 1")->required();
  series->add_option("--prec", prec, "Truncation order")->required();
  series->add_option("--format", format, "text | md | csv | json")
      ->check(CLI::IsMember({"text", "md", "csv", "json"}))
      ->default_val("text");

  auto* verify = app.add_subcommand("verify", "Cross-check closed forms, oracles and published tables");
  verify->add_option("--gmax", gmax, "Largest genus")->capture_default_str();
  verify->add_option("--nmax", nmax, "Largest node count")->capture_default_str();
  verify->add_option("--sigma-max", sigma_max, "Largest k for the divisor-sum check")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "abelcount: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (coeff->parsed()) {
      const auto kind = kind_from(kind_name);
      const BigInt value = source_from(source_name) == Source::oracle
                               ? oracle::oracle_invariant(kind, genus, nodes)
                               : invariant(kind, genus, nodes);
      out << to_decimal(value) << '\n';
      return kExitOk;
    }
    if (table->parsed()) {
      const CountTable t = build_table(kind_from(kind_name), {gmin, gmax}, {nmin, nmax},
                                       source_from(source_name));
      if (format == "csv") {
        out << to_csv(t);
      } else if (format == "json") {
        out << to_json(t);
      } else {
        out << to_markdown(t);
      }
      return kExitOk;
    }
    if (series->parsed()) {
      if (prec < 1) throw ArgumentError("--prec must be at least 1");
      const auto kind = kind_from(kind_name);
      out << series_text(generating_series(kind, genus, static_cast<std::size_t>(prec)), format, kind,
                         genus);
      return kExitOk;
    }
    if (verify->parsed()) {
      const VerifyReport report = run_verify({gmax, nmax, sigma_max});
      for (const auto& check : report.checks) {
        out << (check.passed ? "PASS " : "FAIL ") << check.name << " (" << check.cells
            << " comparisons)";
        if (!check.passed) out << ": " << check.failure;
        out << '\n';
      }
      if (const auto* failed = report.first_failure()) {
        err << "abelcount verify: " << failed->name << ": " << failed->failure << '\n';
        return kExitMismatch;
      }
      return kExitOk;
    }
  } catch (const ArgumentError& e) {
    err << "abelcount: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "abelcount: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "abelcount: internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}

}  // namespace abelcount
