#pragma once

// Command-line front end. `run` is deterministic for a fixed RunConfig and
// returns the rendered document together with the process exit code:
//   0  success
//   1  a verification (scan, shell inequality) failed
//   2  usage error
//   3  dimension or parameter outside the domain of the command

#include "dirac_lt/constants.hpp"
#include "dirac_lt/families.hpp"
#include "dirac_lt/infimum.hpp"
#include "dirac_lt/report.hpp"
#include "dirac_lt/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dirac_lt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"constants",      "table1", "table2", "infimum-scan",
                                                 "critical-points", "shells", "bracket"};
  return names;
}

struct NRange {
  unsigned first = 1;
  unsigned last = 1;
  friend bool operator==(const NRange&, const NRange&) = default;
};

/// "5" or "4..8".
inline NRange parse_n_range(std::string_view text) {
  auto to_uint = [&](std::string_view s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("bad dimension '" + std::string(text) + "'");
    return static_cast<unsigned>(std::stoul(std::string(s)));
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const unsigned n = to_uint(text);
    return {n, n};
  }
  NRange r{to_uint(text.substr(0, dots)), to_uint(text.substr(dots + 2))};
  if (r.last < r.first) throw std::invalid_argument("empty dimension range '" + std::string(text) + "'");
  return r;
}

struct RunConfig {
  std::string command;
  std::optional<NRange> n;
  unsigned precision_bits = 256;
  std::optional<Measure> measure;
  Format format = Format::md;
  Weight weight = Weight::unit;
  std::optional<Variant> variant;
  unsigned k_max = 200;
  std::optional<ShellKind> kind;
  GridSpec grid;
  std::string out;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string document;
  std::string diagnostic;
};

namespace detail {

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline NRange default_range(const std::string& command) {
  if (command == "table1") return {1, 5};
  if (command == "table2") return {4, 8};
  if (command == "constants") return {1, 8};
  if (command == "critical-points") return {1, 6};
  return {2, 2};
}

inline std::string sci(const Real& x) { return to_sci(x, 15); }
inline std::string fixed(const Real& x) { return to_fixed(x, kReportDigits, Rounding::nearest); }

inline Document infimum_document(const RunConfig& cfg, NRange range, Precision prec, bool& all_passed) {
  Document doc;
  doc.title = "Ratio scan, " + std::string(to_string(cfg.weight)) + " weight";
  doc.columns = {"n",        "weight",         "variant",  "grid_points", "rho_min",
                 "rho_max",  "minimizer",      "minimum",  "floor",       "floor_label",
                 "physical_floor", "margin",   "x_plus",   "distance_to_x_plus", "status"};
  for (unsigned n = range.first; n <= range.last; ++n) {
    const Variant variant = cfg.variant.value_or(
        n == 2 && cfg.weight == Weight::unit ? Variant::exact_count : Variant::envelope);
    const InfimumReport r = ratio_scan(n, cfg.weight, variant, cfg.grid, prec);
    all_passed = all_passed && r.passed;
    doc.add_row({Cell::integer(n), Cell::str(std::string(to_string(r.weight))),
                 Cell::str(std::string(to_string(r.variant))),
                 Cell::integer(static_cast<long long>(r.grid_size)), Cell::decimal(sci(r.rho_min)),
                 Cell::decimal(sci(r.rho_max)), Cell::decimal(sci(r.minimizer)), Cell::decimal(fixed(r.minimum)),
                 Cell::decimal(fixed(r.floor)), Cell::str(r.floor_label), Cell::decimal(fixed(r.physical_floor)),
                 Cell::decimal(to_sci(r.margin, 6)), Cell::decimal(sci(r.x_plus)),
                 Cell::decimal(to_sci(r.distance_to_x_plus, 6)), Cell::str(r.passed ? "PASS" : "FAIL")});
  }
  doc.notes.push_back("rho in normalized coordinates rho_n = rho / K_n; PASS when minimum >= floor - 1e-9");
  return doc;
}

inline Document critical_points_document(NRange range, Precision prec) {
  Document doc;
  doc.title = "Critical points of I_1(x)/x^((n+1)/n)";
  doc.columns = {"n", "breakpoint", "x_minus", "x_plus", "u_minus", "u_plus", "residual"};
  for (unsigned n = range.first; n <= range.last; ++n) {
    const CriticalPoints cp = critical_points(n, prec);
    doc.add_row({Cell::integer(n), Cell::decimal(sci(envelope_breakpoint(n, prec))), Cell::decimal(sci(cp.x_minus)),
                 Cell::decimal(sci(cp.x_plus)), Cell::decimal(sci(cp.u_minus)), Cell::decimal(sci(cp.u_plus)),
                 Cell::decimal(to_sci(cp.residual, 3))});
  }
  return doc;
}

inline std::vector<ShellKind> selected_kinds(const RunConfig& cfg) {
  if (cfg.kind) return {*cfg.kind};
  return {ShellKind::dirac_positive, ShellKind::dirac_both_signs, ShellKind::scalar_laplace};
}

inline Document shells_document(const RunConfig& cfg, NRange range, Precision prec, bool& all_satisfied) {
  Document doc;
  doc.title = "Filled-shell families";
  doc.columns = {"n",     "kind",         "degree",       "lhs",  "rho",
                 "exponent", "rhs_constant", "rhs",       "ratio", "satisfied",
                 "comparison_constant", "comparison_satisfied"};
  for (unsigned n = range.first; n <= range.last; ++n) {
    for (ShellKind kind : selected_kinds(cfg)) {
      for (const ShellReport& r : shell_sequence(n, kind, cfg.k_max, prec)) {
        all_satisfied = all_satisfied && r.satisfied;
        doc.add_row({Cell::integer(n), Cell::str(std::string(to_string(kind))),
                     Cell::integer(r.family.max_degree), Cell::str(rational_string(r.lhs)),
                     Cell::integer(r.rho.str()), Cell::str(rational_string(r.exponent)),
                     Cell::decimal(fixed(r.rhs_constant)), Cell::decimal(sci(r.rhs)), Cell::decimal(fixed(r.ratio)),
                     Cell::boolean(r.satisfied),
                     r.comparison_constant ? Cell::decimal(fixed(*r.comparison_constant)) : Cell::null(),
                     r.comparison_satisfied ? Cell::boolean(*r.comparison_satisfied) : Cell::null()});
      }
    }
  }
  doc.notes.push_back("densities under the normalized measure");
  return doc;
}

inline Document bracket_document(const RunConfig& cfg, NRange range, Precision prec, bool& all_satisfied) {
  Document doc;
  doc.title = "Best-constant brackets";
  doc.columns = {"n",     "kind",          "k_max",         "lower",         "upper_empirical",
                 "argmin_degree", "turning_point", "monotone_tail", "all_satisfied"};
  for (unsigned n = range.first; n <= range.last; ++n) {
    for (ShellKind kind : selected_kinds(cfg)) {
      const Bracket b = bracket_scan(n, kind, cfg.k_max, prec);
      all_satisfied = all_satisfied && b.all_satisfied;
      doc.add_row({Cell::integer(n), Cell::str(std::string(to_string(kind))), Cell::integer(b.k_max),
                   Cell::decimal(fixed(b.lower)), Cell::decimal(fixed(b.upper)), Cell::integer(b.argmin_degree),
                   b.turning_point ? Cell::integer(*b.turning_point) : Cell::null(),
                   Cell::boolean(b.monotone_tail), Cell::boolean(b.all_satisfied)});
    }
  }
  doc.notes.push_back("upper edge is the smallest filled-shell ratio; filled shells are not known extremizers");
  doc.notes.push_back("constants refer to the normalized measure");
  return doc;
}

}  // namespace detail

inline RunResult run(const RunConfig& cfg) {
  RunResult result;
  const auto& names = commands();
  if (std::find(names.begin(), names.end(), cfg.command) == names.end()) {
    result.exit_code = kExitUsage;
    result.diagnostic = "unknown command '" + cfg.command + "'";
    return result;
  }
  try {
    if (cfg.precision_bits < 64) throw detail::DomainError("--precision-bits must be at least 64");
    const Precision prec{cfg.precision_bits};
    const NRange range = cfg.n.value_or(detail::default_range(cfg.command));
    if (range.first == 0) throw detail::DomainError("dimension n must be at least 1");
    if (range.last - range.first > 10000) throw detail::DomainError("dimension range too large");

    Document doc;
    bool ok = true;
    if (cfg.command == "constants") {
      doc = constants_document(range.first, range.last, prec, cfg.measure.value_or(Measure::normalized));
    } else if (cfg.command == "table1") {
      doc = build_table(TableKind::lower_bounds, range.first, range.last, prec, cfg.measure);
    } else if (cfg.command == "table2") {
      if (range.first < 2) throw detail::DomainError("table2 requires n >= 2");
      doc = build_table(TableKind::upper_bounds, range.first, range.last, prec, cfg.measure);
    } else if (cfg.command == "infimum-scan") {
      if (cfg.variant == Variant::closed_form) throw detail::DomainError("scan variant must be exact or envelope");
      if (cfg.grid.points < 1000) throw detail::DomainError("scan grid needs at least 1000 points");
      doc = detail::infimum_document(cfg, range, prec, ok);
    } else if (cfg.command == "critical-points") {
      doc = detail::critical_points_document(range, prec);
    } else if (cfg.command == "shells") {
      doc = detail::shells_document(cfg, range, prec, ok);
    } else if (cfg.command == "bracket") {
      if (cfg.k_max < 1) throw detail::DomainError("bracket requires --k-max >= 1");
      doc = detail::bracket_document(cfg, range, prec, ok);
    }
    result.document = render(doc, cfg.format);
    if (!ok) {
      result.exit_code = kExitFailed;
      result.diagnostic = cfg.command + ": verification FAILED";
    }
  } catch (const detail::DomainError& e) {
    result.exit_code = kExitDomain;
    result.diagnostic = e.what();
  } catch (const std::domain_error& e) {
    result.exit_code = kExitDomain;
    result.diagnostic = e.what();
  }
  return result;
}

namespace detail {

inline std::optional<Variant> parse_variant(const std::string& s) {
  if (s.empty() || s == "auto") return std::nullopt;
  if (s == "exact" || s == "exact_count") return Variant::exact_count;
  if (s == "envelope") return Variant::envelope;
  throw std::invalid_argument("unknown variant: " + s);
}

inline std::optional<ShellKind> parse_kind(const std::string& s) {
  if (s.empty() || s == "all") return std::nullopt;
  if (s == "dirac_positive") return ShellKind::dirac_positive;
  if (s == "dirac_both_signs") return ShellKind::dirac_both_signs;
  if (s == "scalar_laplace" || s == "scalar") return ShellKind::scalar_laplace;
  throw std::invalid_argument("unknown kind: " + s);
}

}  // namespace detail

/// Parses argv into a RunConfig, runs it, writes the document to `out` (or
/// to --out) and diagnostics to `err`. Returns the exit code.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lieb-Thirring-type constants for the Dirac operator on S^n", "dirac_lt"};
  std::string command;
  std::string n_text;
  std::string n_range_text;
  std::string measure_text;
  std::string format_text = "md";
  std::string weight_text = "unit";
  std::string variant_text = "auto";
  std::string kind_text = "all";
  RunConfig cfg;

  app.add_option("command", command, "constants | table1 | table2 | infimum-scan | critical-points | shells | bracket")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--n", n_text, "dimension N or range A..B");
  app.add_option("--n-range", n_range_text, "dimension range A..B");
  app.add_option("--precision-bits", cfg.precision_bits, "mantissa bits (default 256)");
  app.add_option("--measure", measure_text, "normalized | surface")->check(CLI::IsMember({"normalized", "surface"}));
  app.add_option("--format", format_text, "md | csv | json")->check(CLI::IsMember({"md", "csv", "json"}));
  app.add_option("--weight", weight_text, "unit | energy")->check(CLI::IsMember({"unit", "energy"}));
  app.add_option("--variant", variant_text, "auto | exact | envelope")
      ->check(CLI::IsMember({"auto", "exact", "exact_count", "envelope"}));
  app.add_option("--k-max", cfg.k_max, "largest shell degree (default 200)");
  app.add_option("--kind", kind_text, "all | dirac_positive | dirac_both_signs | scalar_laplace")
      ->check(CLI::IsMember({"all", "dirac_positive", "dirac_both_signs", "scalar_laplace", "scalar"}));
  app.add_option("--grid-points", cfg.grid.points, "log-spaced scan points (default 1000)");
  app.add_option("--out", cfg.out, "write the document to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    cfg.command = command;
    if (!n_text.empty() && !n_range_text.empty()) throw std::invalid_argument("give either --n or --n-range");
    if (!n_text.empty()) cfg.n = parse_n_range(n_text);
    if (!n_range_text.empty()) cfg.n = parse_n_range(n_range_text);
    if (!measure_text.empty()) cfg.measure = measure_text == "surface" ? Measure::surface : Measure::normalized;
    cfg.format = parse_format(format_text);
    cfg.weight = weight_text == "energy" ? Weight::energy : Weight::unit;
    cfg.variant = detail::parse_variant(variant_text);
    cfg.kind = detail::parse_kind(kind_text);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const RunResult result = run(cfg);
  if (!result.document.empty()) {
    if (cfg.out.empty()) {
      out << result.document;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << cfg.out << " for writing\n";
        return kExitUsage;
      }
      file << result.document;
    }
  }
  if (!result.diagnostic.empty()) err << result.diagnostic << '\n';
  return result.exit_code;
}

}  // namespace dirac_lt::cli
