#pragma once

// Lower bounds for K_{S^n}, K'_{S^n} and upper bounds for k_{S^n} laid out
// as documents. Table entries are truncated at their printed digit count.

#include "dirac_lt/constants.hpp"
#include "dirac_lt/report.hpp"

#include <optional>
#include <string>

namespace dirac_lt {

enum class TableKind { lower_bounds, upper_bounds };

/// Printed fractional digits.
inline constexpr int kFirstOrderDigits = 6;
inline constexpr int kSecondOrderDigits = 7;
inline constexpr int kUpperDigits = 7;
inline constexpr int kReportDigits = 12;

inline Measure default_measure(TableKind t) {
  return t == TableKind::lower_bounds ? Measure::normalized : Measure::surface;
}

/// Lower bounds: n, K_lower (first order), its source, K_prime_lower.
/// Upper bounds on k_{S^n}: n, comparison bound, improved bound.
/// Rows whose dimension is outside a column's domain get null cells and a
/// note instead of aborting the table.
inline Document build_table(TableKind which, unsigned first, unsigned last, Precision prec = {},
                            std::optional<Measure> measure_opt = std::nullopt) {
  const Measure measure = measure_opt.value_or(default_measure(which));
  Document doc;
  if (which == TableKind::lower_bounds) {
    doc.title = "Lower bounds for K_{S^n} and K'_{S^n} (" + std::string(to_string(measure)) + " measure)";
    doc.columns = {"n", "K_lower", "K_lower_source", "K_prime_lower"};
    for (unsigned n = first; n <= last; ++n) {
      if (n == 0) {
        doc.add_row({Cell::integer(0), Cell::null(), Cell::null(), Cell::null()});
        continue;
      }
      const DiracLower dl = dirac_lt_lower(n, prec);
      Real first_order = dl.best;
      Real second_order = dirac_sq_lt_lower(n, prec);
      const LowerSource src = dl.source;
      if (measure == Measure::surface) {
        const Real sigma = sphere_surface(n, prec);
        PrecisionScope scope(prec);
        first_order *= boost::multiprecision::pow(sigma, Real(1) / n);
        second_order *= boost::multiprecision::pow(sigma, Real(2) / n);
      }
      doc.add_row({Cell::integer(n), Cell::decimal(to_fixed(first_order, kFirstOrderDigits)),
                   Cell::str(std::string(to_string(src))),
                   Cell::decimal(to_fixed(second_order, kSecondOrderDigits))});
    }
    doc.notes.push_back("values truncated, not rounded, at the printed digit");
    doc.notes.push_back("K_lower for n = 2 uses the dedicated S^2 constant 1/3");
  } else {
    doc.title = "Upper bounds for k_{S^n} (" + std::string(to_string(measure)) + " measure)";
    doc.columns = {"n", "k_upper_kowalski", "k_upper_improved", "note"};
    for (unsigned n = first; n <= last; ++n) {
      if (n < 2) {
        doc.add_row({Cell::integer(n), Cell::null(), Cell::null(), Cell::str("requires n >= 2")});
        continue;
      }
      doc.add_row({Cell::integer(n),
                   Cell::decimal(to_fixed(k_upper(n, prec, measure, UpperSource::kowalski), kUpperDigits)),
                   Cell::decimal(to_fixed(k_upper(n, prec, measure, UpperSource::improved), kUpperDigits)),
                   Cell::str("")});
    }
    doc.notes.push_back("values truncated, not rounded, at the printed digit");
  }
  return doc;
}

inline Cell optional_decimal(const std::optional<Real>& v, int digits) {
  if (!v) return Cell::null();
  return Cell::decimal(to_fixed(*v, digits, Rounding::nearest));
}

/// One row per dimension with every field of BoundSet.
inline Document constants_document(unsigned first, unsigned last, Precision prec = {},
                                   Measure measure = Measure::normalized) {
  Document doc;
  doc.title = "Constants (" + std::string(to_string(measure)) + " measure for k_upper)";
  doc.columns = {"n",          "c_n",          "c_n_prime",          "c_n_prime_decimal",
                 "K_n",        "K_n_prime",    "dirac_lower",        "dirac_lower_source",
                 "dirac_lower_general",        "dirac_sq_lower",     "kowalski_lower",
                 "k_upper_improved",           "k_upper_kowalski",   "measure",
                 "precision_bits"};
  for (unsigned n = first; n <= last; ++n) {
    const BoundSet b = bound_set(n, prec, measure);
    const auto d = [](const Real& x) { return Cell::decimal(to_fixed(x, kReportDigits, Rounding::nearest)); };
    doc.add_row({Cell::integer(n), d(b.c_n), Cell::str(rational_string(b.c_n_prime)),
                 Cell::decimal(to_fixed(b.c_n_prime, kReportDigits, Rounding::nearest)),
                 Cell::str(rational_string(b.K_n)), Cell::str(rational_string(b.K_n_prime)),
                 d(b.dirac_lower), Cell::str(std::string(to_string(b.dirac_lower_source))),
                 d(b.dirac_lower_general), d(b.dirac_sq_lower),
                 optional_decimal(b.kowalski_lower, kReportDigits),
                 optional_decimal(b.k_upper_improved, kReportDigits),
                 optional_decimal(b.k_upper_kowalski, kReportDigits),
                 Cell::str(std::string(to_string(b.measure))), Cell::integer(b.precision.bits)});
  }
  return doc;
}

}  // namespace dirac_lt
