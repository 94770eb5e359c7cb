// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "dirac_lt/dirac_lt.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace dirac_lt;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) detail << what;
    ok = ok && condition;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// |value - printed| <= one unit in the last printed digit, exact comparison
/// against the decimal string.
bool within_last_digit(const Real& value, const std::string& printed) {
  const auto dot = printed.find('.');
  const int digits = dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
  PrecisionScope scope(Precision{256});
  const Real p(printed);
  const Real unit = boost::multiprecision::pow(Real(10), -digits);
  return boost::multiprecision::abs(value - p) <= unit;
}

std::string cell(const Document& doc, std::size_t row, const std::string& column) {
  for (std::size_t i = 0; i < doc.columns.size(); ++i)
    if (doc.columns[i] == column) return doc.rows.at(row).at(i).text;
  return {};
}

Check table1() {
  Check c;
  const auto start = Clock::now();
  const Document doc = build_table(TableKind::lower_bounds, 1, 5);
  const double elapsed = seconds_since(start);
  const char* first[] = {"0.153595", "0.333333", "0.593385", "0.767663", "1.087326"};
  const char* second[] = {"0.0097222", "0.0277777", "0.1240172", "0.2771281", "0.6682066"};
  for (unsigned n = 1; n <= 5; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    c.require(within_last_digit(dirac_lt_lower(n).best, first[n - 1]), "K" + tag);
    c.require(within_last_digit(dirac_sq_lt_lower(n), second[n - 1]), "K'" + tag);
    c.require(within_last_digit(Real(cell(doc, n - 1, "K_lower")), first[n - 1]), "table K" + tag);
    c.require(within_last_digit(Real(cell(doc, n - 1, "K_prime_lower")), second[n - 1]), "table K'" + tag);
  }
  c.require(elapsed < 1.0, "runtime");
  c.detail << (c.ok ? "" : "; ") << "10 values, " << elapsed << " s";
  return c;
}

Check table2() {
  Check c;
  const auto start = Clock::now();
  const Document doc = build_table(TableKind::upper_bounds, 4, 8);
  const double elapsed = seconds_since(start);
  const char* comparison[] = {"0.5847726", "0.5377363", "0.5100914", "0.4920770", "0.4795110"};
  const char* improved[] = {"0.7033721", "0.3788866", "0.3054612", "0.2100443", "0.1854909"};
  for (unsigned n = 4; n <= 8; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    const std::size_t i = n - 4;
    c.require(within_last_digit(k_upper(n, {}, Measure::surface, UpperSource::kowalski), comparison[i]),
              "comparison" + tag);
    c.require(within_last_digit(k_upper(n, {}, Measure::surface, UpperSource::improved), improved[i]),
              "improved" + tag);
    c.require(within_last_digit(Real(cell(doc, i, "k_upper_kowalski")), comparison[i]), "table comparison" + tag);
    c.require(within_last_digit(Real(cell(doc, i, "k_upper_improved")), improved[i]), "table improved" + tag);
  }
  c.require(elapsed < 1.0, "runtime");
  c.detail << (c.ok ? "" : "; ") << "10 values, " << elapsed << " s";
  return c;
}

Check crossover() {
  Check c;
  const Precision prec{512};
  c.require(k_upper(4, prec, Measure::surface, UpperSource::improved) >
                k_upper(4, prec, Measure::surface, UpperSource::kowalski),
            "n=4 not reversed");
  for (unsigned n = 5; n <= 20; ++n)
    c.require(k_upper(n, prec, Measure::surface, UpperSource::improved) <
                  k_upper(n, prec, Measure::surface, UpperSource::kowalski),
              "n=" + std::to_string(n));
  c.detail << (c.ok ? "" : "; ") << "improved < comparison for 5..20, reversed at 4";
  return c;
}

Check s2_infimum() {
  Check c;
  const auto start = Clock::now();
  const InfimumReport r = ratio_scan(2, Weight::unit, Variant::exact_count);
  c.require(r.minimum >= Real(1) / 3 - Real("1e-9"), "minimum below 1/3");
  Real previous = s2_envelope(0).right;
  for (long m = 1; m <= 1000; ++m) {
    const Real current = s2_envelope(m).right;
    c.require(current < previous, "endpoint values not decreasing at M=" + std::to_string(m));
    previous = current;
  }
  PrecisionScope scope(Precision{256});
  c.require(boost::multiprecision::abs(previous * 3 - 1) < Real("0.01"), "M=1000 endpoint not within 1%");
  const double elapsed = seconds_since(start);
  c.require(elapsed < 10.0, "runtime");
  c.detail << (c.ok ? "" : "; ") << "min " << to_fixed(r.minimum, 10) << ", endpoint(1000) " << to_fixed(previous, 8)
           << ", " << elapsed << " s";
  return c;
}

Check general_infimum() {
  Check c;
  const auto start = Clock::now();
  Real worst_distance = 0;
  for (unsigned n = 1; n <= 6; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    const InfimumReport unit = ratio_scan(n, Weight::unit, Variant::envelope);
    c.require(unit.minimum >= c_lower(n) - Real("1e-9"), "unit minimum" + tag);
    c.require(unit.distance_to_x_plus <= Real("1e-6"), "minimizer away from x_plus" + tag);
    if (unit.distance_to_x_plus > worst_distance) worst_distance = unit.distance_to_x_plus;
    const InfimumReport energy = ratio_scan(n, Weight::energy, Variant::envelope);
    c.require(energy.minimum >= to_real(c_prime(n)) - Real("1e-9"), "energy minimum" + tag);
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 60.0, "runtime");
  c.detail << (c.ok ? "" : "; ") << "max |argmin - x_plus|/x_plus " << to_sci(worst_distance, 3) << ", " << elapsed
           << " s";
  return c;
}

Check integral_agreement() {
  Check c;
  PrecisionScope scope(Precision{256});
  Real worst = 0;
  for (int i = 0; i < 200; ++i) {
    // 200 log-spaced points, the last one at 10^4.
    const Real rho = boost::multiprecision::pow(Real(10), Real(-4) + Real(8) * (i + 1) / 200);
    const Real closed = s2_closed_form(rho).value;
    const Real exact = integral_oracle(2, rho, Weight::unit, Variant::exact_count).value;
    const Real rel = boost::multiprecision::abs(closed / exact - 1);
    if (rel > worst) worst = rel;
  }
  c.require(worst <= Real("1e-10"), "S^2 closed form disagrees");
  unsigned samples = 0;
  Real worst_gap = -1;
  for (unsigned n = 1; n <= 6; ++n) {
    for (Weight w : {Weight::unit, Weight::energy}) {
      const Real bp = envelope_breakpoint(n);
      for (int i = 1; i <= 20; ++i) {
        const Real x = bp * boost::multiprecision::pow(Real(10), Real(4) * i / 20);
        const Real closed = i1_closed(n, x, w);
        const IntegralReport q = integral_oracle(n, x, w, Variant::envelope);
        // Allowance: the quadrature's own error estimate plus rounding at 2^-200.
        const Real slack = q.error_estimate + q.value * Real("6.3e-61");
        c.require(closed <= q.value + slack, "I_1 above envelope oracle n=" + std::to_string(n));
        const Real gap = (closed - q.value) / q.value;
        if (gap > worst_gap) worst_gap = gap;
        ++samples;
      }
    }
  }
  c.detail << (c.ok ? "" : "; ") << "S^2 max rel err " << to_sci(worst, 3) << "; " << samples << " I_1 samples, max (I_1 - oracle)/oracle "
           << to_sci(worst_gap, 3);
  return c;
}

Check combinatorics() {
  Check c;
  auto gen = oracle::rng(7);
  std::uniform_int_distribution<unsigned> dim(1, 10);
  std::uniform_int_distribution<int> hundredths(0, 6000);
  unsigned above = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const unsigned n = dim(gen);
    const SphereDim sd(n);
    const Rational e(Integer(hundredths(gen)), Integer(100));
    const Integer count = cumulative_count(sd, e);
    c.require(count == oracle::brute_count(n, e), "hockey-stick n=" + std::to_string(n));
    if (e > sd.half()) {
      ++above;
      c.require(Rational(count) < count_envelope(sd, e), "envelope n=" + std::to_string(n));
    }
  }
  c.detail << (c.ok ? "" : "; ") << "500 samples, " << above << " above n/2";
  return c;
}

Check critical() {
  Check c;
  Real worst_residual = 0;
  Real worst_fd = 0;
  const Precision prec{256};
  for (unsigned n = 1; n <= 20; ++n) {
    const CriticalPoints cp = critical_points(n, prec);
    if (cp.residual > worst_residual) worst_residual = cp.residual;
    c.require(cp.residual < Real("1e-12"), "residual n=" + std::to_string(n));
    PrecisionScope scope(prec);
    const Real bp = envelope_breakpoint(n, prec);
    auto ratio = [n](const Real& x) { return i1_closed(n, x, Weight::unit) / (x * detail::nth_root(x, n)); };
    for (const Real& x : {Real(bp * 2), Real(cp.x_plus / 2), Real(cp.x_plus * 3), Real(bp * 1e6)}) {
      const Real h = x * Real("1e-25");
      const Real fd = (ratio(x + h) - ratio(x - h)) / (2 * h);
      const Real an = i1_ratio_derivative(n, x, prec);
      const Real rel = boost::multiprecision::abs(fd - an) / boost::multiprecision::abs(an);
      if (rel > worst_fd) worst_fd = rel;
      c.require(rel <= Real("1e-6"), "derivative n=" + std::to_string(n));
    }
  }
  c.detail << (c.ok ? "" : "; ") << "max residual " << to_sci(worst_residual, 3) << ", max derivative rel err "
           << to_sci(worst_fd, 3);
  return c;
}

Check shells() {
  Check c;
  std::size_t count = 0;
  for (unsigned n = 1; n <= 6; ++n)
    for (ShellKind kind : {ShellKind::dirac_positive, ShellKind::dirac_both_signs, ShellKind::scalar_laplace})
      for (const ShellReport& r : shell_sequence(n, kind, 200)) {
        ++count;
        c.require(r.satisfied, "n=" + std::to_string(n) + " " + std::string(to_string(kind)) +
                                   " K=" + std::to_string(r.family.max_degree));
      }
  const Bracket b = bracket_scan(2, ShellKind::dirac_positive, 200);
  PrecisionScope scope(Precision{256});
  c.require(b.lower == Real(1) / 3, "bracket lower edge");
  c.require(boost::multiprecision::abs(b.upper * 3 / 2 - 1) < Real("0.01"), "bracket upper edge");
  c.detail << (c.ok ? "" : "; ") << count << " reports; S^2 bracket [" << to_fixed(b.lower, 6) << ", "
           << to_fixed(b.upper, 6) << "]";
  return c;
}

Check side_claims() {
  Check c;
  for (unsigned n = 1; n <= 50; ++n) {
    c.require(c_lower(n) < Real(n) / (n + 1), "c_n n=" + std::to_string(n));
    c.require(c_prime(n) < Rational(Integer(n * n), Integer(2 * (n + 1) * (n + 1))), "c_n' n=" + std::to_string(n));
  }
  c.detail << (c.ok ? "" : "; ") << "n = 1..50";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"lower-bound table reproduction", table1},
      {"upper-bound table reproduction", table2},
      {"upper bound crossover", crossover},
      {"S^2 infimum", s2_infimum},
      {"general-n infimum", general_infimum},
      {"integral oracle agreement", integral_agreement},
      {"combinatorial identities", combinatorics},
      {"critical points", critical},
      {"shell-family inequalities", shells},
      {"side claims on c_n and c_n'", side_claims},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail << "exception: " << e.what();
    }
    std::printf("%s %2zu %s (%s)\n", result.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                result.detail.str().c_str());
    std::fflush(stdout);
    if (!result.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
