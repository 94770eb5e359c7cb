#pragma once

// Filled-shell orthonormal families. A family made of every eigenfunction of
// degrees 0..K (or 1..L for scalar harmonics) has constant density equal to
// the summed multiplicities under the normalized measure, so both sides of
// each inequality reduce to exact sums over the spectrum. No eigenfunction
// is ever constructed.

#include "dirac_lt/constants.hpp"
#include "dirac_lt/numeric.hpp"
#include "dirac_lt/spectrum.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace dirac_lt {

enum class ShellKind { dirac_positive, dirac_both_signs, scalar_laplace };

inline std::string_view to_string(ShellKind k) {
  switch (k) {
    case ShellKind::dirac_positive: return "dirac_positive";
    case ShellKind::dirac_both_signs: return "dirac_both_signs";
    case ShellKind::scalar_laplace: return "scalar_laplace";
  }
  return "?";
}

struct ShellFamily {
  unsigned n = 1;
  ShellKind kind = ShellKind::dirac_positive;
  /// Highest included degree; scalar families start at degree 1.
  unsigned max_degree = 0;
};

struct ShellReport {
  ShellFamily family;
  Rational lhs;
  Integer rho;
  Rational exponent;
  Real rhs_constant;
  Real rhs;
  Real ratio;
  bool satisfied = false;
  /// Equal to `ratio`: any admissible constant is at most this value.
  Real empirical_constant;
  /// The earlier comparison constant, scalar families with n >= 2 only.
  std::optional<Real> comparison_constant;
  std::optional<bool> comparison_satisfied;
};

/// Dimension of degree-l spherical harmonics on S^n. On the circle every
/// nonzero degree has the two modes cos(l t) and sin(l t).
inline Integer scalar_multiplicity(unsigned n, unsigned l) {
  if (n == 0) throw std::invalid_argument("scalar_multiplicity: n must be positive");
  if (n == 1) return l == 0 ? 1 : 2;
  const Integer num = Integer(2 * l + n - 1) * binomial(l + n - 2, l);
  return num / (n - 1);
}

/// Eigenvalue l(l+n-1) of the Laplace-Beltrami operator.
inline Integer scalar_eigenvalue(unsigned n, unsigned l) { return Integer(l) * (l + n - 1); }

namespace detail {

/// Running sums over shells, so scans over K stay linear.
struct ShellSums {
  Rational lhs = 0;
  Integer rho = 0;
};

inline void add_shell(ShellSums& s, unsigned n, ShellKind kind, unsigned degree) {
  const SphereDim dim(n);
  switch (kind) {
    case ShellKind::dirac_positive: {
      const Integer m = dirac_multiplicity(dim, degree);
      s.lhs += Rational(m) * dirac_eigenvalue(dim, degree, Sign::positive);
      s.rho += m;
      break;
    }
    case ShellKind::dirac_both_signs: {
      const Integer m = dirac_multiplicity(dim, degree);
      const Rational lambda = dirac_eigenvalue(dim, degree, Sign::positive);
      s.lhs += Rational(2 * m) * lambda * lambda;
      s.rho += 2 * m;
      break;
    }
    case ShellKind::scalar_laplace: {
      if (degree == 0) break;  // constants are excluded by the zero-mean condition
      const Integer mult = scalar_multiplicity(n, degree);
      s.lhs += Rational(mult * scalar_eigenvalue(n, degree));
      s.rho += mult;
      break;
    }
  }
}

inline Rational shell_exponent(unsigned n, ShellKind kind) {
  return Rational(Integer(kind == ShellKind::dirac_positive ? n + 1 : n + 2), Integer(n));
}

/// Constant in the inequality the family is tested against.
inline Real shell_constant(unsigned n, ShellKind kind, Precision prec) {
  if (kind == ShellKind::dirac_positive) return dirac_lt_lower(n, prec).best;
  return dirac_sq_lt_lower(n, prec);
}

inline ShellReport finish_report(const ShellFamily& family, const ShellSums& sums, const Real& constant,
                                 const std::optional<Real>& comparison, Precision prec) {
  PrecisionScope scope(prec);
  ShellReport r;
  r.family = family;
  r.lhs = sums.lhs;
  r.rho = sums.rho;
  r.exponent = shell_exponent(family.n, family.kind);
  const Real power = boost::multiprecision::pow(to_real(sums.rho), to_real(r.exponent));
  const Real lhs = to_real(sums.lhs);
  r.rhs_constant = constant;
  r.rhs = constant * power;
  r.ratio = lhs / power;
  r.empirical_constant = r.ratio;
  r.satisfied = lhs >= r.rhs;
  if (comparison) {
    r.comparison_constant = *comparison;
    r.comparison_satisfied = lhs >= *comparison * power;
  }
  return r;
}

}  // namespace detail

/// Filled Dirac shells of degrees 0..K. Unsquared: positive shells against
/// the first-order bound. Squared: both signs with lambda^2 against the
/// second-order bound.
inline ShellReport dirac_shell_report(unsigned n, unsigned max_degree, bool squared, Precision prec = {}) {
  detail::require_dimension(n, 1, "dirac_shell_report");
  const ShellKind kind = squared ? ShellKind::dirac_both_signs : ShellKind::dirac_positive;
  detail::ShellSums sums;
  for (unsigned k = 0; k <= max_degree; ++k) detail::add_shell(sums, n, kind, k);
  return detail::finish_report({n, kind, max_degree}, sums, detail::shell_constant(n, kind, prec),
                               std::nullopt, prec);
}

/// Filled scalar shells of degrees 1..L against the gradient bound, with the
/// comparison constant evaluated alongside for n >= 2.
inline ShellReport scalar_shell_report(unsigned n, unsigned max_degree, Precision prec = {}) {
  detail::require_dimension(n, 1, "scalar_shell_report");
  if (max_degree < 1) throw std::domain_error("scalar_shell_report: need L >= 1 (zero-mean family)");
  detail::ShellSums sums;
  for (unsigned l = 1; l <= max_degree; ++l) detail::add_shell(sums, n, ShellKind::scalar_laplace, l);
  std::optional<Real> comparison;
  if (n >= 2) comparison = kowalski_lower(n, prec);
  return detail::finish_report({n, ShellKind::scalar_laplace, max_degree}, sums,
                               dirac_sq_lt_lower(n, prec), comparison, prec);
}

inline ShellReport shell_report(const ShellFamily& family, Precision prec = {}) {
  if (family.kind == ShellKind::scalar_laplace) return scalar_shell_report(family.n, family.max_degree, prec);
  return dirac_shell_report(family.n, family.max_degree, family.kind == ShellKind::dirac_both_signs, prec);
}

/// Every report for degrees first..max_degree, built incrementally.
inline std::vector<ShellReport> shell_sequence(unsigned n, ShellKind kind, unsigned max_degree,
                                               Precision prec = {}) {
  detail::require_dimension(n, 1, "shell_sequence");
  const unsigned first = kind == ShellKind::scalar_laplace ? 1 : 0;
  const Real constant = detail::shell_constant(n, kind, prec);
  std::optional<Real> comparison;
  if (kind == ShellKind::scalar_laplace && n >= 2) comparison = kowalski_lower(n, prec);
  std::vector<ShellReport> out;
  detail::ShellSums sums;
  for (unsigned k = 0; k <= max_degree; ++k) {
    detail::add_shell(sums, n, kind, k);
    if (k >= first) out.push_back(detail::finish_report({n, kind, k}, sums, constant, comparison, prec));
  }
  return out;
}

/// [proven lower bound, smallest filled-shell ratio]. The upper edge is an
/// empirical value: filled shells are candidates, not known extremizers.
struct Bracket {
  unsigned n = 1;
  ShellKind kind = ShellKind::dirac_positive;
  unsigned k_max = 1;
  Real lower;
  Real upper;
  unsigned argmin_degree = 0;
  /// First degree after which the ratio starts to decrease, if any.
  std::optional<unsigned> turning_point;
  /// Ratios strictly decrease from the turning point to k_max.
  bool monotone_tail = false;
  bool all_satisfied = true;
};

inline Bracket bracket_scan(unsigned n, ShellKind kind, unsigned k_max, Precision prec = {}) {
  if (k_max < 1) throw std::domain_error("bracket_scan: K_max must be at least 1");
  const auto reports = shell_sequence(n, kind, k_max, prec);
  Bracket b;
  b.n = n;
  b.kind = kind;
  b.k_max = k_max;
  b.lower = detail::shell_constant(n, kind, prec);
  b.upper = reports.front().ratio;
  b.argmin_degree = reports.front().family.max_degree;
  for (const auto& r : reports) {
    b.all_satisfied = b.all_satisfied && r.satisfied;
    if (r.ratio < b.upper) {
      b.upper = r.ratio;
      b.argmin_degree = r.family.max_degree;
    }
  }
  for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
    if (reports[i + 1].ratio < reports[i].ratio) {
      b.turning_point = reports[i].family.max_degree;
      b.monotone_tail = true;
      for (std::size_t j = i; j + 1 < reports.size(); ++j)
        if (!(reports[j + 1].ratio < reports[j].ratio)) b.monotone_tail = false;
      break;
    }
  }
  return b;
}

}  // namespace dirac_lt
