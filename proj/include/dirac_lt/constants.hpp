#pragma once

// Closed-form constants of the Dirac-type Lieb-Thirring bounds on S^n and
// the derived upper bounds on the scalar Lieb-Thirring constant k_{S^n}.
//
// All lower-bound constants refer to the normalized surface measure (total
// mass one). Upper bounds on k_{S^n} can be reported in either convention;
// the surface-measure value carries the extra factor sigma_n^(-2/n).

#include "dirac_lt/numeric.hpp"
#include "dirac_lt/spectrum.hpp"

#include <optional>
#include <stdexcept>
#include <string_view>

namespace dirac_lt {

enum class Measure { normalized, surface };

inline std::string_view to_string(Measure m) {
  return m == Measure::normalized ? "normalized" : "surface";
}

/// Which argument produced the first-order lower bound: the dedicated S^2
/// argument (constant 1/3) or the general-n formula.
enum class LowerSource { s2, general };

inline std::string_view to_string(LowerSource s) { return s == LowerSource::s2 ? "s2" : "general"; }

enum class UpperSource { improved, kowalski };

namespace detail {

inline void require_dimension(unsigned n, unsigned min_n, const char* what) {
  if (n < min_n)
    throw std::domain_error(std::string(what) + ": requires n >= " + std::to_string(min_n) +
                            ", got n = " + std::to_string(n));
}

inline Real rational_power(const Real& base, const Rational& exponent) {
  return boost::multiprecision::pow(base, to_real(exponent));
}

}  // namespace detail

/// c_n = n^2/(n^2+3n+2) - (sqrt(n+1)-sqrt(n))^(2/n) / (n+1)^((n+1)/n)
///       * n (2 sqrt(n(n+1)) - n) / (n^2+3n+2)
inline Real c_lower(unsigned n, Precision prec = {}) {
  detail::require_dimension(n, 1, "c_lower");
  PrecisionScope scope(prec);
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const Real nr = n;
  const Real denom = nr * nr + 3 * nr + 2;
  // sqrt(n+1) - sqrt(n) written as 1/(sqrt(n+1) + sqrt(n)) to avoid cancellation.
  const Real gap = 1 / (sqrt(nr + 1) + sqrt(nr));
  const Real head = nr * nr / denom;
  const Real tail = pow(gap, Real(2) / nr) / pow(nr + 1, (nr + 1) / nr) * nr *
                    (2 * sqrt(nr * (nr + 1)) - nr) / denom;
  return head - tail;
}

/// c_n' = (n^4-6n^2+6n+8)/(2n^4+16n^3+42n^2+44n+16) for n >= 2, 7/360 for n = 1.
inline Rational c_prime(unsigned n) {
  detail::require_dimension(n, 1, "c_prime");
  if (n == 1) return Rational(7, 360);
  const Integer m = n;
  const Integer m2 = m * m;
  const Integer m4 = m2 * m2;
  return Rational(m4 - 6 * m2 + 6 * m + 8, 2 * m4 + 16 * m2 * m + 42 * m2 + 44 * m + 16);
}

/// 2^floor(n/2) / n!, the count-envelope prefactor.
inline Rational count_prefactor(unsigned n) {
  detail::require_dimension(n, 1, "count_prefactor");
  return Rational(pow2(n / 2), factorial(n));
}

/// 2^(floor(n/2)+1) / n!, the prefactor when both signs are counted.
inline Rational count_prefactor_doubled(unsigned n) {
  detail::require_dimension(n, 1, "count_prefactor_doubled");
  return Rational(pow2(n / 2 + 1), factorial(n));
}

struct DiracLower {
  Real general;                // n!^(1/n) 2^(-floor(n/2)/n) c_n
  std::optional<Real> s2;      // 1/3, present only for n = 2
  Real best;
  LowerSource source = LowerSource::general;
};

/// Lower bound for the first-order constant K_{S^n}. For n = 2 both the
/// general formula and the sharper S^2 constant 1/3 are reported, and the
/// larger one is selected.
inline DiracLower dirac_lt_lower(unsigned n, Precision prec = {}) {
  detail::require_dimension(n, 1, "dirac_lt_lower");
  const Real cn = c_lower(n, prec);
  PrecisionScope scope(prec);
  const Real nr = n;
  DiracLower out;
  out.general = boost::multiprecision::pow(to_real(factorial(n)), 1 / nr) *
                boost::multiprecision::pow(Real(2), -Real(n / 2) / nr) * cn;
  out.best = out.general;
  if (n == 2) {
    out.s2 = Real(1) / 3;
    if (*out.s2 > out.general) {
      out.best = *out.s2;
      out.source = LowerSource::s2;
    }
  }
  return out;
}

/// Lower bound for the second-order constant K'_{S^n}:
/// c_n' n!^(2/n) 2^(1 - (2/n)(floor(n/2)+1)). The same constant bounds the
/// scalar gradient form on zero-mean functions.
inline Real dirac_sq_lt_lower(unsigned n, Precision prec = {}) {
  detail::require_dimension(n, 1, "dirac_sq_lt_lower");
  PrecisionScope scope(prec);
  const Real nr = n;
  const Real exponent = 1 - Real(2 * (n / 2 + 1)) / nr;
  return to_real(c_prime(n)) * boost::multiprecision::pow(to_real(factorial(n)), 2 / nr) *
         boost::multiprecision::pow(Real(2), exponent);
}

/// n!^(2/n) / (n+4) * (n/(n+2))^((n+2)/n), the earlier comparison constant.
inline Real kowalski_lower(unsigned n, Precision prec = {}) {
  detail::require_dimension(n, 2, "kowalski_lower");
  PrecisionScope scope(prec);
  const Real nr = n;
  return boost::multiprecision::pow(to_real(factorial(n)), 2 / nr) / (nr + 4) *
         boost::multiprecision::pow(nr / (nr + 2), (nr + 2) / nr);
}

/// Gamma(m/2) by exact recursion from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi).
inline Real gamma_half(unsigned m, Precision prec = {}) {
  if (m == 0) throw std::domain_error("gamma_half: pole at 0");
  PrecisionScope scope(prec);
  if (m % 2 == 0) return to_real(factorial(m / 2 - 1));
  Real g = boost::multiprecision::sqrt(pi());
  // Gamma(k + 1/2) = (k - 1/2) Gamma(k - 1/2)
  for (unsigned k = 1; 2 * k + 1 <= m; ++k) g *= Real(2 * k - 1) / 2;
  return g;
}

/// Surface area of the unit n-sphere, 2 pi^((n+1)/2) / Gamma((n+1)/2).
inline Real sphere_surface(unsigned n, Precision prec = {}) {
  detail::require_dimension(n, 1, "sphere_surface");
  const Real g = gamma_half(n + 1, prec);
  PrecisionScope scope(prec);
  return 2 * pow_half(pi(), n + 1) / g;
}

/// Upper bound on k_{S^n}: the reciprocal of the improved (second-order
/// Dirac) or comparison lower-bound constant, optionally converted to the
/// surface measure.
inline Real k_upper(unsigned n, Precision prec, Measure measure, UpperSource source) {
  detail::require_dimension(n, 2, "k_upper");
  const Real lower = source == UpperSource::improved ? dirac_sq_lt_lower(n, prec) : kowalski_lower(n, prec);
  const Real sigma = sphere_surface(n, prec);
  PrecisionScope scope(prec);
  Real upper = 1 / lower;
  if (measure == Measure::surface) upper *= boost::multiprecision::pow(sigma, -Real(2) / n);
  return upper;
}

namespace detail {

inline Real gamma_real(const Real& x) {
  // Half-integers take the exact recursion.
  const Real twice = 2 * x;
  if (twice > 0 && twice == boost::multiprecision::floor(twice) && twice < 1e6)
    return gamma_half(twice.convert_to<unsigned>(), Precision{static_cast<unsigned>(
                                                        mpfr_get_prec(x.backend().data()))});
  Real out;
  mpfr_gamma(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

}  // namespace detail

/// Semiclassical constant Gamma(gamma+1) / (2^n pi^(n/2) Gamma(gamma + n/2 + 1)).
inline Real classical_lt(const Real& gamma, unsigned n, Precision prec = {}) {
  detail::require_dimension(n, 1, "classical_lt");
  if (gamma < 0) throw std::domain_error("classical_lt: gamma must be non-negative");
  PrecisionScope scope(prec);
  const Real g = gamma;  // re-rounded to the working precision
  return detail::gamma_real(g + 1) /
         (ipow(Real(2), n) * pow_half(pi(), n) * detail::gamma_real(g + Real(n) / 2 + 1));
}

/// Every constant for one dimension. Optional members are undefined for
/// n = 1 (the comparison bound and the k_{S^n} upper bounds need n >= 2).
struct BoundSet {
  unsigned n = 1;
  Real c_n;
  Rational c_n_prime;
  Rational K_n;
  Rational K_n_prime;
  Real dirac_lower;
  Real dirac_lower_general;
  LowerSource dirac_lower_source = LowerSource::general;
  Real dirac_sq_lower;
  std::optional<Real> kowalski_lower;
  std::optional<Real> k_upper_improved;
  std::optional<Real> k_upper_kowalski;
  Measure measure = Measure::normalized;
  Precision precision;
};

inline BoundSet bound_set(unsigned n, Precision prec = {}, Measure measure = Measure::normalized) {
  detail::require_dimension(n, 1, "bound_set");
  BoundSet b;
  b.n = n;
  b.c_n = c_lower(n, prec);
  b.c_n_prime = c_prime(n);
  b.K_n = count_prefactor(n);
  b.K_n_prime = count_prefactor_doubled(n);
  const DiracLower dl = dirac_lt_lower(n, prec);
  b.dirac_lower = dl.best;
  b.dirac_lower_general = dl.general;
  b.dirac_lower_source = dl.source;
  b.dirac_sq_lower = dirac_sq_lt_lower(n, prec);
  if (n >= 2) {
    b.kowalski_lower = dirac_lt::kowalski_lower(n, prec);
    b.k_upper_improved = k_upper(n, prec, measure, UpperSource::improved);
    b.k_upper_kowalski = k_upper(n, prec, measure, UpperSource::kowalski);
  }
  b.measure = measure;
  b.precision = prec;
  return b;
}

}  // namespace dirac_lt
