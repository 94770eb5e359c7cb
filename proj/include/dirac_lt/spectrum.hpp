#pragma once

// Dirac spectrum on the n-sphere: eigenvalues +-(n/2 + k), multiplicities
// 2^floor(n/2) * C(k+n-1, k), the cumulative count of positive eigenvalues
// below an energy, and the polynomial envelope that bounds it.

#include "dirac_lt/numeric.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace dirac_lt {

class SphereDim {
 public:
  explicit SphereDim(unsigned n) : n_(n) {
    if (n == 0) throw std::invalid_argument("sphere dimension must be at least 1");
  }

  [[nodiscard]] unsigned n() const { return n_; }
  [[nodiscard]] unsigned half_floor() const { return n_ / 2; }
  /// n/2 as an exact rational.
  [[nodiscard]] Rational half() const { return Rational(Integer(n_), Integer(2)); }
  /// Spinor rank factor 2^floor(n/2).
  [[nodiscard]] Integer spinor_rank() const { return pow2(half_floor()); }

  friend bool operator==(SphereDim, SphereDim) = default;

 private:
  unsigned n_;
};

enum class Sign { positive, negative };

struct SpectralLine {
  unsigned k = 0;
  Sign sign = Sign::positive;
  Rational eigenvalue;
  Integer multiplicity;
};

struct CountReport {
  Rational energy;
  Integer exact_count;
  Rational envelope;
};

/// C(n, k) by the multiplicative ladder; every partial product is an exact
/// binomial so no division leaves a remainder.
inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Rational dirac_eigenvalue(SphereDim dim, unsigned k, Sign sign) {
  Rational lambda = dim.half() + k;
  return sign == Sign::positive ? lambda : Rational(-lambda);
}

inline Integer dirac_multiplicity(SphereDim dim, unsigned k) {
  return dim.spinor_rank() * binomial(static_cast<unsigned long>(k) + dim.n() - 1, k);
}

inline SpectralLine spectral_line(SphereDim dim, unsigned k, Sign sign) {
  return {k, sign, dirac_eigenvalue(dim, k, sign), dirac_multiplicity(dim, k)};
}

/// Number of degrees k with n/2 + k < E. Integer values of E - n/2 are
/// excluded, so the count is ceil(E - n/2) for E > n/2 and 0 otherwise.
inline unsigned long levels_below(SphereDim dim, const Rational& energy) {
  const Rational shifted = energy - dim.half();
  if (shifted <= 0) return 0;
  const Integer j = ceil_div(shifted);
  if (j > std::numeric_limits<unsigned long>::max())
    throw std::overflow_error("energy too large for level enumeration");
  return j.convert_to<unsigned long>();
}

/// Positive eigenvalues strictly below `energy`, with multiplicity. Uses the
/// hockey-stick closed form sum_{k<j} C(k+n-1, k) = C(j-1+n, j-1).
inline Integer cumulative_count(SphereDim dim, const Rational& energy) {
  if (energy < 0) throw std::domain_error("cumulative_count: energy must be non-negative");
  const unsigned long j = levels_below(dim, energy);
  if (j == 0) return 0;
  return dim.spinor_rank() * binomial(j - 1 + dim.n(), j - 1);
}

inline Integer cumulative_count(SphereDim dim, double energy) {
  return cumulative_count(dim, exact_rational(energy));
}

inline Integer cumulative_count(SphereDim dim, const Real& energy) {
  return cumulative_count(dim, exact_rational(energy));
}

/// 2^floor(n/2) (E + 1/2)^n / n! for E > n/2, else 0. `doubled` counts both
/// signs of the spectrum, i.e. prefactor 2^(floor(n/2)+1).
inline Rational count_envelope(SphereDim dim, const Rational& energy, bool doubled = false) {
  if (energy < 0) throw std::domain_error("count_envelope: energy must be non-negative");
  if (energy <= dim.half()) return 0;
  const Rational base = energy + Rational(1, 2);
  Rational power = 1;
  for (unsigned i = 0; i < dim.n(); ++i) power *= base;
  Integer prefactor = dim.spinor_rank();
  if (doubled) prefactor *= 2;
  return power * prefactor / factorial(dim.n());
}

inline Rational count_envelope(SphereDim dim, double energy, bool doubled = false) {
  return count_envelope(dim, exact_rational(energy), doubled);
}

inline CountReport count_report(SphereDim dim, const Rational& energy) {
  return {energy, cumulative_count(dim, energy), count_envelope(dim, energy)};
}

/// Positive spectral lines for degrees 0..k_max.
inline std::vector<SpectralLine> positive_lines(SphereDim dim, unsigned k_max) {
  std::vector<SpectralLine> lines;
  lines.reserve(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) lines.push_back(spectral_line(dim, k, Sign::positive));
  return lines;
}

}  // namespace dirac_lt
