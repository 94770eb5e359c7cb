#pragma once

// Spectral integrals I(rho) = int_0^inf w(E) (sqrt(rho) - sqrt(C(E)))_+^2 dE
// with weight w = 1 or w = E, evaluated in normalized density coordinates
// rho_n = rho / K_n. C(E) is either the exact spectral count (a step
// function) or its envelope (E + 1/2)^n for E > n/2.
//
// The ratio I(rho_n) / rho_n^p, p = (n+1)/n for unit weight and (n+2)/n
// for energy weight, is bounded below by c_n and c_n' respectively; the
// scan in this header checks that numerically and locates the minimizer.

#include "dirac_lt/constants.hpp"
#include "dirac_lt/minimize.hpp"
#include "dirac_lt/numeric.hpp"
#include "dirac_lt/quadrature.hpp"
#include "dirac_lt/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dirac_lt {

enum class Weight { unit, energy };
enum class Variant { exact_count, envelope, closed_form };

inline std::string_view to_string(Weight w) { return w == Weight::unit ? "unit" : "energy"; }

inline std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::exact_count: return "exact_count";
    case Variant::envelope: return "envelope";
    case Variant::closed_form: return "closed_form";
  }
  return "?";
}

/// p in I / rho^p: (n+1)/n for unit weight, (n+2)/n for energy weight.
inline Rational ratio_exponent(unsigned n, Weight w) {
  return Rational(Integer(n + (w == Weight::unit ? 1 : 2)), Integer(n));
}

struct IntegralReport {
  unsigned n = 1;
  Real rho;
  Weight weight = Weight::unit;
  Variant variant = Variant::envelope;
  Real value;
  Real ratio;
  /// Last active segment index (M for the S^2 count) or panel count.
  long branch = 0;
  Real error_estimate;
};

/// Gauss-Legendre settings for the envelope integrand.
struct QuadratureSpec {
  unsigned order = 32;
  double rel_tol = 1e-10;
};

namespace detail {

inline void require_positive_rho(const Real& rho, const char* what) {
  if (!(rho > 0)) throw std::domain_error(std::string(what) + ": rho must be positive");
}

/// rho^p with p = (n+1)/n or (n+2)/n, given rho^(1/n).
inline Real ratio_power(const Real& rho, const Real& root_n, unsigned n, Weight w) {
  (void)n;
  return w == Weight::unit ? Real(rho * root_n) : Real(rho * root_n * root_n);
}

inline Real nth_root(const Real& x, unsigned n) {
  Real out;
  mpfr_rootn_ui(out.backend().data(), x.backend().data(), n, MPFR_RNDN);
  return out;
}

/// Contribution of [0, n/2], where C vanishes.
inline Real quiet_segment(const Real& rho, unsigned n, Weight w) {
  const Real half_n = Real(n) / 2;
  return w == Weight::unit ? Real(rho * half_n) : Real(rho * half_n * half_n / 2);
}

}  // namespace detail

/// ((n+1)/2)^n: above this normalized density the envelope is active.
inline Real envelope_breakpoint(unsigned n, Precision prec = {}) {
  PrecisionScope scope(prec);
  return ipow(Real(n + 1) / 2, n);
}

/// Normalized exact count n! * sum_{k<j} C(k+n-1, k): the step value of C(E)
/// on (n/2 + j - 1, n/2 + j].
inline Integer normalized_count(unsigned n, unsigned long j) {
  if (j == 0) return 0;
  const SphereDim dim(n);
  const Rational energy = dim.half() + Rational(Integer(j));
  const Rational c = Rational(cumulative_count(dim, energy)) / count_prefactor(n);
  return boost::multiprecision::numerator(c);
}

/// Segment-exact evaluation with the exact count, or Gauss-Legendre panels
/// on the envelope. `rho` is the normalized density.
inline IntegralReport integral_oracle(unsigned n, const Real& rho_in, Weight weight, Variant variant,
                                      Precision prec = {}, QuadratureSpec quad = {}) {
  detail::require_dimension(n, 1, "integral_oracle");
  detail::require_positive_rho(rho_in, "integral_oracle");
  if (variant == Variant::closed_form)
    throw std::invalid_argument("integral_oracle: use s2_closed_form or i1_closed for closed forms");
  PrecisionScope scope(prec);
  using boost::multiprecision::sqrt;
  const Real rho = rho_in;
  const Real root_n = detail::nth_root(rho, n);
  IntegralReport out;
  out.n = n;
  out.rho = rho;
  out.weight = weight;
  out.variant = variant;
  out.error_estimate = 0;
  Real value = detail::quiet_segment(rho, n, weight);
  const Real sqrt_rho = sqrt(rho);
  const Real half_n = Real(n) / 2;

  if (variant == Variant::exact_count) {
    long last = 0;
    for (unsigned long j = 1;; ++j) {
      const Integer c = normalized_count(n, j);
      if (Real(c) >= rho) {
        if (Real(c) == rho) last = static_cast<long>(j);
        break;
      }
      const Real gap = sqrt_rho - sqrt(Real(c));
      const Real sq = gap * gap;
      if (weight == Weight::unit) {
        value += sq;
      } else {
        const Real a = half_n + Real(j - 1);
        const Real b = a + 1;
        value += sq * (b * b - a * a) / 2;
      }
      last = static_cast<long>(j);
    }
    out.branch = last;
  } else {
    const Real top = root_n - Real(1) / 2;
    if (top > half_n) {
      const auto& rule = gauss_legendre_rule(quad.order, prec);
      auto integrand = [&](const Real& e) {
        const Real gap = sqrt_rho - pow_half(e + Real(1) / 2, n);
        return weight == Weight::unit ? Real(gap * gap) : Real(e * gap * gap);
      };
      const auto res = integrate_certified<Real>(integrand, half_n, top, rule, half_n, Real(1),
                                                 Real(quad.rel_tol));
      value += res.value;
      out.error_estimate = res.error_estimate;
      out.branch = static_cast<long>(ceil(Real(top - half_n)).convert_to<double>());
    }
  }
  out.value = value;
  out.ratio = value / detail::ratio_power(rho, root_n, n, weight);
  return out;
}

/// Unique M >= 0 with M^2 + M <= rho < (M+1)^2 + (M+1).
inline long s2_branch(const Real& rho) {
  using boost::multiprecision::sqrt;
  long m = static_cast<long>(((sqrt(1 + 4 * rho) - 1) / 2).convert_to<double>());
  if (m < 0) m = 0;
  while (Real(m + 1) * (m + 2) <= rho) ++m;
  while (m > 0 && Real(m) * (m + 1) > rho) --m;
  return m;
}

/// (M+1) rho - 2 sqrt(rho) sum_{m<=M} sqrt(m^2+m) + M(M+1)(M+2)/3: the S^2
/// exact-count integral with unit weight.
inline IntegralReport s2_closed_form(const Real& rho_in, Precision prec = {}) {
  detail::require_positive_rho(rho_in, "s2_closed_form");
  PrecisionScope scope(prec);
  using boost::multiprecision::sqrt;
  const Real rho = rho_in;
  const long m_max = s2_branch(rho);
  Real root_sum = 0;
  for (long m = 1; m <= m_max; ++m) root_sum += sqrt(Real(m) * (m + 1));
  const Real mr = m_max;
  IntegralReport out;
  out.n = 2;
  out.rho = rho;
  out.weight = Weight::unit;
  out.variant = Variant::closed_form;
  out.value = (mr + 1) * rho - 2 * sqrt(rho) * root_sum + mr * (mr + 1) * (mr + 2) / 3;
  out.ratio = out.value / (rho * sqrt(rho));
  out.branch = m_max;
  out.error_estimate = 0;
  return out;
}

/// Lower profile f(rho, M) = (M+1)/(2 sqrt(rho)) (1 - M(M+2)/(3 rho)) of
/// I(rho)/rho^(3/2) on S^2, obtained from the telescoping bound on
/// sum sqrt(m^2+m).
inline Real s2_lower_profile(const Real& rho, long m, Precision prec = {}) {
  PrecisionScope scope(prec);
  const Real mr = m;
  return (mr + 1) / (2 * boost::multiprecision::sqrt(rho)) * (1 - mr * (mr + 2) / (3 * rho));
}

struct EndpointValues {
  Real left;   // f at rho = M^2 + M (infinite for M = 0)
  Real right;  // f at rho = (M+1)^2 + (M+1)
};

/// Values of the S^2 lower profile at both ends of branch M. The right value
/// is the branch minimum and decreases to 1/3.
inline EndpointValues s2_envelope(long m, Precision prec = {}) {
  if (m < 0) throw std::domain_error("s2_envelope: M must be non-negative");
  PrecisionScope scope(prec);
  using boost::multiprecision::sqrt;
  const Real mr = m;
  EndpointValues out;
  out.left = m == 0 ? infinity() : Real((2 * mr + 1) / (6 * sqrt(mr * (mr + 1))));
  out.right = (2 * mr + 3) / (6 * sqrt((mr + 1) * (mr + 2)));
  return out;
}

struct EnergyCoefficients {
  Real a;  // 2/(n+4) ((n+1)/2)^((n+4)/2) - 1/(n+2) ((n+1)/2)^((n+2)/2)
  Real b;  // (n+1)^n (n^2+n-1) / (2^(n+2) (n+2))
};

inline EnergyCoefficients energy_coefficients(unsigned n, Precision prec = {}) {
  PrecisionScope scope(prec);
  const Real nr = n;
  const Real h = (nr + 1) / 2;
  EnergyCoefficients c;
  c.a = 2 / (nr + 4) * pow_half(h, n + 4) - 1 / (nr + 2) * pow_half(h, n + 2);
  c.b = ipow(nr + 1, n) * (nr * nr + nr - 1) / (ipow(Real(2), n + 2) * (nr + 2));
  return c;
}

namespace detail {

/// Closed form of the envelope integral for rho_n above the breakpoint.
inline Real i1_formula(unsigned n, const Real& x, Weight weight) {
  using boost::multiprecision::sqrt;
  const Real nr = n;
  const Real root_n = nth_root(x, n);
  if (weight == Weight::unit) {
    return sqrt(x) * pow_half(nr + 1, n + 2) / (pow_half(Real(2), n) / 2 * (nr + 2)) +
           x * root_n * nr * nr / (nr * nr + 3 * nr + 2) - x / 2 -
           ipow(nr + 1, n) / ipow(Real(2), n + 1);
  }
  const EnergyCoefficients c = energy_coefficients(n, Precision{static_cast<unsigned>(
                                                          mpfr_get_prec(x.backend().data()))});
  return x / 8 + nr * nr * x / (2 * (nr + 2)) * (root_n * root_n / (nr + 4) - root_n / (nr + 1)) +
         2 * sqrt(x) * c.a - c.b;
}

}  // namespace detail

/// Closed-form envelope integral I_1(rho_n); valid only above the breakpoint.
inline Real i1_closed(unsigned n, const Real& rho_n, Weight weight, Precision prec = {}) {
  detail::require_dimension(n, 1, "i1_closed");
  PrecisionScope scope(prec);
  const Real x = rho_n;
  if (!(x > envelope_breakpoint(n, prec)))
    throw std::domain_error("i1_closed: rho_n must exceed ((n+1)/2)^n");
  return detail::i1_formula(n, x, weight);
}

/// Envelope integral by its analytic pieces: linear below the breakpoint,
/// I_1 above it.
inline IntegralReport envelope_closed_form(unsigned n, const Real& rho_in, Weight weight,
                                           Precision prec = {}) {
  detail::require_positive_rho(rho_in, "envelope_closed_form");
  PrecisionScope scope(prec);
  const Real rho = rho_in;
  IntegralReport out;
  out.n = n;
  out.rho = rho;
  out.weight = weight;
  out.variant = Variant::closed_form;
  out.error_estimate = 0;
  out.value = rho > envelope_breakpoint(n, prec) ? detail::i1_formula(n, rho, weight)
                                                 : detail::quiet_segment(rho, n, weight);
  out.ratio = out.value / detail::ratio_power(rho, detail::nth_root(rho, n), n, weight);
  return out;
}

struct BreakpointLimits {
  Real below;  // limit of the ratio from rho_n <= ((n+1)/2)^n
  Real above;  // I_1 ratio evaluated at the breakpoint
};

/// Both one-sided limits of the envelope ratio at rho_n = ((n+1)/2)^n.
inline BreakpointLimits breakpoint_limits(unsigned n, Weight weight, Precision prec = {}) {
  PrecisionScope scope(prec);
  const Real x = envelope_breakpoint(n, prec);
  const Real nr = n;
  BreakpointLimits out;
  out.below = weight == Weight::unit ? Real(nr / (nr + 1)) : Real(nr * nr / (2 * (nr + 1) * (nr + 1)));
  out.above =
      detail::i1_formula(n, x, weight) / detail::ratio_power(x, detail::nth_root(x, n), n, weight);
  return out;
}

/// f_n(x) = d/dx [I_1(x) / x^((n+1)/n)] for the unit weight.
inline Real i1_ratio_derivative(unsigned n, const Real& x_in, Precision prec = {}) {
  PrecisionScope scope(prec);
  using boost::multiprecision::pow;
  using boost::multiprecision::sqrt;
  const Real x = x_in;
  const Real nr = n;
  const Real lead = ipow(nr + 1, n + 1) / (ipow(Real(2), n + 1)) / sqrt(x);
  const Real mid = sqrt(x) / 2;
  const Real tail = pow_half(nr + 1, n + 2) / pow_half(Real(2), n);
  return pow(x, -(3 * nr + 2) / (2 * nr)) / nr * (lead + mid - tail);
}

struct CriticalPoints {
  unsigned n = 1;
  Real u_minus;
  Real u_plus;
  Real x_minus;
  Real x_plus;
  /// max over both roots of |Q(u)| / (sum of |terms|), Q the quadratic
  /// 2^n u^2 - 2^((n+2)/2) (n+1)^((n+2)/2) u + (n+1)^(n+1).
  Real residual;
};

/// Quadratic Q(u) whose positive roots u = sqrt(x) are the critical points
/// of I_1(x) / x^((n+1)/n). Returns (value, scale) with scale the sum of
/// the absolute values of its three terms.
inline std::pair<Real, Real> critical_quadratic(unsigned n, const Real& u) {
  const Real nr = n;
  const Real t2 = ipow(Real(2), n) * u * u;
  const Real t1 = pow_half(Real(2), n + 2) * pow_half(nr + 1, n + 2) * u;
  const Real t0 = ipow(nr + 1, n + 1);
  return {t2 - t1 + t0, boost::multiprecision::abs(t2) + boost::multiprecision::abs(t1) + t0};
}

inline CriticalPoints critical_points(unsigned n, Precision prec = {}) {
  detail::require_dimension(n, 1, "critical_points");
  PrecisionScope scope(prec);
  using boost::multiprecision::abs;
  using boost::multiprecision::sqrt;
  const Real nr = n;
  const Real scale = pow_half((nr + 1) / 2, n) * sqrt(nr + 1);
  const Real s1 = sqrt(nr + 1);
  const Real s0 = sqrt(nr);
  CriticalPoints out;
  out.n = n;
  out.u_plus = scale * (s1 + s0);
  out.u_minus = scale / (s1 + s0);  // (s1 - s0) = 1/(s1 + s0)
  out.x_plus = out.u_plus * out.u_plus;
  out.x_minus = out.u_minus * out.u_minus;
  const auto [qp, sp] = critical_quadratic(n, out.u_plus);
  const auto [qm, sm] = critical_quadratic(n, out.u_minus);
  const Real rp = abs(qp) / sp;
  const Real rm = abs(qm) / sm;
  out.residual = rp > rm ? rp : rm;
  return out;
}

struct QRDecomposition {
  Real q;
  Real r;
  Real y0;
};

/// I_1(x)/x^((n+2)/n) = q(y) + R(y) with y = x^(-1/n), where
/// q(y) = y^2/8 - n^2 y/(2(n+1)(n+2)) + n^2/(2(n+2)(n+4)) and
/// R(y) = 2 A_n y^((n+4)/2) - B_n y^(n+2); q is minimal at y0 = 2n^2/((n+1)(n+2)).
inline QRDecomposition q_r_decomposition(unsigned n, const Real& y_in, Precision prec = {}) {
  if (!(y_in > 0)) throw std::domain_error("q_r_decomposition: y must be positive");
  PrecisionScope scope(prec);
  const Real y = y_in;
  const Real nr = n;
  const EnergyCoefficients c = energy_coefficients(n, prec);
  QRDecomposition out;
  out.q = y * y / 8 - nr * nr * y / (2 * (nr + 1) * (nr + 2)) + nr * nr / (2 * (nr + 2) * (nr + 4));
  out.r = 2 * c.a * pow_half(y, n + 4) - c.b * ipow(y, n + 2);
  out.y0 = 2 * nr * nr / ((nr + 1) * (nr + 2));
  return out;
}

/// Exact q(y) for rational y.
inline Rational q_exact(unsigned n, const Rational& y) {
  const Integer m = n;
  return y * y / 8 - Rational(m * m, 2 * (m + 1) * (m + 2)) * y + Rational(m * m, 2 * (m + 2) * (m + 4));
}

// ---------------------------------------------------------------------------
// Ratio scan

struct GridSpec {
  unsigned points = 1000;
  /// Grid starts at breakpoint * 10^-decades_below.
  double decades_below = 3.0;
  /// Grid ends at max_multiple * x_plus.
  double max_multiple = 10.0;
  /// Golden-section bracket width at which refinement stops.
  double refine_tol = 1e-10;
};

/// Points the scan must contain: ((n+1)/2)^n, x_- and x_+, plus every jump
/// of the exact count (M^2 + M on S^2) up to rho_max.
inline std::vector<Real> required_breakpoints(unsigned n, Variant variant, const Real& rho_max,
                                              Precision prec = {}) {
  PrecisionScope scope(prec);
  std::vector<Real> out;
  const CriticalPoints cp = critical_points(n, prec);
  for (const Real& v : {envelope_breakpoint(n, prec), cp.x_minus, cp.x_plus})
    if (v <= rho_max) out.push_back(v);
  if (variant == Variant::exact_count) {
    for (unsigned long j = 1;; ++j) {
      const Real c = Real(normalized_count(n, j));
      if (c > rho_max) break;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Real> make_grid(unsigned n, Variant variant, const GridSpec& spec,
                                   Precision prec = {}) {
  if (spec.points < 2) throw std::invalid_argument("make_grid: need at least two points");
  PrecisionScope scope(prec);
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  const CriticalPoints cp = critical_points(n, prec);
  const Real lo = envelope_breakpoint(n, prec) * boost::multiprecision::pow(Real(10), -Real(spec.decades_below));
  const Real hi = cp.x_plus * Real(spec.max_multiple);
  const Real log_lo = log(lo);
  const Real step = (log(hi) - log_lo) / (spec.points - 1);
  std::vector<Real> grid;
  grid.reserve(spec.points + 64);
  for (unsigned i = 0; i < spec.points; ++i) grid.push_back(exp(log_lo + step * i));
  grid.back() = hi;
  for (Real& b : required_breakpoints(n, variant, hi, prec)) grid.push_back(std::move(b));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

/// Throws unless every required breakpoint up to the grid's last point is
/// present in `grid`.
inline void check_grid(unsigned n, Variant variant, const std::vector<Real>& grid, Precision prec = {}) {
  if (grid.empty()) throw std::invalid_argument("ratio scan grid is empty");
  if (!std::is_sorted(grid.begin(), grid.end()))
    throw std::invalid_argument("ratio scan grid must be sorted");
  for (const Real& b : required_breakpoints(n, variant, grid.back(), prec)) {
    if (b < grid.front()) continue;
    if (!std::binary_search(grid.begin(), grid.end(), b))
      throw std::invalid_argument("ratio scan grid misses breakpoint rho_n = " + to_sci(b, 20));
  }
}

struct InfimumReport {
  unsigned n = 1;
  Weight weight = Weight::unit;
  Variant variant = Variant::envelope;
  std::size_t grid_size = 0;
  Real rho_min;
  Real rho_max;
  Real grid_minimizer;
  Real minimizer;
  Real minimum;
  /// Analytic floor in normalized coordinates (c_n, c_n', or 1/3 on S^2).
  Real floor;
  std::string floor_label;
  /// Floor mapped back to the physical density: the inequality constant.
  Real physical_floor;
  Real margin;
  Real x_plus;
  /// |minimizer - x_plus| / x_plus.
  Real distance_to_x_plus;
  double tolerance = 1e-9;
  bool passed = false;
};

namespace detail {

inline Real scan_floor(unsigned n, Weight weight, Variant variant, Precision prec, std::string& label) {
  if (weight == Weight::energy) {
    label = "c_n_prime";
    return to_real(c_prime(n));
  }
  if (n == 2 && variant == Variant::exact_count) {
    label = "one_third";
    return Real(1) / 3;
  }
  label = "c_n";
  return c_lower(n, prec);
}

}  // namespace detail

inline InfimumReport ratio_scan(unsigned n, Weight weight, Variant variant, const std::vector<Real>& grid,
                                Precision prec = {}, const GridSpec& spec = {}) {
  detail::require_dimension(n, 1, "ratio_scan");
  if (variant == Variant::closed_form)
    throw std::invalid_argument("ratio_scan: variant must be exact_count or envelope");
  check_grid(n, variant, grid, prec);
  PrecisionScope scope(prec);
  using boost::multiprecision::abs;

  auto ratio_at = [&](const Real& rho) { return integral_oracle(n, rho, weight, variant, prec).ratio; };

  std::vector<Real> ratios;
  ratios.reserve(grid.size());
  for (const Real& rho : grid) ratios.push_back(ratio_at(rho));
  const auto best = static_cast<std::size_t>(std::min_element(ratios.begin(), ratios.end()) - ratios.begin());

  InfimumReport out;
  out.n = n;
  out.weight = weight;
  out.variant = variant;
  out.grid_size = grid.size();
  out.rho_min = grid.front();
  out.rho_max = grid.back();
  out.grid_minimizer = grid[best];
  out.minimizer = grid[best];
  out.minimum = ratios[best];

  const std::size_t lo = best == 0 ? 0 : best - 1;
  const std::size_t hi = best + 1 < grid.size() ? best + 1 : best;
  if (hi > lo) {
    const Minimum<Real> refined = golden_section(ratio_at, grid[lo], grid[hi], Real(spec.refine_tol));
    if (refined.value < out.minimum) {
      out.minimum = refined.value;
      out.minimizer = refined.argmin;
    }
  }

  out.floor = detail::scan_floor(n, weight, variant, prec, out.floor_label);
  const Real nr = n;
  if (weight == Weight::unit) {
    out.physical_floor = out.floor * boost::multiprecision::pow(to_real(count_prefactor(n)), -1 / nr);
  } else {
    out.physical_floor =
        2 * out.floor * boost::multiprecision::pow(to_real(count_prefactor_doubled(n)), -2 / nr);
  }
  out.margin = out.minimum - out.floor;
  out.x_plus = critical_points(n, prec).x_plus;
  out.distance_to_x_plus = abs(out.minimizer - out.x_plus) / out.x_plus;
  out.passed = out.minimum >= out.floor - Real(out.tolerance);
  return out;
}

inline InfimumReport ratio_scan(unsigned n, Weight weight, Variant variant, const GridSpec& spec = {},
                                Precision prec = {}) {
  return ratio_scan(n, weight, variant, make_grid(n, variant, spec, prec), prec, spec);
}

}  // namespace dirac_lt
