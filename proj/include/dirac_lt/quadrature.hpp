#pragma once

// Gauss-Legendre panel quadrature. Nodes are computed at the working
// precision by Newton iteration on P_N, so the rule is as accurate as the
// scalar type allows.

#include "dirac_lt/numeric.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

namespace dirac_lt {

namespace detail {

inline double unit_roundoff(const double&) { return std::numeric_limits<double>::epsilon(); }
inline long double unit_roundoff(const long double&) {
  return std::numeric_limits<long double>::epsilon();
}
inline Real unit_roundoff(const Real& sample) {
  Real eps = 1;
  const auto bits = static_cast<long>(mpfr_get_prec(sample.backend().data()));
  return ldexp(eps, static_cast<int>(1 - bits));
}

template <class T>
T abs_value(const T& x) {
  using std::abs;
  using boost::multiprecision::abs;
  return abs(x);
}

}  // namespace detail

template <class T>
class GaussLegendre {
 public:
  explicit GaussLegendre(unsigned order) : order_(order) {
    if (order == 0) throw std::invalid_argument("Gauss-Legendre order must be positive");
    nodes_.resize(order);
    weights_.resize(order);
    const T one = 1;
    const T tol = 8 * detail::unit_roundoff(one);
    const double pi_d = 3.14159265358979323846;
    for (unsigned i = 0; i < (order + 1) / 2; ++i) {
      T x = std::cos(pi_d * (i + 0.75) / (order + 0.5));
      T dp = 0;
      for (int iter = 0; iter < 100; ++iter) {
        auto [p, d] = legendre(x);
        dp = d;
        const T dx = p / d;
        x -= dx;
        if (detail::abs_value(dx) <= tol * detail::abs_value(x) + tol) {
          dp = legendre(x).second;
          break;
        }
      }
      const T w = 2 / ((1 - x * x) * dp * dp);
      nodes_[i] = -x;
      nodes_[order - 1 - i] = x;
      weights_[i] = w;
      weights_[order - 1 - i] = w;
    }
  }

  [[nodiscard]] unsigned order() const { return order_; }
  [[nodiscard]] const std::vector<T>& nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<T>& weights() const { return weights_; }

  /// Single-panel rule on [a, b].
  template <class F>
  T integrate(F&& f, const T& a, const T& b) const {
    const T half = (b - a) / 2;
    const T mid = (a + b) / 2;
    T sum = 0;
    for (unsigned i = 0; i < order_; ++i) sum += weights_[i] * f(mid + half * nodes_[i]);
    return sum * half;
  }

 private:
  /// (P_N(x), P_N'(x)) by the three-term recurrence.
  std::pair<T, T> legendre(const T& x) const {
    T p0 = 1;
    T p1 = x;
    for (unsigned k = 2; k <= order_; ++k) {
      T p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = std::move(p1);
      p1 = std::move(p2);
    }
    T dp = order_ * (x * p1 - p0) / (x * x - 1);
    return {p1, dp};
  }

  unsigned order_;
  std::vector<T> nodes_;
  std::vector<T> weights_;
};

/// Rule at the current working precision, built once per (order, bits).
inline const GaussLegendre<Real>& gauss_legendre_rule(unsigned order, Precision prec) {
  thread_local std::map<std::pair<unsigned, unsigned>, GaussLegendre<Real>> cache;
  const auto key = std::make_pair(order, prec.bits);
  auto it = cache.find(key);
  if (it == cache.end()) {
    PrecisionScope scope(prec);
    it = cache.emplace(key, GaussLegendre<Real>(order)).first;
  }
  return it->second;
}

/// Integrates over [a, b] with panels whose interior boundaries sit on the
/// lattice anchor + j * width.
template <class T, class F>
T integrate_panels(F&& f, const T& a, const T& b, const GaussLegendre<T>& rule, const T& anchor,
                   const T& width) {
  if (!(b > a)) return T(0);
  using std::floor;
  using boost::multiprecision::floor;
  T sum = 0;
  T left = a;
  T next = anchor + (floor((a - anchor) / width) + 1) * width;
  while (left < b) {
    T right = next < b ? next : b;
    if (right > left) sum += rule.integrate(f, left, right);
    left = right;
    next += width;
  }
  return sum;
}

template <class T>
struct CertifiedIntegral {
  T value;
  T error_estimate;
  unsigned halvings = 0;
  bool certified = false;
};

/// Panel quadrature refined by halving the panel width until two successive
/// estimates agree to `rel_tol` (relative to the larger of |value| and 1).
template <class T, class F>
CertifiedIntegral<T> integrate_certified(F&& f, const T& a, const T& b, const GaussLegendre<T>& rule,
                                         const T& anchor, const T& width, const T& rel_tol,
                                         unsigned max_halvings = 6) {
  CertifiedIntegral<T> out;
  T w = width;
  T coarse = integrate_panels(f, a, b, rule, anchor, w);
  for (unsigned h = 1; h <= max_halvings; ++h) {
    w /= 2;
    T fine = integrate_panels(f, a, b, rule, anchor, w);
    T diff = detail::abs_value(T(fine - coarse));
    T scale = detail::abs_value(fine);
    if (scale < 1) scale = 1;
    out.value = fine;
    out.error_estimate = diff;
    out.halvings = h;
    if (diff <= rel_tol * scale) {
      out.certified = true;
      return out;
    }
    coarse = std::move(fine);
  }
  return out;
}

}  // namespace dirac_lt
