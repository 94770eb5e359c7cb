#pragma once

#include <cmath>
#include <utility>

#include <boost/multiprecision/mpfr.hpp>

namespace dirac_lt {

template <class T>
struct Minimum {
  T argmin;
  T value;
  unsigned iterations = 0;
};

/// Golden-section search for a minimum of a unimodal `f` on [a, b]. Stops
/// once the bracket is narrower than `tol`.
template <class T, class F>
Minimum<T> golden_section(F&& f, T a, T b, const T& tol, unsigned max_iterations = 500) {
  using std::sqrt;
  using boost::multiprecision::sqrt;
  if (b < a) std::swap(a, b);
  const T inv_phi = (sqrt(T(5)) - 1) / 2;
  T c = b - inv_phi * (b - a);
  T d = a + inv_phi * (b - a);
  T fc = f(c);
  T fd = f(d);
  unsigned it = 0;
  while (b - a > tol && it < max_iterations) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  Minimum<T> out;
  out.iterations = it;
  if (fc <= fd) {
    out.argmin = c;
    out.value = fc;
  } else {
    out.argmin = d;
    out.value = fd;
  }
  return out;
}

}  // namespace dirac_lt
