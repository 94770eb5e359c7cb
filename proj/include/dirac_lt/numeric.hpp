#pragma once

// Number types shared by every module: exact integers and rationals (GMP),
// runtime-precision reals (MPFR), and the conversions and decimal
// formatting the reports rely on.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dirac_lt {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

/// Mantissa width, in bits, of the extended-precision arithmetic.
struct Precision {
  unsigned bits = 256;

  constexpr Precision() = default;
  constexpr explicit Precision(unsigned b) : bits(b) {
    if (b < 64) throw std::invalid_argument("precision must be at least 64 bits");
  }

  /// Decimal digits handed to MPFR; rounds up so the mantissa is never
  /// narrower than `bits`.
  [[nodiscard]] unsigned digits10() const {
    return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
  }

  friend bool operator==(Precision, Precision) = default;
};

/// Sets the working precision of newly created reals for the lifetime of the
/// scope and restores the previous value afterwards. MPFR's default precision
/// is process-wide, so scopes must not be interleaved across threads.
class PrecisionScope {
 public:
  explicit PrecisionScope(Precision prec) : saved_(Real::default_precision()) {
    Real::default_precision(prec.digits10());
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real to_real(const Rational& q) { return Real(q); }
inline Real to_real(const Integer& z) { return Real(z); }

inline Integer pow2(unsigned e) {
  Integer r = 1;
  r <<= e;
  return r;
}

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

/// Exact value of a binary floating-point number.
inline Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("non-finite value has no exact rational form");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an integer for IEEE doubles.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  Integer num = scaled;
  exp -= 53;
  if (exp >= 0) return Rational(num << exp);
  return Rational(num, pow2(static_cast<unsigned>(-exp)));
}

/// Exact value of an MPFR number.
inline Rational exact_rational(const Real& x) {
  if (!boost::multiprecision::isfinite(x))
    throw std::domain_error("non-finite value has no exact rational form");
  if (x == 0) return Rational(0);
  Integer mant;
  const long exp = mpfr_get_z_2exp(mant.backend().data(), x.backend().data());
  if (exp >= 0) return Rational(mant << static_cast<unsigned>(exp));
  return Rational(mant, pow2(static_cast<unsigned>(-exp)));
}

inline Integer floor_div(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  Integer quo;
  mpz_fdiv_q(quo.backend().data(), num.backend().data(), den.backend().data());
  return quo;
}

inline Integer ceil_div(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  Integer quo;
  mpz_cdiv_q(quo.backend().data(), num.backend().data(), den.backend().data());
  return quo;
}

/// "p/q", or "p" when the denominator is one.
inline std::string rational_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

inline Real ipow(const Real& base, unsigned e) {
  Real result = 1;
  Real b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

enum class Rounding { truncate, nearest };

/// Fixed-point decimal string with `decimals` fractional digits. Truncation
/// drops digits toward zero, which is how printed tables of bounds are
/// usually produced.
inline std::string to_fixed(const Real& x, int decimals, Rounding mode = Rounding::truncate) {
  if (boost::multiprecision::isnan(x)) return "nan";
  if (boost::multiprecision::isinf(x)) return x > 0 ? "inf" : "-inf";
  const bool negative = x < 0;
  Real scaled = boost::multiprecision::abs(x);
  scaled *= ipow(Real(10), static_cast<unsigned>(decimals));
  Integer digits;
  mpfr_get_z(digits.backend().data(), scaled.backend().data(),
             mode == Rounding::truncate ? MPFR_RNDZ : MPFR_RNDN);
  std::string s = digits.str();
  if (decimals > 0) {
    if (s.size() <= static_cast<std::size_t>(decimals))
      s.insert(0, static_cast<std::size_t>(decimals) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(decimals), ".");
  }
  if (negative && digits != 0) s.insert(0, "-");
  return s;
}

inline std::string to_fixed(const Rational& q, int decimals, Rounding mode = Rounding::truncate) {
  return to_fixed(to_real(q), decimals, mode);
}

/// Scientific notation with `digits` significant digits, round-to-nearest.
inline std::string to_sci(const Real& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

/// base^(num/2) for base > 0 using one square root at most.
inline Real pow_half(const Real& base, unsigned num) {
  Real r = ipow(base, num / 2);
  if (num % 2 != 0) r *= boost::multiprecision::sqrt(base);
  return r;
}

inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Real infinity() { return std::numeric_limits<Real>::infinity(); }

}  // namespace dirac_lt
