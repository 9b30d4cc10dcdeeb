#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace onassign {

/// Exact rational scalar used by all verification paths.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "p", or a decimal string like "0.125" into an exact rational.
Rational rat_from_string(const std::string& s);

/// Exact conversion; every finite double is a binary rational.
inline Rational rat_from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  return Rational(v);
}

inline double rat_to_double(const Rational& r) { return r.get_d(); }

inline std::string rat_to_string(const Rational& r) { return r.get_str(); }

/// r^e by repeated squaring, e >= 0.
Rational rat_pow(const Rational& r, unsigned long e);

/// Binomial coefficient C(n, k) as an exact integer (0 when k > n).
mpz_class binomial(unsigned long n, unsigned long k);

/// max(r, 0)
inline Rational rat_pos(const Rational& r) { return r > 0 ? r : Rational(0); }

// Scalar glue shared by the double (Monte Carlo) and rational (verification)
// instantiations of the solvers and samplers.
template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double tol() { return 1e-9; }
  static double from_ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
  static double from_rational(const Rational& r) { return r.get_d(); }
  static double to_double(double v) { return v; }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational tol() { return Rational(0); }
  static Rational from_ratio(long num, long den) { return rat(num, den); }
  static Rational from_rational(const Rational& r) { return r; }
  static double to_double(const Rational& v) { return v.get_d(); }
};

}  // namespace onassign
