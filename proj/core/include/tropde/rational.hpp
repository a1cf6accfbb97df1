#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "tropde/error.hpp"

namespace tropde {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// base^exp with a (possibly negative) integer exponent.  0^0 = 1.
inline Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw EvalError("zero raised to a negative power");
    return Rational(0);
  }
  Integer n = boost::multiprecision::pow(numerator(base),
                                         static_cast<unsigned>(exp < 0 ? -exp : exp));
  Integer d = boost::multiprecision::pow(denominator(base),
                                         static_cast<unsigned>(exp < 0 ? -exp : exp));
  return exp > 0 ? Rational(n, d) : Rational(d, n);
}

/// If x is the square of a rational, store that square root and return true.
inline bool sqrt_exact(const Rational& x, Rational& root) {
  if (x < 0) return false;
  Integer n = numerator(x), d = denominator(x);
  Integer rn = boost::multiprecision::sqrt(n);
  Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  return true;
}

inline std::string to_string(const Rational& x) { return x.str(); }

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// gcd of two nonnegative rationals: gcd of numerators over lcm of denominators.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  if (a == 0) return b;
  if (b == 0) return a;
  return Rational(gcd(numerator(a), numerator(b)), lcm(denominator(a), denominator(b)));
}

}  // namespace tropde
