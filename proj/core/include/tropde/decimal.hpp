#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "tropde/rational.hpp"

namespace tropde {

/// Round-to-nearest floating value with a runtime-selected precision.
using Decimal = boost::multiprecision::mpfr_float;

/// Scoped override of Decimal's default decimal precision.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10)
      : saved_(Decimal::thread_default_precision()) {
    Decimal::thread_default_precision(digits10);
  }
  ~PrecisionGuard() { Decimal::thread_default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

inline Decimal to_decimal(const Rational& x) { return Decimal(x); }

/// Exact conversion: every finite binary float is a rational.
inline Rational to_rational(const Decimal& x) {
  mpz_t zn;
  mpz_init(zn);
  mpfr_exp_t e = mpfr_get_z_2exp(zn, x.backend().data());
  Integer n(zn);
  mpz_clear(zn);
  Rational r(n);
  if (e >= 0) {
    r *= pow_rational(Rational(2), static_cast<long>(e));
  } else {
    r /= pow_rational(Rational(2), static_cast<long>(-e));
  }
  return r;
}

}  // namespace tropde
