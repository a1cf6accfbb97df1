#pragma once

#include <mpfr.h>

#include <string>

#include "tropde/decimal.hpp"
#include "tropde/rational.hpp"

namespace tropde {

/// Closed interval [lo, hi] with directed-rounding endpoints.  Every
/// operation rounds lo down and hi up, so the true value of the computed
/// quantity is always enclosed.  Precision is per-value, in bits.
class Interval {
 public:
  Interval(const Interval&) = default;
  Interval(Interval&&) = default;
  Interval& operator=(const Interval&) = default;
  Interval& operator=(Interval&&) = default;

  static Interval exact_zero(mpfr_prec_t bits);
  static Interval from_rational(const Rational& x, mpfr_prec_t bits);

  /// ln(x) for rational x > 0.
  static Interval log_of_rational(const Rational& x, mpfr_prec_t bits);

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;

  Interval scaled(const Rational& c) const;  // multiply by an exact rational
  Interval log() const;                      // requires lo > 0
  Interval exp() const;

  bool strictly_less(const Interval& o) const { return hi_ < o.lo_; }
  bool strictly_greater(const Interval& o) const { return lo_ > o.hi_; }
  /// True when the two intervals overlap, i.e. neither order is certified.
  bool straddles(const Interval& o) const {
    return !strictly_less(o) && !strictly_greater(o);
  }

  const Decimal& lo() const { return lo_; }
  const Decimal& hi() const { return hi_; }
  mpfr_prec_t bits() const { return mpfr_get_prec(lo_.backend().data()); }
  std::string str(unsigned digits10 = 8) const;

 private:
  Interval(Decimal lo, Decimal hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}
  Decimal lo_, hi_;
};

inline unsigned digits10_to_bits(unsigned digits10) {
  // ceil(digits10 * log2(10)) plus a small guard
  return static_cast<unsigned>(digits10 * 3.3219280948873623 + 8);
}

}  // namespace tropde
