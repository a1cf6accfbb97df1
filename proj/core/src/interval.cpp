#include "tropde/interval.hpp"

#include <sstream>

namespace tropde {

namespace {

Decimal with_prec(mpfr_prec_t bits) {
  Decimal d;
  mpfr_set_prec(d.backend().data(), bits);
  return d;
}

mpfr_srcptr raw(const Decimal& d) { return d.backend().data(); }
mpfr_ptr raw(Decimal& d) { return d.backend().data(); }

}  // namespace

Interval Interval::exact_zero(mpfr_prec_t bits) {
  Decimal lo = with_prec(bits), hi = with_prec(bits);
  mpfr_set_zero(raw(lo), 1);
  mpfr_set_zero(raw(hi), 1);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_rational(const Rational& x, mpfr_prec_t bits) {
  Decimal lo = with_prec(bits), hi = with_prec(bits);
  mpfr_set_q(raw(lo), x.backend().data(), MPFR_RNDD);
  mpfr_set_q(raw(hi), x.backend().data(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::log_of_rational(const Rational& x, mpfr_prec_t bits) {
  if (x <= 0) throw CertifyError("log of a nonpositive rational");
  return from_rational(x, bits).log();
}

Interval Interval::operator+(const Interval& o) const {
  mpfr_prec_t p = std::max(bits(), o.bits());
  Decimal lo = with_prec(p), hi = with_prec(p);
  mpfr_add(raw(lo), raw(lo_), raw(o.lo_), MPFR_RNDD);
  mpfr_add(raw(hi), raw(hi_), raw(o.hi_), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::operator-(const Interval& o) const {
  mpfr_prec_t p = std::max(bits(), o.bits());
  Decimal lo = with_prec(p), hi = with_prec(p);
  mpfr_sub(raw(lo), raw(lo_), raw(o.hi_), MPFR_RNDD);
  mpfr_sub(raw(hi), raw(hi_), raw(o.lo_), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::operator*(const Interval& o) const {
  mpfr_prec_t p = std::max(bits(), o.bits());
  // all four endpoint products, each rounded both ways
  const Decimal* a[2] = {&lo_, &hi_};
  const Decimal* b[2] = {&o.lo_, &o.hi_};
  Decimal lo = with_prec(p), hi = with_prec(p), t = with_prec(p);
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(raw(t), raw(*a[i]), raw(*b[j]), MPFR_RNDD);
      if (first || mpfr_cmp(raw(t), raw(lo)) < 0) mpfr_set(raw(lo), raw(t), MPFR_RNDD);
      mpfr_mul(raw(t), raw(*a[i]), raw(*b[j]), MPFR_RNDU);
      if (first || mpfr_cmp(raw(t), raw(hi)) > 0) mpfr_set(raw(hi), raw(t), MPFR_RNDU);
      first = false;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::scaled(const Rational& c) const {
  mpfr_prec_t p = bits();
  Decimal lo = with_prec(p), hi = with_prec(p);
  if (c >= 0) {
    mpfr_mul_q(raw(lo), raw(lo_), c.backend().data(), MPFR_RNDD);
    mpfr_mul_q(raw(hi), raw(hi_), c.backend().data(), MPFR_RNDU);
  } else {
    mpfr_mul_q(raw(lo), raw(hi_), c.backend().data(), MPFR_RNDD);
    mpfr_mul_q(raw(hi), raw(lo_), c.backend().data(), MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::log() const {
  if (mpfr_sgn(raw(lo_)) <= 0) throw CertifyError("log of an interval touching zero");
  mpfr_prec_t p = bits();
  Decimal lo = with_prec(p), hi = with_prec(p);
  mpfr_log(raw(lo), raw(lo_), MPFR_RNDD);
  mpfr_log(raw(hi), raw(hi_), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::exp() const {
  mpfr_prec_t p = bits();
  Decimal lo = with_prec(p), hi = with_prec(p);
  mpfr_exp(raw(lo), raw(lo_), MPFR_RNDD);
  mpfr_exp(raw(hi), raw(hi_), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

std::string Interval::str(unsigned digits10) const {
  std::ostringstream os;
  os.precision(digits10);
  os << "[" << lo_ << ", " << hi_ << "]";
  return os.str();
}

}  // namespace tropde
