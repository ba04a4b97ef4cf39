#include "slicecert/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "slicecert/errors.hpp"

namespace slicecert {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(Interval o) {
  swap(*this, o);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

void swap(Interval& a, Interval& b) noexcept {
  std::swap(a.prec_, b.prec_);
  mpfr_swap(a.lo_, b.lo_);
  mpfr_swap(a.hi_, b.hi_);
}

Interval Interval::from_int(long long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_sj(r.lo_, v, MPFR_RNDD);
  mpfr_set_sj(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
  return r;
}

namespace {

// theta = 2*pi*x as an enclosure, 0 < x < 1.
void theta_bounds(const mpq_class& x, mpfr_prec_t prec, mpfr_t out_lo, mpfr_t out_hi) {
  mpfr_t pi_lo, pi_hi, x_lo, x_hi;
  mpfr_init2(pi_lo, prec);
  mpfr_init2(pi_hi, prec);
  mpfr_init2(x_lo, prec);
  mpfr_init2(x_hi, prec);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  mpfr_set_q(x_lo, x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(x_hi, x.get_mpq_t(), MPFR_RNDU);
  mpfr_mul(out_lo, pi_lo, x_lo, MPFR_RNDD);
  mpfr_mul(out_hi, pi_hi, x_hi, MPFR_RNDU);
  mpfr_mul_si(out_lo, out_lo, 2, MPFR_RNDD);
  mpfr_mul_si(out_hi, out_hi, 2, MPFR_RNDU);
  mpfr_clear(pi_lo);
  mpfr_clear(pi_hi);
  mpfr_clear(x_lo);
  mpfr_clear(x_hi);
}

}  // namespace

Interval Interval::cos2pi(const mpq_class& x, mpfr_prec_t prec) {
  if (x <= 0 || x >= 1) throw InvalidInput("cos2pi: need 0 < x < 1");
  if (x == mpq_class(1, 2)) return from_int(-1, prec);
  Interval out(prec);
  mpfr_t tlo, thi, a, b;
  mpfr_init2(tlo, prec);
  mpfr_init2(thi, prec);
  mpfr_init2(a, prec);
  mpfr_init2(b, prec);
  theta_bounds(x, prec, tlo, thi);
  // cos is monotone on (0,pi) and on (pi,2pi), so the hull of endpoint values
  // encloses the true value as long as [tlo,thi] does not cross pi.  If the
  // enclosure cannot be placed on one side of pi, widen the lower end to -1.
  mpfr_cos(a, tlo, MPFR_RNDD);
  mpfr_cos(b, thi, MPFR_RNDD);
  mpfr_min(out.lo_, a, b, MPFR_RNDD);
  mpfr_cos(a, tlo, MPFR_RNDU);
  mpfr_cos(b, thi, MPFR_RNDU);
  mpfr_max(out.hi_, a, b, MPFR_RNDU);
  {
    mpfr_t pi_lo, pi_hi;
    mpfr_init2(pi_lo, prec);
    mpfr_init2(pi_hi, prec);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    bool below = mpfr_less_p(thi, pi_lo);
    bool above = mpfr_greater_p(tlo, pi_hi);
    if (!below && !above) mpfr_set_si(out.lo_, -1, MPFR_RNDD);
    mpfr_clear(pi_lo);
    mpfr_clear(pi_hi);
  }
  mpfr_clear(tlo);
  mpfr_clear(thi);
  mpfr_clear(a);
  mpfr_clear(b);
  return out;
}

Interval Interval::sin2pi(const mpq_class& x, mpfr_prec_t prec) {
  if (x <= 0 || x >= 1) throw InvalidInput("sin2pi: need 0 < x < 1");
  if (x == mpq_class(1, 2)) return from_int(0, prec);
  if (x == mpq_class(1, 4)) return from_int(1, prec);
  if (x == mpq_class(3, 4)) return from_int(-1, prec);
  Interval out(prec);
  mpfr_t tlo, thi, a, b;
  mpfr_init2(tlo, prec);
  mpfr_init2(thi, prec);
  mpfr_init2(a, prec);
  mpfr_init2(b, prec);
  theta_bounds(x, prec, tlo, thi);
  mpfr_sin(a, tlo, MPFR_RNDD);
  mpfr_sin(b, thi, MPFR_RNDD);
  mpfr_min(out.lo_, a, b, MPFR_RNDD);
  mpfr_sin(a, tlo, MPFR_RNDU);
  mpfr_sin(b, thi, MPFR_RNDU);
  mpfr_max(out.hi_, a, b, MPFR_RNDU);
  {
    // sin is monotone except at pi/2 and 3pi/2; widen if those may be crossed.
    mpfr_t h_lo, h_hi;
    mpfr_init2(h_lo, prec);
    mpfr_init2(h_hi, prec);
    mpfr_const_pi(h_lo, MPFR_RNDD);
    mpfr_const_pi(h_hi, MPFR_RNDU);
    mpfr_div_si(h_lo, h_lo, 2, MPFR_RNDD);
    mpfr_div_si(h_hi, h_hi, 2, MPFR_RNDU);
    if (!(mpfr_less_p(thi, h_lo) || mpfr_greater_p(tlo, h_hi)))
      mpfr_set_si(out.hi_, 1, MPFR_RNDU);
    mpfr_mul_si(h_lo, h_lo, 3, MPFR_RNDD);
    mpfr_mul_si(h_hi, h_hi, 3, MPFR_RNDU);
    if (!(mpfr_less_p(thi, h_lo) || mpfr_greater_p(tlo, h_hi)))
      mpfr_set_si(out.lo_, -1, MPFR_RNDD);
    mpfr_clear(h_lo);
    mpfr_clear(h_hi);
  }
  mpfr_clear(tlo);
  mpfr_clear(thi);
  mpfr_clear(a);
  mpfr_clear(b);
  return out;
}

Interval Interval::cos2pi(long long r, long long m, mpfr_prec_t prec) {
  if (m <= 0 || r <= 0 || r >= m) throw InvalidInput("cos2pi: need 0 < r < m");
  mpq_class x(static_cast<long>(r), static_cast<long>(m));
  x.canonicalize();
  return cos2pi(x, prec);
}

Interval Interval::sin2pi(long long r, long long m, mpfr_prec_t prec) {
  if (m <= 0 || r <= 0 || r >= m) throw InvalidInput("sin2pi: need 0 < r < m");
  mpq_class x(static_cast<long>(r), static_cast<long>(m));
  x.canonicalize();
  return sin2pi(x, prec);
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(prec_);
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(prec_);
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  Interval r(prec_);
  mpfr_t t;
  mpfr_init2(t, prec_);
  const mpfr_srcptr xs[2] = {lo_, hi_};
  const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  bool first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (o.sign() == 0) throw InternalInconsistency("interval division by a sign-uncertified interval");
  Interval r(prec_);
  mpfr_t t;
  mpfr_init2(t, prec_);
  const mpfr_srcptr xs[2] = {lo_, hi_};
  const mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  bool first = true;
  for (auto x : xs)
    for (auto y : ys) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return r;
}

int Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

bool Interval::certainly_greater(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0;
}

bool Interval::certainly_less(const mpq_class& q) const {
  return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0;
}

double Interval::midpoint_abs() const {
  double a = mpfr_get_d(lo_, MPFR_RNDN);
  double b = mpfr_get_d(hi_, MPFR_RNDN);
  return std::abs((a + b) / 2);
}

}  // namespace slicecert
