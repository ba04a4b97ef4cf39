#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <utility>

namespace slicecert {

// Closed interval with MPFR endpoints and outward rounding.  Arithmetic on
// these encloses the exact real result, so any sign decided by an interval is
// the true sign.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(Interval o);
  ~Interval();

  static Interval from_int(long long v, mpfr_prec_t prec);
  static Interval from_mpq(const mpq_class& v, mpfr_prec_t prec);
  // cos(2*pi*x), sin(2*pi*x) for rational x in (0,1); exact at the axis
  // points x in {1/4, 1/2, 3/4}.
  static Interval cos2pi(const mpq_class& x, mpfr_prec_t prec);
  static Interval sin2pi(const mpq_class& x, mpfr_prec_t prec);
  static Interval cos2pi(long long r, long long m, mpfr_prec_t prec);
  static Interval sin2pi(long long r, long long m, mpfr_prec_t prec);

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // requires certified sign != 0
  Interval operator-() const;

  // +1 / -1 when certified, 0 when the interval straddles zero.
  int sign() const;
  bool certainly_greater(const mpq_class& q) const;  // lo > q
  bool certainly_less(const mpq_class& q) const;     // hi < q
  double midpoint_abs() const;

  mpfr_prec_t prec() const { return prec_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_, hi_;
  friend void swap(Interval& a, Interval& b) noexcept;
};

}  // namespace slicecert
