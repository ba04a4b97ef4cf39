#pragma once

#include <gmpxx.h>

#include <vector>

namespace slicecert {

// Dense univariate polynomials, lowest degree first.  Used for exact zero
// tests against cyclotomic polynomials and for Sturm root counting.
using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

void zpoly_trim(ZPoly& p);
int zpoly_degree(const ZPoly& p);  // -1 for the zero polynomial
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
// Division by a monic divisor; exact over Z.  Returns quotient, fills remainder.
ZPoly zpoly_divmod_monic(const ZPoly& num, const ZPoly& monic_den, ZPoly& rem);
bool zpoly_divisible_by_monic(const ZPoly& num, const ZPoly& monic_den);

// m-th cyclotomic polynomial (cached).
const ZPoly& cyclotomic(long long m);

int qpoly_degree(const QPoly& p);
QPoly qpoly_from_z(const ZPoly& p);
QPoly qpoly_derivative(const QPoly& p);
QPoly qpoly_mod(const QPoly& a, const QPoly& b);
QPoly qpoly_gcd(QPoly a, QPoly b);  // monic gcd
QPoly qpoly_divide_exact(const QPoly& num, const QPoly& den);
mpq_class qpoly_eval(const QPoly& p, const mpq_class& x);

// Sturm sequence root counting for squarefree real-rooted input.
struct SturmSequence {
  std::vector<QPoly> seq;
  explicit SturmSequence(const QPoly& squarefree);
  int variations(const mpq_class& x) const;
  // Number of distinct roots in (a, b].
  int count_roots(const mpq_class& a, const mpq_class& b) const;
};

}  // namespace slicecert
