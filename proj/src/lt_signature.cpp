// Exact Levine-Tristram signature evaluation.
//
// The Hermitian matrix M(w) = (1-w)V + (1-conj w)V^T degenerates exactly at
// circle roots of D(t) = det(V - tV^T).  Whether the evaluation point is such
// a root is decided exactly: w is a primitive m'-th root of unity, so
// D(w) = 0 iff the m'-th cyclotomic polynomial divides D.  Away from roots
// the signature is computed from certified pivot signs of an interval-valued
// symmetric elimination (Haynsworth inertia additivity), retried at doubled
// precision until every pivot sign is certified.  At a root the value is the
// average of the two one-sided limits; the evaluation points for the limits
// are placed inside gaps certified root-free by Sturm isolation of the trace
// polynomial of D.

#include <algorithm>
#include <numeric>
#include <vector>

#include "slicecert/exact.hpp"
#include "slicecert/intervals.hpp"
#include "slicecert/knot_model.hpp"
#include "slicecert/polynomials.hpp"

namespace slicecert {

namespace {

struct NeedMorePrecision {};

mpz_class det_int(std::vector<std::vector<mpz_class>> a) {
  const size_t n = a.size();
  std::vector<std::vector<mpq_class>> q(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q[i][j] = a[i][j];
  mpq_class det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && q[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(q[piv], q[col]);
      det = -det;
    }
    det *= q[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      mpq_class f = q[i][col] / q[col][col];
      for (size_t j = col; j < n; ++j) q[i][j] -= f * q[col][j];
    }
  }
  det.canonicalize();
  return det.get_num();
}

// D(t) = det(V - t V^T), by interpolation at t = 0..n.
ZPoly seifert_char_poly(const SeifertMatrix& V) {
  const int n = V.size();
  std::vector<mpz_class> values;
  for (int t = 0; t <= n; ++t) {
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = mpz_of(V.entries[i][j]) - t * mpz_of(V.entries[j][i]);
    values.push_back(det_int(std::move(a)));
  }
  // Lagrange interpolation on nodes 0..n.
  std::vector<mpq_class> coeff(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    std::vector<mpq_class> basis{1};  // product of (t - j)/(k - j), j != k
    mpq_class denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == k) continue;
      basis.push_back(0);
      for (int d = static_cast<int>(basis.size()) - 1; d >= 1; --d)
        basis[d] = basis[d - 1] - j * basis[d];
      basis[0] *= -j;
      denom *= (k - j);
    }
    for (size_t d = 0; d < basis.size(); ++d) coeff[d] += basis[d] * values[k] / denom;
  }
  ZPoly out(n + 1);
  for (int d = 0; d <= n; ++d) {
    coeff[d].canonicalize();
    if (coeff[d].get_den() != 1)
      throw InternalInconsistency("Seifert characteristic polynomial not integral");
    out[d] = coeff[d].get_num();
  }
  zpoly_trim(out);
  return out;
}

// ---- certified signature at a fixed non-degenerate point x = r/m ----------

// Symmetric interval elimination; sig = (#positive) - (#negative) pivots,
// 2x2 indefinite blocks contributing zero.
Int pivot_signature(std::vector<std::vector<Interval>>& w, std::vector<int> act) {
  Int sig = 0;
  while (!act.empty()) {
    int best = -1;
    double best_mag = -1;
    for (int i : act) {
      if (w[i][i].sign() == 0) continue;
      double mag = w[i][i].midpoint_abs();
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    if (best >= 0) {
      sig += w[best][best].sign();
      std::vector<int> rest;
      for (int i : act)
        if (i != best) rest.push_back(i);
      for (size_t a = 0; a < rest.size(); ++a)
        for (size_t b = a; b < rest.size(); ++b) {
          int j = rest[a], k = rest[b];
          Interval upd = w[j][k] - w[best][j] * w[best][k] / w[best][best];
          w[j][k] = upd;
          w[k][j] = upd;
        }
      act = std::move(rest);
      continue;
    }
    // all remaining diagonals straddle zero; look for an indefinite 2x2 block
    int pi = -1, pj = -1;
    double mag2 = -1;
    for (size_t a = 0; a < act.size(); ++a)
      for (size_t b = a + 1; b < act.size(); ++b) {
        int i = act[a], j = act[b];
        Interval det2 = w[i][i] * w[j][j] - w[i][j] * w[i][j];
        if (det2.sign() < 0 && w[i][j].midpoint_abs() > mag2) {
          mag2 = w[i][j].midpoint_abs();
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) throw NeedMorePrecision{};
    Interval a2 = w[pi][pi], b2 = w[pi][pj], c2 = w[pj][pj];
    Interval det2 = a2 * c2 - b2 * b2;
    std::vector<int> rest;
    for (int i : act)
      if (i != pi && i != pj) rest.push_back(i);
    for (size_t x = 0; x < rest.size(); ++x)
      for (size_t y = x; y < rest.size(); ++y) {
        int k = rest[x], l = rest[y];
        Interval num = w[pi][k] * (c2 * w[pi][l] - b2 * w[pj][l]) +
                       w[pj][k] * (a2 * w[pj][l] - b2 * w[pi][l]);
        Interval upd = w[k][l] - num / det2;
        w[k][l] = upd;
        w[l][k] = upd;
      }
    act = std::move(rest);
  }
  return sig;
}

// Realification of (1-w)V + (1-conj w)V^T: R = [[S, -A], [A, S]] with
// S = (1-c)(V + V^T), A = s(V^T - V); eigenvalues double, so sig(M) = sig(R)/2.
Int signature_at_point(const SeifertMatrix& V, const mpq_class& x) {
  const int n = V.size();
  if (n == 0) return 0;
  for (mpfr_prec_t prec = 96; prec <= (1 << 16); prec *= 2) {
    Interval c = Interval::cos2pi(x, prec);
    Interval s = Interval::sin2pi(x, prec);
    Interval one = Interval::from_int(1, prec);
    Interval omc = one - c;
    std::vector<std::vector<Interval>> w(2 * n, std::vector<Interval>(2 * n, Interval(prec)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Interval sij = omc * Interval::from_int(V.entries[i][j] + V.entries[j][i], prec);
        Interval aij = s * Interval::from_int(V.entries[j][i] - V.entries[i][j], prec);
        w[i][j] = sij;
        w[n + i][n + j] = sij;
        w[i][n + j] = -aij;
        w[n + i][j] = aij;
      }
    std::vector<int> act(2 * n);
    std::iota(act.begin(), act.end(), 0);
    try {
      Int sig2 = pivot_signature(w, std::move(act));
      if (sig2 % 2 != 0) throw InternalInconsistency("realified signature must be even");
      return sig2 / 2;
    } catch (NeedMorePrecision&) {
      continue;
    }
  }
  throw Error("lt_signature: precision cap exceeded");
}

// ---- root isolation of the trace polynomial --------------------------------

// D(t) = t^k * Q(t) with Q palindromic of even degree 2h; returns P with
// Q(t)/t^h = P(t + 1/t).  Circle zeros of D correspond to zeros of P on (-2,2).
QPoly trace_poly(const ZPoly& alex) {
  ZPoly q = alex;
  size_t k = 0;
  while (k < q.size() && q[k] == 0) ++k;
  q.erase(q.begin(), q.begin() + k);
  zpoly_trim(q);
  int deg = zpoly_degree(q);
  if (deg < 0) throw InternalInconsistency("zero Seifert characteristic polynomial");
  if (deg % 2 != 0) throw InternalInconsistency("depalindromized polynomial of odd degree");
  for (int i = 0; i <= deg; ++i)
    if (q[i] != q[deg - i]) throw InternalInconsistency("Seifert characteristic polynomial not palindromic");
  int h = deg / 2;
  // C_0 = 2, C_1 = u, C_{j+1} = u C_j - C_{j-1}  (t^j + t^-j in u = t + 1/t)
  QPoly p(static_cast<size_t>(h) + 1, mpq_class(0));
  p[0] = mpq_class(q[h]);
  QPoly c_prev{mpq_class(2)}, c_cur{mpq_class(0), mpq_class(1)};
  for (int j = 1; j <= h; ++j) {
    for (size_t d = 0; d < c_cur.size(); ++d) p[d] += mpq_class(q[h + j]) * c_cur[d];
    QPoly c_next(c_cur.size() + 1, mpq_class(0));
    for (size_t d = 0; d < c_cur.size(); ++d) c_next[d + 1] += c_cur[d];
    for (size_t d = 0; d < c_prev.size(); ++d) c_next[d] -= c_prev[d];
    c_prev = std::move(c_cur);
    c_cur = std::move(c_next);
  }
  return p;
}

struct Iso {
  mpq_class lo, hi;  // exactly one root in (lo, hi]
};

mpq_class pick_split(const QPoly& p, const mpq_class& lo, const mpq_class& hi) {
  // more candidates than the polynomial can have roots (matrices are capped
  // well below the candidate count)
  for (int den : {16, 17, 19, 23, 29, 31}) {
    for (int num = 1; num < den; ++num) {
      mpq_class c = lo + mpq_class(num, den) * (hi - lo);
      c.canonicalize();
      if (qpoly_eval(p, c) != 0) return c;
    }
  }
  throw InternalInconsistency("could not find a non-root split point");
}

void isolate_rec(const QPoly& p, const SturmSequence& st, const mpq_class& lo, const mpq_class& hi,
                 std::vector<Iso>& out) {
  int k = st.count_roots(lo, hi);
  if (k == 0) return;
  if (k == 1) {
    out.push_back({lo, hi});
    return;
  }
  mpq_class mid = pick_split(p, lo, hi);
  isolate_rec(p, st, lo, mid, out);
  isolate_rec(p, st, mid, hi, out);
}

void refine(const QPoly& p, const SturmSequence& st, Iso& iso) {
  mpq_class mid = pick_split(p, iso.lo, iso.hi);
  if (st.count_roots(iso.lo, mid) == 1)
    iso.hi = mid;
  else
    iso.lo = mid;
}

// Rational neighbours x0 -+ delta of the jump point x0 = r/m such that the
// open intervals between them and x0 contain no circle root of D.
std::pair<mpq_class, mpq_class> certified_neighbors(const ZPoly& alex, Int r, Int m) {
  QPoly p = qpoly_from_z([&] {
    ZPoly z;
    for (const auto& c : trace_poly(alex)) {
      if (c.get_den() != 1) throw InternalInconsistency("trace polynomial not integral");
      z.push_back(c.get_num());
    }
    return z;
  }());
  QPoly psf = qpoly_divide_exact(p, qpoly_gcd(p, qpoly_derivative(p)));
  SturmSequence st(psf);
  std::vector<Iso> isos;
  isolate_rec(psf, st, mpq_class(-2), mpq_class(2), isos);

  // classify isolating intervals against u0 = 2 cos(2 pi r / m)
  mpq_class g_minus(-2), g_plus(2);
  bool classified = false;
  mpfr_prec_t prec = 96;
  for (int round = 0; round < 48 && !classified; ++round) {
    if (prec < (1 << 16)) prec *= 2;
    for (auto& iso : isos)
      for (int step = 0; step < 4; ++step) refine(psf, st, iso);
    Interval e = Interval::from_int(2, prec) * Interval::cos2pi(r, m, prec);
    int hits = 0;
    mpq_class gm(-2), gp(2);
    for (const auto& iso : isos) {
      if (e.certainly_greater(iso.hi)) {
        if (iso.hi > gm) gm = iso.hi;
      } else if (e.certainly_less(iso.lo)) {
        if (iso.lo < gp) gp = iso.lo;
      } else {
        ++hits;
      }
    }
    if (hits == 1) {
      g_minus = gm;
      g_plus = gp;
      classified = true;
    }
  }
  if (!classified) throw Error("lt_signature: could not separate the jump point");

  mpq_class x0 = mpq_of(r, m);
  mpq_class half(1, 2);
  for (int k = 0; k < 64; ++k) {
    mpq_class delta = mpq_of(1, 8 * m);
    for (int d = 0; d < k; ++d) delta /= 2;
    mpq_class xl = x0 - delta, xr = x0 + delta;
    if (xl <= 0 || xr >= half) continue;
    mpfr_prec_t prec = 96;
    for (int d = 0; d < k && prec < (1 << 16); ++d) prec *= 2;
    Interval ul = Interval::from_int(2, prec) * Interval::cos2pi(xl, prec);
    Interval ur = Interval::from_int(2, prec) * Interval::cos2pi(xr, prec);
    // u decreasing in x: need u(xr) above the gap floor and u(xl) below the cap
    if (ur.certainly_greater(g_minus) && ul.certainly_less(g_plus)) return {xl, xr};
  }
  throw Error("lt_signature: could not certify a jump-free neighbourhood");
}

}  // namespace

Int lt_signature_seifert(const SeifertMatrix& V, const RootOfUnity& omega) {
  if (V.size() == 0) return 0;
  RootOfUnity w = omega.conj_normalized();
  ZPoly alex = seifert_char_poly(V);
  bool degenerate = zpoly_divisible_by_monic(alex, cyclotomic(w.m));
  mpq_class x = mpq_of(w.r, w.m);
  if (!degenerate) return signature_at_point(V, x);
  // det(V + V^T) is odd for a valid Seifert matrix, so w = -1 never degenerates
  if (w.m == 2) throw InternalInconsistency("degenerate form at -1");
  auto [xl, xr] = certified_neighbors(alex, w.r, w.m);
  Int sl = signature_at_point(V, xl);
  Int sr = signature_at_point(V, xr);
  if ((sl + sr) % 2 != 0) throw InternalInconsistency("one-sided limits of different parity");
  return (sl + sr) / 2;
}

}  // namespace slicecert
