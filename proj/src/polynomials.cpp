#include "slicecert/polynomials.hpp"

#include <map>
#include <mutex>

#include "slicecert/errors.hpp"

namespace slicecert {

void zpoly_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zpoly_degree(const ZPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d] == 0) --d;
  return d;
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (zpoly_degree(a) < 0 || zpoly_degree(b) < 0) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zpoly_trim(r);
  return r;
}

ZPoly zpoly_divmod_monic(const ZPoly& num, const ZPoly& monic_den, ZPoly& rem) {
  int dd = zpoly_degree(monic_den);
  if (dd < 0 || monic_den[dd] != 1) throw InvalidInput("divisor must be monic");
  rem = num;
  zpoly_trim(rem);
  ZPoly quot;
  int dn = zpoly_degree(rem);
  if (dn >= dd) quot.assign(dn - dd + 1, 0);
  while ((dn = zpoly_degree(rem)) >= dd) {
    mpz_class c = rem[dn];
    quot[dn - dd] = c;
    for (int i = 0; i <= dd; ++i) rem[dn - dd + i] -= c * monic_den[i];
  }
  zpoly_trim(rem);
  return quot;
}

bool zpoly_divisible_by_monic(const ZPoly& num, const ZPoly& monic_den) {
  ZPoly rem;
  zpoly_divmod_monic(num, monic_den, rem);
  return rem.empty();
}

namespace {

ZPoly cyclotomic_compute(long long m, std::map<long long, ZPoly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  ZPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (long long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    ZPoly phi_d = cyclotomic_compute(d, cache);
    ZPoly rem;
    p = zpoly_divmod_monic(p, phi_d, rem);
    if (!rem.empty()) throw InternalInconsistency("cyclotomic division not exact");
  }
  cache[m] = p;
  return p;
}

}  // namespace

const ZPoly& cyclotomic(long long m) {
  if (m < 1) throw InvalidInput("cyclotomic index must be positive");
  static std::map<long long, ZPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  cyclotomic_compute(m, cache);
  return cache.at(m);
}

int qpoly_degree(const QPoly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d] == 0) --d;
  return d;
}

QPoly qpoly_from_z(const ZPoly& p) {
  QPoly q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[i] = mpq_class(p[i]);
  return q;
}

QPoly qpoly_derivative(const QPoly& p) {
  QPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(mpq_class(static_cast<long>(i)) * p[i]);
  return d;
}

QPoly qpoly_mod(const QPoly& a, const QPoly& b) {
  int db = qpoly_degree(b);
  if (db < 0) throw InvalidInput("polynomial mod by zero");
  QPoly r = a;
  int dr;
  while ((dr = qpoly_degree(r)) >= db) {
    mpq_class c = r[dr] / b[db];
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= c * b[i];
    r[dr] = 0;
  }
  r.resize(std::max(0, qpoly_degree(r)) + 1);
  if (qpoly_degree(r) < 0) r.clear();
  return r;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  while (qpoly_degree(b) >= 0) {
    QPoly r = qpoly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  int da = qpoly_degree(a);
  if (da >= 0) {
    mpq_class lead = a[da];
    for (auto& c : a) c /= lead;
  }
  return a;
}

QPoly qpoly_divide_exact(const QPoly& num, const QPoly& den) {
  int dd = qpoly_degree(den);
  if (dd < 0) throw InvalidInput("division by zero polynomial");
  QPoly r = num, quot;
  int dn = qpoly_degree(r);
  if (dn >= dd) quot.assign(dn - dd + 1, mpq_class(0));
  while ((dn = qpoly_degree(r)) >= dd) {
    mpq_class c = r[dn] / den[dd];
    quot[dn - dd] = c;
    for (int i = 0; i <= dd; ++i) r[dn - dd + i] -= c * den[i];
  }
  if (qpoly_degree(r) >= 0) throw InternalInconsistency("expected exact polynomial division");
  return quot;
}

mpq_class qpoly_eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

SturmSequence::SturmSequence(const QPoly& squarefree) {
  seq.push_back(squarefree);
  seq.push_back(qpoly_derivative(squarefree));
  while (qpoly_degree(seq.back()) > 0) {
    QPoly r = qpoly_mod(seq[seq.size() - 2], seq.back());
    if (qpoly_degree(r) < 0) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
}

int SturmSequence::variations(const mpq_class& x) const {
  int var = 0, prev = 0;
  for (const auto& p : seq) {
    mpq_class v = qpoly_eval(p, x);
    int s = sgn(v);
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

int SturmSequence::count_roots(const mpq_class& a, const mpq_class& b) const {
  return variations(a) - variations(b);
}

}  // namespace slicecert
