#include "slicecert/knot_model.hpp"

#include <gmpxx.h>

#include "slicecert/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace slicecert {

RootOfUnity RootOfUnity::reduced() const {
  Int g = std::gcd(r, m);
  return RootOfUnity(r / g, m / g);
}

RootOfUnity RootOfUnity::conj_normalized() const {
  RootOfUnity w = reduced();
  if (2 * w.r > w.m) w.r = w.m - w.r;
  return w;
}

std::string RootOfUnity::str() const {
  return std::to_string(r) + "/" + std::to_string(m);
}

namespace {

mpz_class det_ll(const std::vector<std::vector<Int>>& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = mpq_of(m[i][j]);
  mpq_class det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      mpq_class f = a[i][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  det.canonicalize();
  return det.get_num();
}

}  // namespace

SeifertMatrix SeifertMatrix::make(std::vector<std::vector<Int>> entries) {
  const size_t n = entries.size();
  for (const auto& row : entries)
    if (row.size() != n) throw InvalidInput("Seifert matrix must be square");
  if (n % 2 != 0) throw InvalidInput("Seifert matrix must have even size");
  std::vector<std::vector<Int>> skew(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) skew[i][j] = entries[i][j] - entries[j][i];
  mpz_class d = det_ll(skew);
  if (d != 1 && d != -1) throw InvalidInput("V - V^T must be unimodular");
  SeifertMatrix v;
  v.entries = std::move(entries);
  return v;
}

SeifertMatrix SeifertMatrix::torus2(Int q) {
  if (q % 2 == 0) throw InvalidInput("T_{2,q} needs odd q");
  Int aq = q < 0 ? -q : q;
  if (aq == 1) return make({});
  int n = static_cast<int>(aq) - 1;
  std::vector<std::vector<Int>> v(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) {
    v[i][i] = -1;
    if (i + 1 < n) v[i][i + 1] = 1;
  }
  if (q < 0) {
    // mirror: V -> -V^T
    std::vector<std::vector<Int>> w(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i][j] = -v[j][i];
    v = std::move(w);
  }
  return make(std::move(v));
}

Int torus2_signature(Int q, const RootOfUnity& omega) {
  if (q % 2 == 0) throw InvalidInput("torus2_signature: q must be odd");
  if (q == 1 || q == -1)
    throw InvalidInput("torus2_signature: q = +-1 is the unknot; callers return 0");
  if (q < 0) return -torus2_signature(-q, omega);
  RootOfUnity w = omega.conj_normalized();
  mpq_class x = mpq_of(w.r, w.m);
  mpq_class arg = mpq_class(1, 2) - mpq_of(q) * x;  // floor argument; x in (0, 1/2]
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), arg.get_num_mpz_t(), arg.get_den_mpz_t());
  if (arg.get_den() != 1) return 2 * fl.get_si();
  // jump point: average the one-sided limits; the arc beyond x = 1/2 folds back
  Int a = fl.get_si();
  if (2 * w.r == w.m) return 2 * a;
  return 2 * a - 1;
}

int arf_from_seifert(const SeifertMatrix& V) {
  const size_t n = V.entries.size();
  std::vector<std::vector<Int>> sym(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) sym[i][j] = V.entries[i][j] + V.entries[j][i];
  mpz_class d = det_ll(sym);
  mpz_class r8 = d % 8;
  Int rem = r8.get_si();
  rem = ((rem % 8) + 8) % 8;
  if (rem == 1 || rem == 7) return 0;
  if (rem == 3 || rem == 5) return 1;
  throw InternalInconsistency("knot determinant must be odd");
}

KnotRecord KnotRecord::make(std::string name, Int g4, int arf,
                            const std::vector<std::pair<RootOfUnity, Int>>& samples,
                            std::optional<SeifertMatrix> seifert) {
  if (g4 < 0) throw InvalidInput("slice genus must be nonnegative");
  if (arf != 0 && arf != 1) throw InvalidInput("Arf must be 0 or 1");
  KnotRecord rec;
  rec.name = std::move(name);
  rec.g4 = g4;
  rec.arf = arf;
  rec.seifert = std::move(seifert);
  for (const auto& [w, sigma] : samples) {
    if (sigma % 2 != 0)
      throw InvalidInput("knot " + rec.name + ": signature sample " + w.str() + " must be even");
    if (sigma > 2 * g4 || sigma < -2 * g4)
      throw InvalidInput("knot " + rec.name + ": |sigma(" + w.str() + ")| exceeds 2*g4");
    RootOfUnity k = w.conj_normalized();
    auto [it, fresh] = rec.samples.emplace(std::make_pair(k.r, k.m), sigma);
    if (!fresh && it->second != sigma)
      throw InvalidInput("knot " + rec.name + ": conflicting samples at " + k.str());
  }
  if (rec.seifert) {
    for (const auto& [key, sigma] : rec.samples) {
      Int computed = lt_signature_seifert(*rec.seifert, RootOfUnity(key.first, key.second));
      if (computed != sigma)
        throw InvalidInput("knot " + rec.name + ": stored sigma(" + std::to_string(key.first) +
                           "/" + std::to_string(key.second) + ") = " + std::to_string(sigma) +
                           " disagrees with Seifert matrix value " + std::to_string(computed));
    }
    if (arf_from_seifert(*rec.seifert) != rec.arf)
      throw InvalidInput("knot " + rec.name + ": stored Arf disagrees with Seifert matrix");
  }
  return rec;
}

bool KnotRecord::has_signature_at(const RootOfUnity& w) const {
  RootOfUnity k = w.conj_normalized();
  return samples.count({k.r, k.m}) > 0 || seifert.has_value();
}

Int KnotRecord::signature_at(const RootOfUnity& w) const {
  RootOfUnity k = w.conj_normalized();
  auto it = samples.find({k.r, k.m});
  if (it != samples.end()) return it->second;
  if (seifert) return lt_signature_seifert(*seifert, k);
  throw MissingSample(name, w);
}

std::string KnotRecord::digest() const {
  std::ostringstream os;
  os << name << "|g4=" << g4 << "|arf=" << arf;
  for (const auto& [key, sigma] : samples)
    os << "|" << key.first << "/" << key.second << "=" << sigma;
  if (seifert) {
    os << "|V=";
    for (const auto& row : seifert->entries)
      for (Int e : row) os << e << ",";
  }
  // FNV-1a
  unsigned long long h = 1469598103934665603ull;
  for (char c : os.str()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

ExprPtr KnotExpression::atom(KnotRecord record) {
  auto e = std::shared_ptr<KnotExpression>(new KnotExpression());
  e->kind = Kind::atom;
  e->record = std::move(record);
  return e;
}

ExprPtr KnotExpression::sum(std::vector<ExprPtr> parts) {
  auto e = std::shared_ptr<KnotExpression>(new KnotExpression());
  e->kind = Kind::sum;
  e->parts = std::move(parts);
  return e;
}

ExprPtr KnotExpression::mirror(ExprPtr inner) {
  auto e = std::shared_ptr<KnotExpression>(new KnotExpression());
  e->kind = Kind::mirror;
  e->parts = {std::move(inner)};
  return e;
}

ExprPtr KnotExpression::reverse(ExprPtr inner) {
  auto e = std::shared_ptr<KnotExpression>(new KnotExpression());
  e->kind = Kind::reverse;
  e->parts = {std::move(inner)};
  return e;
}

ExprPtr KnotExpression::cable2(ExprPtr companion, Int q) {
  if (q % 2 == 0) throw InvalidInput("cable2: q must be odd");
  auto e = std::shared_ptr<KnotExpression>(new KnotExpression());
  e->kind = Kind::cable2;
  e->parts = {std::move(companion)};
  e->q = q;
  return e;
}

ExprPtr KnotExpression::torus2(Int q) {
  if (q % 2 == 0) throw InvalidInput("torus2: q must be odd");
  auto e = std::shared_ptr<KnotExpression>(new KnotExpression());
  e->kind = Kind::torus2;
  e->q = q;
  return e;
}

std::string KnotExpression::str() const {
  switch (kind) {
    case Kind::atom:
      return record.name;
    case Kind::sum: {
      std::string s;
      for (const auto& p : parts) {
        if (!s.empty()) s += " # ";
        s += p->str();
      }
      return s.empty() ? "unknot" : s;
    }
    case Kind::mirror:
      return "m(" + parts[0]->str() + ")";
    case Kind::reverse:
      return parts[0]->str() + "^r";
    case Kind::cable2:
      return "(" + parts[0]->str() + ")_(2," + std::to_string(q) + ")";
    case Kind::torus2:
      return "T(2," + std::to_string(q) + ")";
  }
  return "?";
}

Int eval_signature(const ExprPtr& e, const RootOfUnity& omega) {
  switch (e->kind) {
    case KnotExpression::Kind::atom:
      return e->record.signature_at(omega);
    case KnotExpression::Kind::sum: {
      Int acc = 0;
      for (const auto& p : e->parts) acc += eval_signature(p, omega);
      return acc;
    }
    case KnotExpression::Kind::mirror:
      return -eval_signature(e->parts[0], omega);
    case KnotExpression::Kind::reverse:
      return eval_signature(e->parts[0], omega);
    case KnotExpression::Kind::torus2:
      return (e->q == 1 || e->q == -1) ? 0 : torus2_signature(e->q, omega);
    case KnotExpression::Kind::cable2: {
      // winding number 2: companion evaluated at the squared root
      Int rr = (2 * omega.r) % omega.m;
      Int companion = rr == 0 ? 0 : eval_signature(e->parts[0], RootOfUnity(rr, omega.m).reduced());
      Int pattern = (e->q == 1 || e->q == -1) ? 0 : torus2_signature(e->q, omega);
      return companion + pattern;
    }
  }
  throw InternalInconsistency("unreachable expression kind");
}

int eval_arf(const ExprPtr& e) {
  switch (e->kind) {
    case KnotExpression::Kind::atom:
      return e->record.arf;
    case KnotExpression::Kind::sum: {
      int acc = 0;
      for (const auto& p : e->parts) acc ^= eval_arf(p);
      return acc;
    }
    case KnotExpression::Kind::mirror:
    case KnotExpression::Kind::reverse:
      return eval_arf(e->parts[0]);
    case KnotExpression::Kind::torus2:
      return (e->q == 1 || e->q == -1) ? 0 : arf_from_seifert(SeifertMatrix::torus2(e->q));
    case KnotExpression::Kind::cable2:
      throw InvalidInput("eval_arf: cable expressions are not supported");
  }
  throw InternalInconsistency("unreachable expression kind");
}

}  // namespace slicecert
