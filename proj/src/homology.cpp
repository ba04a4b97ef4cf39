#include "slicecert/homology.hpp"

#include <gmpxx.h>

#include "slicecert/exact.hpp"

#include <algorithm>
#include <numeric>

namespace slicecert {

namespace {

// Exact determinant by fraction-free elimination.
mpz_class det_exact(const std::vector<std::vector<Int>>& m) {
  const size_t n = m.size();
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
  if (det.get_den() != 1) throw InternalInconsistency("non-integer determinant of integer matrix");
  return det.get_num();
}

}  // namespace

IntersectionForm IntersectionForm::make(std::vector<std::vector<Int>> m) {
  IntersectionForm f;
  f.rank = static_cast<int>(m.size());
  if (f.rank == 0) throw InvalidInput("intersection form must have positive rank");
  for (const auto& row : m)
    if (row.size() != m.size()) throw InvalidInput("intersection form matrix must be square");
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) throw InvalidInput("intersection form matrix must be symmetric");
  mpz_class d = det_exact(m);
  if (d != 1 && d != -1) throw InvalidInput("intersection form must be unimodular");
  bool even = true;
  for (size_t i = 0; i < m.size(); ++i) even = even && (m[i][i] % 2 == 0);
  f.parity = even ? Parity::even : Parity::odd;
  f.matrix = std::move(m);
  return f;
}

const IntersectionForm& IntersectionForm::diag_1_m1() {
  static const IntersectionForm f = make({{1, 0}, {0, -1}});
  return f;
}

const IntersectionForm& IntersectionForm::hyperbolic() {
  static const IntersectionForm f = make({{0, 1}, {1, 0}});
  return f;
}

const IntersectionForm& IntersectionForm::diag_1() {
  static const IntersectionForm f = make({{1}});
  return f;
}

const IntersectionForm& IntersectionForm::diag_m1() {
  static const IntersectionForm f = make({{-1}});
  return f;
}

const IntersectionForm& IntersectionForm::minus_e8_x2() {
  // -E8 Cartan matrix, Dynkin node 8 attached to node 5.
  static const IntersectionForm f = [] {
    std::vector<std::vector<Int>> e8(8, std::vector<Int>(8, 0));
    for (int i = 0; i < 8; ++i) e8[i][i] = -2;
    for (int i = 0; i + 1 < 7; ++i) e8[i][i + 1] = e8[i + 1][i] = 1;
    e8[4][7] = e8[7][4] = 1;
    std::vector<std::vector<Int>> m(16, std::vector<Int>(16, 0));
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        m[i][j] = e8[i][j];
        m[8 + i][8 + j] = e8[i][j];
      }
    return make(m);
  }();
  return f;
}

AmbientProfile AmbientProfile::make(std::string name, Int sigma, Int b2, int ks,
                                    IntersectionForm form) {
  if ((b2 - sigma) % 2 != 0 || b2 - sigma < 0)
    throw InvalidInput("ambient profile: b2_minus = (b2 - sigma)/2 must be a nonnegative integer");
  AmbientProfile p;
  p.name = std::move(name);
  p.sigma = sigma;
  p.b2 = b2;
  p.b2_minus = (b2 - sigma) / 2;
  p.parity = form.parity;
  p.ks = ks;
  p.form = std::move(form);
  if (p.form.rank != b2) throw InvalidInput("ambient profile: form rank must equal b2");
  return p;
}

const AmbientProfile& AmbientProfile::cp2bcp2() {
  static const AmbientProfile p = make("CP2#bCP2", 0, 2, 0, IntersectionForm::diag_1_m1());
  return p;
}

const AmbientProfile& AmbientProfile::s2xs2() {
  static const AmbientProfile p = make("S2xS2", 0, 2, 0, IntersectionForm::hyperbolic());
  return p;
}

const AmbientProfile& AmbientProfile::cp2() {
  static const AmbientProfile p = make("CP2", 1, 1, 0, IntersectionForm::diag_1());
  return p;
}

const AmbientProfile& AmbientProfile::bcp2() {
  static const AmbientProfile p = make("bCP2", -1, 1, 0, IntersectionForm::diag_m1());
  return p;
}

bool HomologyClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](Int c) { return c == 0; });
}

Int pairing(const IntersectionForm& form, const HomologyClass& x, const HomologyClass& y) {
  if (static_cast<int>(x.coords.size()) != form.rank ||
      static_cast<int>(y.coords.size()) != form.rank)
    throw DimensionMismatch("pairing: vector length does not match form rank");
  Int acc = 0;
  for (int i = 0; i < form.rank; ++i)
    for (int j = 0; j < form.rank; ++j) acc += x.coords[i] * form.matrix[i][j] * y.coords[j];
  return acc;
}

bool is_characteristic(const IntersectionForm& form, const HomologyClass& x) {
  if (static_cast<int>(x.coords.size()) != form.rank)
    throw DimensionMismatch("is_characteristic: vector length does not match form rank");
  for (int i = 0; i < form.rank; ++i) {
    Int xe = 0;
    for (int j = 0; j < form.rank; ++j) xe += x.coords[j] * form.matrix[j][i];
    Int ee = form.matrix[i][i];
    if (((xe - ee) % 2 + 2) % 2 != 0) return false;
  }
  return true;
}

Int divisibility(const HomologyClass& x) {
  Int g = 0;
  for (Int c : x.coords) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

PairOrbit symmetry_reduce(const ClassPair& pair) {
  if (pair.first.coords.size() != 2 || pair.second.coords.size() != 2)
    throw DimensionMismatch("symmetry_reduce: expects rank-2 classes");
  auto key = [](const ClassPair& p) {
    return std::array<Int, 4>{p.first.coords[0], p.first.coords[1], p.second.coords[0],
                              p.second.coords[1]};
  };
  std::vector<ClassPair> orbit;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1})
      for (int swap : {0, 1}) {
        HomologyClass a(e1 * pair.first.coords[0], e2 * pair.first.coords[1]);
        HomologyClass b(e1 * pair.second.coords[0], e2 * pair.second.coords[1]);
        orbit.emplace_back(swap ? ClassPair{b, a} : ClassPair{a, b});
      }
  std::sort(orbit.begin(), orbit.end(),
            [&](const ClassPair& p, const ClassPair& q) { return key(p) < key(q); });
  orbit.erase(std::unique(orbit.begin(), orbit.end(),
                          [&](const ClassPair& p, const ClassPair& q) { return key(p) == key(q); }),
              orbit.end());
  return PairOrbit{orbit.front(), orbit};
}

}  // namespace slicecert
