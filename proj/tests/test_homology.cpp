#include <doctest.h>

#include <cstdlib>
#include <random>

#include "slicecert/homology.hpp"

using namespace slicecert;

namespace {

// quantified characteristic test: x.y = y.y mod 2 for all small y
bool characteristic_oracle(const IntersectionForm& f, const HomologyClass& x, Int box) {
  std::vector<Int> y(f.rank, -box);
  while (true) {
    HomologyClass cy(y);
    if (((pairing(f, x, cy) - pairing(f, cy, cy)) % 2 + 2) % 2 != 0) return false;
    int i = 0;
    while (i < f.rank && y[i] == box) y[i++] = -box;
    if (i == f.rank) return true;
    ++y[i];
  }
}

}  // namespace

TEST_CASE("pairing on the stock forms") {
  const auto& d = IntersectionForm::diag_1_m1();
  // (a,a+1).(b,b+1) = -(a+b+1) at a=2, b=3
  CHECK(pairing(d, HomologyClass(2, 3), HomologyClass(3, 4)) == -6);
  CHECK(pairing(d, HomologyClass(1, 0), HomologyClass(1, 0)) == 1);
  // hyperbolic oracle: x^T [[0,1],[1,0]] y = x1 y2 + x2 y1
  const auto& h = IntersectionForm::hyperbolic();
  CHECK(pairing(h, HomologyClass(2, 0), HomologyClass(0, 1)) == 2 * 1 + 0 * 0);
  CHECK_THROWS_AS(pairing(d, HomologyClass({1, 2, 3}), HomologyClass(1, 2)), DimensionMismatch);
}

TEST_CASE("pairing is symmetric and bilinear") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> coord(-100, 100);
  for (const IntersectionForm* f :
       {&IntersectionForm::diag_1_m1(), &IntersectionForm::hyperbolic()}) {
    for (int it = 0; it < 200; ++it) {
      HomologyClass x(coord(rng), coord(rng)), y(coord(rng), coord(rng)),
          z(coord(rng), coord(rng));
      CHECK(pairing(*f, x, y) == pairing(*f, y, x));
      HomologyClass xz(x.coords[0] + z.coords[0], x.coords[1] + z.coords[1]);
      CHECK(pairing(*f, xz, y) == pairing(*f, x, y) + pairing(*f, z, y));
    }
  }
}

TEST_CASE("characteristic classes") {
  const auto& d = IntersectionForm::diag_1_m1();
  const auto& h = IntersectionForm::hyperbolic();
  CHECK(is_characteristic(d, HomologyClass(3, 1)));
  CHECK_FALSE(is_characteristic(d, HomologyClass(0, 2)));
  CHECK(is_characteristic(h, HomologyClass(0, 0)));
  // agreement with the quantified definition, |x_i| <= 5, |y_i| <= 3
  for (Int a = -5; a <= 5; ++a)
    for (Int b = -5; b <= 5; ++b) {
      HomologyClass x(a, b);
      CHECK(is_characteristic(d, x) == characteristic_oracle(d, x, 3));
      CHECK(is_characteristic(h, x) == characteristic_oracle(h, x, 3));
      // closed forms: both odd for diag(1,-1); both even for hyperbolic
      CHECK(is_characteristic(d, x) == (a % 2 != 0 && b % 2 != 0));
      CHECK(is_characteristic(h, x) == (a % 2 == 0 && b % 2 == 0));
    }
}

TEST_CASE("divisibility") {
  CHECK(divisibility(HomologyClass(-5, -5)) == 5);  // (-10k-5,-10k-5) at k=0
  CHECK(divisibility(HomologyClass(0, 0)) == 0);
  CHECK(divisibility(HomologyClass(6, 9)) == 3);
  CHECK(divisibility(HomologyClass(0, -7)) == 7);
}

TEST_CASE("symmetry reduction orbits") {
  auto fixed = symmetry_reduce({HomologyClass(0, 0), HomologyClass(0, 0)});
  CHECK(fixed.orbit.size() == 1);
  CHECK(fixed.canonical.first == HomologyClass(0, 0));

  // brute-force group closure oracle for ((1,2),(3,1))
  ClassPair p{HomologyClass(1, 2), HomologyClass(3, 1)};
  std::vector<ClassPair> brute;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1})
      for (int sw : {0, 1}) {
        HomologyClass a(e1 * 1, e2 * 2), b(e1 * 3, e2 * 1);
        brute.push_back(sw ? ClassPair{b, a} : ClassPair{a, b});
      }
  auto orb = symmetry_reduce(p);
  for (const auto& q : brute) {
    bool found = false;
    for (const auto& o : orb.orbit) found = found || (o.first == q.first && o.second == q.second);
    CHECK(found);
  }
  CHECK(orb.orbit.size() == 8);

  // ((a,a+1),(b+1,-b)) at a=1,b=2 trades places with the family-swapped shape
  auto swapped = symmetry_reduce({HomologyClass(1, 2), HomologyClass(3, -2)});
  bool has = false;
  for (const auto& o : swapped.orbit)
    has = has || (o.first == HomologyClass(3, -2) && o.second == HomologyClass(1, 2));
  CHECK(has);

  // idempotence; S1*S2 on both classes preserves the pairing exactly
  std::mt19937 rng(11);
  std::uniform_int_distribution<Int> coord(-9, 9);
  const auto& d = IntersectionForm::diag_1_m1();
  for (int it = 0; it < 100; ++it) {
    ClassPair q{HomologyClass(coord(rng), coord(rng)), HomologyClass(coord(rng), coord(rng))};
    auto red = symmetry_reduce(q);
    auto again = symmetry_reduce(red.canonical);
    CHECK(again.canonical.first == red.canonical.first);
    CHECK(again.canonical.second == red.canonical.second);
    Int pv = pairing(d, q.first, q.second);
    HomologyClass s1s2a(-q.first.coords[0], -q.first.coords[1]);
    HomologyClass s1s2b(-q.second.coords[0], -q.second.coords[1]);
    CHECK(pairing(d, s1s2a, s1s2b) == pv);
    // every orbit element preserves |pairing|
    for (const auto& o : red.orbit) CHECK(std::abs(pairing(d, o.first, o.second)) == std::abs(pv));
  }
}

TEST_CASE("form and profile validation") {
  CHECK_THROWS_AS(IntersectionForm::make({{1, 2}, {3, 1}}), InvalidInput);  // not symmetric
  CHECK_THROWS_AS(IntersectionForm::make({{2, 0}, {0, 2}}), InvalidInput);  // det 4
  CHECK(IntersectionForm::diag_1_m1().parity == IntersectionForm::Parity::odd);
  CHECK(IntersectionForm::hyperbolic().parity == IntersectionForm::Parity::even);
  CHECK(IntersectionForm::minus_e8_x2().parity == IntersectionForm::Parity::even);
  CHECK(IntersectionForm::minus_e8_x2().rank == 16);

  const auto& p = AmbientProfile::cp2bcp2();
  CHECK(p.sigma == 0);
  CHECK(p.b2 == 2);
  CHECK(p.b2_minus == 1);
  CHECK(p.parity == IntersectionForm::Parity::odd);
  CHECK(p.ks == 0);
  CHECK(AmbientProfile::cp2().b2_minus == 0);
  CHECK_THROWS_AS(AmbientProfile::make("bad", 1, 2, 0, IntersectionForm::diag_1_m1()),
                  InvalidInput);  // b2 - sigma odd
}
