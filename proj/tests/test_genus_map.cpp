#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "slicecert/genus_map.hpp"

using namespace slicecert;

namespace {

// independent rewrite of the three-branch formula
Int genus_oracle(Int a1, Int a2) {
  Int x = std::abs(a1), y = std::abs(a2);
  if (x > y) return (x - 1) * (x - 2) / 2 - y * (y - 1) / 2;
  if (x == y) return 0;
  return (y - 1) * (y - 2) / 2 - x * (x - 1) / 2;
}

// the genus <= 1 patterns, written from scratch
bool in_lemA_set(Int a1, Int a2) {
  Int x = std::abs(a1), y = std::abs(a2);
  if (std::abs(x - y) <= 1) return true;
  Int lo = std::min(x, y), hi = std::max(x, y);
  return (lo == 0 && hi == 2) || (lo == 0 && hi == 3) || (lo == 1 && hi == 3);
}

}  // namespace

TEST_CASE("genus function values") {
  CHECK(ruberman_genus(1, 3) == 1);
  CHECK(ruberman_genus(5, 0) == 6);
  for (Int a = -30; a <= 30; ++a) {
    CHECK(ruberman_genus(a, a) == 0);
    CHECK(ruberman_genus(a, -a) == 0);
  }
  for (Int a = -30; a <= 30; ++a)
    for (Int b = -30; b <= 30; ++b) {
      CHECK(ruberman_genus(a, b) == genus_oracle(a, b));
      CHECK(ruberman_genus(a, b) == ruberman_genus(-a, b));
      CHECK(ruberman_genus(a, b) == ruberman_genus(a, -b));
    }
}

TEST_CASE("genus-bounded class enumeration") {
  auto g1 = classes_of_genus_at_most(1, 50);
  std::set<std::array<Int, 2>> got(g1.begin(), g1.end());
  std::set<std::array<Int, 2>> want;
  for (Int a = -50; a <= 50; ++a)
    for (Int b = -50; b <= 50; ++b)
      if (in_lemA_set(a, b)) want.insert({a, b});
  CHECK(got == want);
  CHECK(std::is_sorted(g1.begin(), g1.end()));

  auto g0 = classes_of_genus_at_most(0, 3);
  for (const auto& c : g0) CHECK(genus_oracle(c[0], c[1]) == 0);
  for (Int a = -3; a <= 3; ++a)
    for (Int b = -3; b <= 3; ++b)
      CHECK((genus_oracle(a, b) == 0) == std::binary_search(g0.begin(), g0.end(),
                                                            std::array<Int, 2>{a, b}));

  auto tiny = classes_of_genus_at_most(1, 0);
  CHECK(tiny.size() == 1);
  CHECK(tiny[0] == std::array<Int, 2>{0, 0});
}

TEST_CASE("genus-1 family decomposition partitions the genus-1 classes") {
  auto dec = genus1_family_decomposition();
  CHECK(dec.families.size() == 4);
  CHECK(dec.sporadics.size() == 8);
  bool has_f1 = false;
  for (const auto& f : dec.families) has_f1 = has_f1 || f.label == "(a,a+1)";
  CHECK(has_f1);
  bool has_aa = false, has_03 = false;
  for (const auto& e : dec.excluded) {
    if (e.pattern == "(a,+-a)") {
      has_aa = true;
      CHECK(e.rule == "Lemma: aa");
    }
    if (e.pattern == "(0,+-3)") {
      has_03 = true;
      CHECK(e.rule == "Lemma: aa2");
    }
  }
  CHECK(has_aa);
  CHECK(has_03);

  // exhaustive membership: every genus <= 1 class in the box falls into
  // exactly one bucket, and the buckets are consistent with direct predicates
  for (const auto& c : classes_of_genus_at_most(1, 40)) {
    auto bucket = dec.classify(c[0], c[1]);
    CHECK(bucket != Genus1Decomposition::Bucket::outside);
    Int x = std::abs(c[0]), y = std::abs(c[1]);
    bool family = std::abs(x - y) == 1;
    bool sporadic = (x == 1 && y == 3) || (x == 3 && y == 1);
    bool excluded = x == y || (std::min(x, y) == 0 && (std::max(x, y) == 2 || std::max(x, y) == 3));
    CHECK((family ? 1 : 0) + (sporadic ? 1 : 0) + (excluded ? 1 : 0) == 1);
    if (family) CHECK(bucket == Genus1Decomposition::Bucket::family);
    if (sporadic) CHECK(bucket == Genus1Decomposition::Bucket::sporadic);
    if (excluded) CHECK(bucket == Genus1Decomposition::Bucket::excluded);
  }
  // family instances match the symbolic parametrizations
  for (const auto& f : dec.families)
    for (Int t = -20; t <= 20; ++t) {
      auto v = f.cls.at(t);
      CHECK(std::abs(std::abs(v[0]) - std::abs(v[1])) == 1);
    }
}

TEST_CASE("diagonal genus windows") {
  // alpha+beta lines used by the sporadic reduction
  auto w5 = genus_window_on_diagonal_line(-1, 4, 2);  // (t-1, t+4)
  std::set<Int> xs;
  for (Int t : w5) xs.insert(t - 1);
  CHECK(xs == std::set<Int>{-2, -3});
  auto w3 = genus_window_on_diagonal_line(1, -2, 2);  // (t+1, t-2)
  xs.clear();
  for (Int t : w3) xs.insert(t + 1);
  CHECK(xs == std::set<Int>{0, 1, 2, 3});
  CHECK_THROWS_AS(genus_window_on_diagonal_line(0, 1, 2), InvalidInput);
}
