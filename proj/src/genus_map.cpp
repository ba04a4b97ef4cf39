#include "slicecert/genus_map.hpp"

#include <algorithm>
#include <cstdlib>

namespace slicecert {

Int ruberman_genus(Int a1, Int a2) {
  Int x = std::abs(a1), y = std::abs(a2);
  if (x == y) return 0;
  Int big = std::max(x, y), small = std::min(x, y);
  return (big - 1) * (big - 2) / 2 - small * (small - 1) / 2;
}

Int ruberman_genus(const HomologyClass& c) {
  if (c.coords.size() != 2) throw DimensionMismatch("ruberman_genus: expects a rank-2 class");
  return ruberman_genus(c.coords[0], c.coords[1]);
}

std::vector<std::array<Int, 2>> classes_of_genus_at_most(Int g, Int coeff_bound) {
  std::vector<std::array<Int, 2>> out;
  for (Int a1 = -coeff_bound; a1 <= coeff_bound; ++a1)
    for (Int a2 = -coeff_bound; a2 <= coeff_bound; ++a2)
      if (ruberman_genus(a1, a2) <= g) out.push_back({a1, a2});
  return out;  // loop order is lexicographic already
}

std::string AffineClass::str(const std::string& var) const {
  auto comp = [&](Int c0, Int ct) {
    if (ct == 0) return std::to_string(c0);
    std::string s = (ct == 1) ? var : (ct == -1 ? "-" + var : std::to_string(ct) + var);
    if (c0 > 0) s += "+" + std::to_string(c0);
    if (c0 < 0) s += std::to_string(c0);
    return s;
  };
  return "(" + comp(x0, xt) + "," + comp(y0, yt) + ")";
}

Genus1Decomposition genus1_family_decomposition() {
  Genus1Decomposition d;
  using K = GenusBoundedFamily::Kind;
  d.families = {
      {K::infinite_family, {0, 1, 1, 1}, "(a,a+1)"},
      {K::infinite_family, {1, 1, 0, 1}, "(a+1,a)"},
      {K::infinite_family, {0, 1, -1, -1}, "(a,-(a+1))"},
      {K::infinite_family, {1, 1, 0, -1}, "(a+1,-a)"},
  };
  for (Int s1 : {1, -1})
    for (Int s3 : {3, -3}) {
      d.sporadics.push_back({K::sporadic, {s1, 0, s3, 0}, "(" + std::to_string(s1) + "," + std::to_string(s3) + ")"});
      d.sporadics.push_back({K::sporadic, {s3, 0, s1, 0}, "(" + std::to_string(s3) + "," + std::to_string(s1) + ")"});
    }
  d.excluded = {
      {"(a,+-a)", "Lemma: aa"},
      {"(0,+-2)", "Lemma: aa"},
      {"(+-2,0)", "Lemma: aa"},
      {"(+-3,0)", "Lemma: aa2"},
      {"(0,+-3)", "Lemma: aa2"},
  };
  return d;
}

Genus1Decomposition::Bucket Genus1Decomposition::classify(Int a1, Int a2) const {
  if (ruberman_genus(a1, a2) > 1) return Bucket::outside;
  Int x = std::abs(a1), y = std::abs(a2);
  if (std::abs(x - y) == 1) return Bucket::family;
  if ((x == 1 && y == 3) || (x == 3 && y == 1)) return Bucket::sporadic;
  if (x == y) return Bucket::excluded;                    // (a,+-a)
  if (std::min(x, y) == 0 && std::max(x, y) == 2) return Bucket::excluded;
  if (std::min(x, y) == 0 && std::max(x, y) == 3) return Bucket::excluded;
  return Bucket::outside;  // genus <= 1 classes are fully covered; unreachable
}

std::vector<Int> genus_window_on_diagonal_line(Int x0, Int y0, Int g) {
  Int d = std::abs(x0 - y0);
  if (d < 2) throw InvalidInput("diagonal line with offset gap < 2 has an infinite genus window");
  // Away from the fold region both |x0+t| and |y0+t| grow and their gap stays
  // d, so the genus grows linearly; the window below is provably exhaustive.
  Int w = 3 * (std::abs(x0) + std::abs(y0) + g + 5);
  std::vector<Int> out;
  for (Int t = -w; t <= w; ++t)
    if (ruberman_genus(x0 + t, y0 + t) <= g) out.push_back(t);
  // guard the window claim: genus must exceed g at both walls
  if (ruberman_genus(x0 - w, y0 - w) <= g || ruberman_genus(x0 + w, y0 + w) <= g)
    throw InternalInconsistency("genus window not exhaustive");
  return out;
}

}  // namespace slicecert
