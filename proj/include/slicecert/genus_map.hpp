#pragma once

#include <array>
#include <string>
#include <vector>

#include "slicecert/homology.hpp"

namespace slicecert {

// Minimal genus of a smoothly embedded orientable surface in CP2#bCP2
// representing (a1, a2) against the diag(+1,-1) basis.
Int ruberman_genus(Int a1, Int a2);
Int ruberman_genus(const HomologyClass& c);

// All classes in the box |a_i| <= coeff_bound with genus <= g, ordered
// lexicographically.
std::vector<std::array<Int, 2>> classes_of_genus_at_most(Int g, Int coeff_bound);

// Affine rank-2 class c(t) = (x0 + xt * t, y0 + yt * t).
struct AffineClass {
  Int x0 = 0, xt = 0, y0 = 0, yt = 0;
  std::array<Int, 2> at(Int t) const { return {x0 + xt * t, y0 + yt * t}; }
  std::string str(const std::string& var = "t") const;
};

struct GenusBoundedFamily {
  enum class Kind { infinite_family, sporadic };
  Kind kind;
  AffineClass cls;  // constant for sporadics
  std::string label;
};

// The genus <= 1 classes organised for casework: four one-parameter families,
// eight sporadic classes, and the shapes excluded under the linking-number and
// Arf assumptions, annotated with the excluding rule.
struct Genus1Decomposition {
  std::vector<GenusBoundedFamily> families;   // (t,t+1), (t+1,t), (t,-(t+1)), (t+1,-t)
  std::vector<GenusBoundedFamily> sporadics;  // (+-1,+-3), (+-3,+-1)
  struct ExcludedShape {
    std::string pattern;  // e.g. "(a,+-a)"
    std::string rule;     // citation of the excluding rule
  };
  std::vector<ExcludedShape> excluded;

  enum class Bucket { family, sporadic, excluded, outside };
  Bucket classify(Int a1, Int a2) const;
};

Genus1Decomposition genus1_family_decomposition();

// Integer t with ruberman_genus(x0+t, y0+t) <= g, for a line with slope
// (1,1) whose coordinate offset |x0 - y0| is at least 2 (finite solution set).
std::vector<Int> genus_window_on_diagonal_line(Int x0, Int y0, Int g);

}  // namespace slicecert
