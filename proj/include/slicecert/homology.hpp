#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slicecert/errors.hpp"

namespace slicecert {

using Int = long long;

// Symmetric unimodular integer bilinear form.
struct IntersectionForm {
  int rank = 0;
  std::vector<std::vector<Int>> matrix;  // rank x rank, symmetric, det = +-1
  enum class Parity { even, odd };
  Parity parity = Parity::odd;

  // Validates symmetry, unimodularity and the parity flag.
  static IntersectionForm make(std::vector<std::vector<Int>> m);

  static const IntersectionForm& diag_1_m1();    // diag(+1,-1)
  static const IntersectionForm& hyperbolic();   // [[0,1],[1,0]]
  static const IntersectionForm& diag_1();       // [+1]
  static const IntersectionForm& diag_m1();      // [-1]
  static const IntersectionForm& minus_e8_x2();  // (-E8) + (-E8), rank 16
};

struct HomologyClass {
  std::vector<Int> coords;

  HomologyClass() = default;
  explicit HomologyClass(std::vector<Int> c) : coords(std::move(c)) {}
  HomologyClass(Int a1, Int a2) : coords{a1, a2} {}

  bool is_zero() const;
  bool operator==(const HomologyClass& o) const { return coords == o.coords; }
};

// Ambient 4-manifold invariants bundled with its intersection form.
struct AmbientProfile {
  std::string name;
  Int sigma = 0;
  Int b2 = 0;
  Int b2_minus = 0;
  IntersectionForm::Parity parity = IntersectionForm::Parity::odd;
  int ks = 0;
  IntersectionForm form;

  static AmbientProfile make(std::string name, Int sigma, Int b2, int ks, IntersectionForm form);

  static const AmbientProfile& cp2bcp2();  // sigma 0, b2 2, odd, diag(+1,-1)
  static const AmbientProfile& s2xs2();    // sigma 0, b2 2, even, hyperbolic
  static const AmbientProfile& cp2();      // sigma 1, b2 1, odd
  static const AmbientProfile& bcp2();     // sigma -1, b2 1, odd
};

// x^T * matrix * y.  Throws DimensionMismatch on length mismatch.
Int pairing(const IntersectionForm& form, const HomologyClass& x, const HomologyClass& y);

// x . y == y . y mod 2 for all y; checked on basis vectors (enough by bilinearity).
bool is_characteristic(const IntersectionForm& form, const HomologyClass& x);

// gcd of the coordinates; 0 for the zero class (every m divides 0).
Int divisibility(const HomologyClass& x);

using ClassPair = std::pair<HomologyClass, HomologyClass>;

// Orbit of a pair of rank-2 classes under the group generated by the two
// coordinate sign flips (applied to both classes at once) and the swap of the
// two classes.  Canonical representative is the lexicographic minimum.
struct PairOrbit {
  ClassPair canonical;
  std::vector<ClassPair> orbit;  // sorted, deduplicated; size divides 8
};

PairOrbit symmetry_reduce(const ClassPair& pair);

}  // namespace slicecert
