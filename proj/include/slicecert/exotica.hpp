#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slicecert/homology.hpp"

namespace slicecert {

enum class RokhlinStatus { vanishes, nonvanishing, out_of_family };
std::string rokhlin_str(RokhlinStatus s);

// Surgery framing pair for the two link components; detQ = fA*fB - lk^2.
struct FramingCandidate {
  Int fA = 0;
  Int fB = 0;
  Int lk = 0;
  Int detQ = 0;
  bool parity_ok = false;                 // fA odd or fB odd
  bool negative = false;                  // flagged: at least one framing negative
  std::optional<bool> rokhlin_vanishes;   // set when lk lies in the 30*ell+1 family
};

// All pairs with |fA|,|fB| <= bound, fA*fB = lk^2 - 1 and the parity
// condition, sorted by (fA, fB).  Negative pairs are included and flagged.
std::vector<FramingCandidate> framing_search(Int lk, Int bound);

// Relaxed determinant variant: detQ < 0 instead of detQ = -1.
std::vector<FramingCandidate> framing_search_indefinite(Int lk, Int bound);

// For lk = 30*ell + 1 with the framing choice (lk^2-1, 1): mu vanishes iff
// ell = 2,3 mod 4.  Outside that family the classification is not available.
RokhlinStatus rokhlin_vanishes(Int lk);

struct FamilyDescriptor {
  Int m = 0;
  Int twist_count = 0;  // 30(4m+1) - 1
  Int lk = 0;           // -twist_count
  Int fA = 0;           // lk^2 - 1
  Int fB = 1;
  Int detQ = -1;
  RokhlinStatus rokhlin = RokhlinStatus::out_of_family;
};

FamilyDescriptor build_family(Int m);

}  // namespace slicecert
