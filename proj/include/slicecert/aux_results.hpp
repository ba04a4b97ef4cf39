#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "slicecert/casework.hpp"
#include "slicecert/homology.hpp"

namespace slicecert {

// Knot data for the topological obstructions: the 'central' signature per
// prime power m (sigma at -1 for even m, at e^{pi i (m-1)/m} for odd m).
struct KnotTopProfile {
  std::string name;
  std::map<Int, Int> central_signatures;
  int arf = 0;

  Int central_at(Int m) const;
  static KnotTopProfile c7t23();  // #7 T(2,3), central signature -14 throughout
};

// For a closed even simply connected X: does the (b2+1)-component construction
// obstruct, i.e. sigma_K(-1) > b2(X) - sigma(X)?
bool b2plus1_obstruction(const AmbientProfile& X, Int sigma_at_minus1);

enum class RealizeTarget { S2xS2, CP2bCP2 };

// Columns v1,v2,v3 with v1.v2 = a, v1.v3 = b, v2.v3 = c under the target
// form; rows of the returned 2x3 matrix.  The S2xS2 construction needs
// (a,b) != (0,0).
std::array<std::array<Int, 3>, 2> yasuhara_realize(Int a, Int b, Int c, RealizeTarget target);

// f_m(d) = d^2/2 - 1 for even prime powers m, (d^2/2)(m^2-1)/m^2 - 1 for odd.
mpq_class kprt_f(Int m, Int d);

struct AuxCertificate {
  std::string subject;
  std::vector<CaseLeaf> leaves;
  bool all_closed = false;
};

// Non-sliceness of #7 T(2,3) in CP2 and in bCP2, one leaf per homology class
// zone: exact rational checks for |d| <= 6, an analytic tail for |d| >= 7 and
// an axiom leaf for d = +-1.
AuxCertificate verify_c7t23_not_slice_in_cp2s();

// Independent arithmetic replay of the certificate above.
bool replay_c7t23(const AuxCertificate& cert);

struct ThreeComponentVerdict {
  bool obstructed = false;
  std::string reason;
};

// Split union of a Hopf link and C: obstructed iff C is not H-slice in
// CP2#bCP2 (classical signature) and a CP2/bCP2 certificate for C is on file.
ThreeComponentVerdict three_component_verdict(const KnotTopProfile& C);

}  // namespace slicecert
