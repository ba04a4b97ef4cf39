#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "slicecert/genus_map.hpp"
#include "slicecert/knot_model.hpp"
#include "slicecert/obstructions.hpp"

namespace slicecert {

// Properties of the link that are declared by the input rather than computed:
// the twist-box diagram structure and the component-swapping isotopy.
struct DeclaredFlags {
  bool a1_structure = true;
  bool a3_symmetric = true;
};

struct AssumptionReport {
  struct Item {
    bool pass = false;
    std::string detail;
  };
  std::map<std::string, Item> items;  // A1..A8 with A4a..A4f itemized
  Int ell = 0;                        // lk = 30*ell + 1 when A4 passes

  bool all_pass() const;
  std::vector<std::string> failures() const;
};

// A = B = K (symmetric link).  A6-A8 are evaluated from signature samples at
// 1/2, 1/3, 1/5 and 2/5.  Throws MissingSample when the record cannot supply
// a required value.
AssumptionReport check_assumptions(const KnotRecord& K, Int lk, const DeclaredFlags& declared);

// One symmetry-reduced case: alpha in the family (a,a+1), beta affine in b or
// a concrete sporadic class.
struct AffineClassPair {
  std::string cell;  // grey | blue | green0 | green1 | sporadic(3,1) | sporadic(-1,-3)
  AffineClass alpha;
  AffineClass beta;
  bool beta_concrete = false;
  std::string pairing_formula;
  std::string constraint;
};

struct CaseSet {
  std::vector<AffineClassPair> live;
  // Sporadic configurations discarded by the genus-2 windows: each row pins
  // alpha and the pairing value, which the linking number then contradicts.
  struct ReductionRow {
    HomologyClass beta;
    Int x = 0;  // position of alpha+beta on its diagonal line
    HomologyClass alpha;
    Int pairing_value = 0;
    Int required_lk = 0;
  };
  std::vector<ReductionRow> discarded;
};

// Requires A4a and A4b (the family decomposition is not justified otherwise).
CaseSet generate_cases(Int lk);

struct CaseLeaf {
  std::string label;
  std::string citation;
  std::map<std::string, std::string> classes;
  std::map<std::string, std::string> parameters;
  Outcome verdict = Outcome::inapplicable;
  Witness witness;
};

struct Certificate {
  std::map<std::string, std::string> input;
  AssumptionReport assumptions;
  std::vector<CaseLeaf> decomposition;  // class shapes excluded before casework
  std::vector<CaseLeaf> cases;          // the symmetry-reduced case analysis
  std::vector<std::string> surviving;
  bool coverage_ok = false;
  enum class Verdict { NOT_SLICE, INCONCLUSIVE } verdict = Verdict::INCONCLUSIVE;
};

std::string verdict_str(Certificate::Verdict v);

// Per-cell rules.  Each checks its prerequisites, re-verifies any claimed
// parameter cancellation at five parameter values, and returns leaves whose
// witnesses can be re-checked with no access to the engine.
CaseLeaf rule_grey(const KnotRecord& K, Int lk);
CaseLeaf rule_blue(const KnotRecord& K, Int lk);
std::vector<CaseLeaf> rule_green(const KnotRecord& K, Int lk, int eta);
CaseLeaf rule_sporadic_3(const KnotRecord& K, Int lk);
CaseLeaf rule_sporadic_5(const KnotRecord& K, Int lk, bool a3_declared);

// Independent enumeration of all integer solutions of alpha.beta = -lk in the
// green cells via the odd factorisation (2a+1)(2b+1) = 2(-lk-1+eta)+1.  Used
// to cross-check that rule_green's case list is complete.
std::vector<std::tuple<Int, Int, int>> green_divisor_oracle(Int lk);

// Full certificate: assumption gate, decomposition exclusions, case analysis,
// structural coverage check.  All failure modes are reported in-band.
Certificate certify_not_slice(const KnotRecord& K, Int lk, const DeclaredFlags& declared);

// Structural check that the emitted cases cover the product of the genus-1
// decomposition with itself up to the symmetry group.
bool verify_coverage(const Certificate& cert);

}  // namespace slicecert
