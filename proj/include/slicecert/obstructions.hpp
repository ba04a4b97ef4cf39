#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "slicecert/genus_map.hpp"
#include "slicecert/homology.hpp"
#include "slicecert/knot_model.hpp"

namespace slicecert {

enum class Outcome { ruled_out, consistent, inapplicable };
std::string outcome_str(Outcome o);

// Arithmetic witness attached to a verdict; every ruled_out verdict carries
// the numbers needed to re-check the violated inequality independently.
using Witness = std::map<std::string, std::string>;

struct ObstructionVerdict {
  Outcome outcome = Outcome::inapplicable;
  std::string rule;
  std::string citation;
  Witness witness;
};

bool is_prime_power(Int m);

// |sigma_K(zeta) + sigma(X) - 2r(m-r)[S]^2/m^2| <= b2(X) + 2g, applicable when
// m is a prime power dividing the divisibility of the class.  The middle term
// is kept as an exact rational.
ObstructionVerdict signature_obstruction(Int sig_value, const AmbientProfile& ambient,
                                         const HomologyClass& cls, Int genus,
                                         const RootOfUnity& omega);

// (sigma(X) - [S]^2)/8 = Arf(K) + ks(X) mod 2 for a characteristic disc class.
ObstructionVerdict arf_obstruction(int arf, const AmbientProfile& ambient,
                                   const HomologyClass& cls);

// alpha . beta = -lk for disjoint disc classes.
bool lk_consistency(const IntersectionForm& form, const HomologyClass& alpha,
                    const HomologyClass& beta, Int lk);
bool lk_consistency(const HomologyClass& alpha, const HomologyClass& beta, Int lk);

struct DerivedDisc {
  enum class Construction { sum, reversed_sum_with_torus, cable_sum };
  Construction construction;
  int sign_choice = 0;  // 0 for sum, else +-1
  ExprPtr knot;
  HomologyClass cls;
  Int parameter_q = 0;  // torus or cable parameter; 0 when not applicable
  std::string str() const;
};

// The disc constructions available over a pair of disjoint discs:
// A#B in class alpha+beta; A#B^r#T_{2,2n+-1} in class alpha-beta;
// A#(B_{(2,-2*beta^2-2n+-1)}) in class alpha+2*beta.  Here n = -lk(A,B).
std::vector<DerivedDisc> derived_discs(const ExprPtr& A, const ExprPtr& B,
                                       const HomologyClass& alpha, const HomologyClass& beta,
                                       Int n);

enum class Trichotomy { A_char, B_char, sum_char, violates_hypothesis };

// Mod-2 residues of two disc classes in the even form; when a*b' + a'*b is
// even, one of alpha, beta, alpha+beta is characteristic.
Trichotomy my_trichotomy(const std::array<int, 2>& alpha_res, const std::array<int, 2>& beta_res);

std::string class_str(const HomologyClass& c);

}  // namespace slicecert
