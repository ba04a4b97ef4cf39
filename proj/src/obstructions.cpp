#include "slicecert/obstructions.hpp"

#include <cstdlib>

#include "slicecert/exact.hpp"

namespace slicecert {

std::string outcome_str(Outcome o) {
  switch (o) {
    case Outcome::ruled_out: return "ruled_out";
    case Outcome::consistent: return "consistent";
    case Outcome::inapplicable: return "inapplicable";
  }
  return "?";
}

std::string class_str(const HomologyClass& c) {
  std::string s = "(";
  for (size_t i = 0; i < c.coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.coords[i]);
  }
  return s + ")";
}

bool is_prime_power(Int m) {
  if (m < 2) return false;
  Int p = 0;
  for (Int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return true;  // m prime
  while (m % p == 0) m /= p;
  return m == 1;
}

ObstructionVerdict signature_obstruction(Int sig_value, const AmbientProfile& ambient,
                                         const HomologyClass& cls, Int genus,
                                         const RootOfUnity& omega) {
  ObstructionVerdict v;
  v.rule = "signature";
  v.citation = "Thm: signature";
  Int div = divisibility(cls);
  v.witness["class"] = class_str(cls);
  v.witness["divisibility"] = std::to_string(div);
  v.witness["m"] = std::to_string(omega.m);
  v.witness["r"] = std::to_string(omega.r);
  v.witness["sigma_K"] = std::to_string(sig_value);
  v.witness["sigma_X"] = std::to_string(ambient.sigma);
  v.witness["b2"] = std::to_string(ambient.b2);
  v.witness["genus"] = std::to_string(genus);
  if (!is_prime_power(omega.m)) {
    v.outcome = Outcome::inapplicable;
    v.witness["inapplicable_reason"] = "m is not a prime power";
    return v;
  }
  if (div != 0 && div % omega.m != 0) {
    v.outcome = Outcome::inapplicable;
    v.witness["inapplicable_reason"] = "m does not divide the class";
    return v;
  }
  Int sq = pairing(ambient.form, cls, cls);
  mpq_class middle = mpq_of(2 * omega.r * (omega.m - omega.r)) * mpq_of(sq) /
                     mpq_of(omega.m * omega.m);
  mpq_class lhs = mpq_of(sig_value + ambient.sigma) - middle;
  if (lhs < 0) lhs = -lhs;
  mpq_class bound = mpq_of(ambient.b2 + 2 * genus);
  v.witness["class_square"] = std::to_string(sq);
  v.witness["middle_term"] = q_str(middle);
  v.witness["lhs"] = q_str(lhs);
  v.witness["bound"] = q_str(bound);
  v.outcome = lhs > bound ? Outcome::ruled_out : Outcome::consistent;
  return v;
}

ObstructionVerdict arf_obstruction(int arf, const AmbientProfile& ambient,
                                   const HomologyClass& cls) {
  ObstructionVerdict v;
  v.rule = "arf";
  v.citation = "Thm: Arf";
  v.witness["class"] = class_str(cls);
  v.witness["arf_K"] = std::to_string(arf);
  v.witness["sigma_X"] = std::to_string(ambient.sigma);
  v.witness["ks_X"] = std::to_string(ambient.ks);
  if (!is_characteristic(ambient.form, cls)) {
    v.outcome = Outcome::inapplicable;
    v.witness["inapplicable_reason"] = "class is not characteristic";
    return v;
  }
  Int sq = pairing(ambient.form, cls, cls);
  Int num = ambient.sigma - sq;
  if (((num % 8) + 8) % 8 != 0)
    throw InternalInconsistency(
        "sigma(X) - [S]^2 not divisible by 8 for a characteristic class");
  Int lhs = (((num / 8) % 2) + 2) % 2;
  Int rhs = (arf + ambient.ks) % 2;
  v.witness["class_square"] = std::to_string(sq);
  v.witness["congruence_lhs"] = std::to_string(lhs);
  v.witness["congruence_rhs"] = std::to_string(rhs);
  v.outcome = lhs != rhs ? Outcome::ruled_out : Outcome::consistent;
  return v;
}

bool lk_consistency(const IntersectionForm& form, const HomologyClass& alpha,
                    const HomologyClass& beta, Int lk) {
  return pairing(form, alpha, beta) == -lk;
}

bool lk_consistency(const HomologyClass& alpha, const HomologyClass& beta, Int lk) {
  return lk_consistency(IntersectionForm::diag_1_m1(), alpha, beta, lk);
}

std::string DerivedDisc::str() const {
  switch (construction) {
    case Construction::sum: return "sum";
    case Construction::reversed_sum_with_torus:
      return std::string("reversed_sum_with_torus") + (sign_choice > 0 ? "+" : "-");
    case Construction::cable_sum:
      return std::string("cable_sum") + (sign_choice > 0 ? "+" : "-");
  }
  return "?";
}

std::vector<DerivedDisc> derived_discs(const ExprPtr& A, const ExprPtr& B,
                                       const HomologyClass& alpha, const HomologyClass& beta,
                                       Int n) {
  const auto& form = IntersectionForm::diag_1_m1();
  if (!lk_consistency(form, alpha, beta, -n))
    throw PrerequisiteError("lk_consistency", "alpha.beta != n for the given twist count");
  if (alpha.coords.size() != 2 || beta.coords.size() != 2)
    throw DimensionMismatch("derived_discs: expects rank-2 classes");
  auto add = [](const HomologyClass& x, const HomologyClass& y, Int cy) {
    return HomologyClass(x.coords[0] + cy * y.coords[0], x.coords[1] + cy * y.coords[1]);
  };
  Int beta_sq = pairing(form, beta, beta);
  std::vector<DerivedDisc> out;
  out.push_back({DerivedDisc::Construction::sum, 0, KnotExpression::sum({A, B}), add(alpha, beta, 1), 0});
  for (int sign : {+1, -1}) {
    Int q = 2 * n + sign;
    std::vector<ExprPtr> parts{A, KnotExpression::reverse(B)};
    if (q != 1 && q != -1) parts.push_back(KnotExpression::torus2(q));
    out.push_back({DerivedDisc::Construction::reversed_sum_with_torus, sign,
                   KnotExpression::sum(std::move(parts)), add(alpha, beta, -1), q});
  }
  for (int sign : {+1, -1}) {
    Int q = -2 * beta_sq - 2 * n + sign;
    out.push_back({DerivedDisc::Construction::cable_sum, sign,
                   KnotExpression::sum({A, KnotExpression::cable2(B, q)}), add(alpha, beta, 2),
                   q});
  }
  return out;
}

Trichotomy my_trichotomy(const std::array<int, 2>& alpha_res, const std::array<int, 2>& beta_res) {
  auto r2 = [](int v) { return ((v % 2) + 2) % 2; };
  int a = r2(alpha_res[0]), a2 = r2(alpha_res[1]);
  int b = r2(beta_res[0]), b2 = r2(beta_res[1]);
  if ((a * b2 + a2 * b) % 2 != 0) return Trichotomy::violates_hypothesis;
  if (a == 0 && a2 == 0) return Trichotomy::A_char;
  if (b == 0 && b2 == 0) return Trichotomy::B_char;
  if ((a + b) % 2 == 0 && (a2 + b2) % 2 == 0) return Trichotomy::sum_char;
  throw InternalInconsistency("trichotomy: no characteristic member under an even pairing");
}

}  // namespace slicecert
