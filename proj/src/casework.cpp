#include "slicecert/casework.hpp"

#include <algorithm>
#include <cstdlib>

#include "slicecert/exact.hpp"

namespace slicecert {

namespace {

Int imod(Int a, Int b) { return ((a % b) + b) % b; }

const std::vector<Int>& a4d_excluded_set() {
  static const std::vector<Int> s = {1, -1, 3, -3, 5, -5, 7, -7, 11, -11};
  return s;
}

bool in_a4d_set(Int v) {
  const auto& s = a4d_excluded_set();
  return std::find(s.begin(), s.end(), v) != s.end();
}

std::vector<Int> probes(Int center) {
  return {center - 2, center - 1, center, center + 1, center + 2};
}

AffineClass affine_add(const AffineClass& u, const AffineClass& v, Int cv = 1) {
  return {u.x0 + cv * v.x0, u.xt + cv * v.xt, u.y0 + cv * v.y0, u.yt + cv * v.yt};
}

// (x0+xt t)^2 - (y0+yt t)^2 as c0 + c1 t + c2 t^2
struct Quad {
  Int c0 = 0, c1 = 0, c2 = 0;
};

Quad affine_square(const AffineClass& c) {
  return {c.x0 * c.x0 - c.y0 * c.y0, 2 * (c.x0 * c.xt - c.y0 * c.yt), c.xt * c.xt - c.yt * c.yt};
}

HomologyClass at(const AffineClass& c, Int t) {
  auto v = c.at(t);
  return HomologyClass(v[0], v[1]);
}

void require(bool ok, const std::string& assumption, const std::string& detail) {
  if (!ok) throw PrerequisiteError(assumption, detail);
}

const AffineClass kAlpha{0, 1, 1, 1};  // (a, a+1)

}  // namespace

bool AssumptionReport::all_pass() const {
  for (const auto& [k, item] : items)
    if (!item.pass) return false;
  return true;
}

std::vector<std::string> AssumptionReport::failures() const {
  std::vector<std::string> out;
  for (const auto& [k, item] : items)
    if (!item.pass) out.push_back(k + ": " + item.detail);
  return out;
}

AssumptionReport check_assumptions(const KnotRecord& K, Int lk, const DeclaredFlags& declared) {
  AssumptionReport rep;
  auto set = [&](const std::string& key, bool pass, const std::string& detail) {
    rep.items[key] = {pass, detail};
  };
  set("A1", declared.a1_structure,
      declared.a1_structure ? "twist-box diagram structure declared" : "structure not declared");
  set("A2", K.g4 == 1, "g4(" + K.name + ") = " + std::to_string(K.g4));
  set("A3", declared.a3_symmetric,
      declared.a3_symmetric ? "component swap isotopy declared" : "symmetry not declared");
  bool a4 = imod(lk - 1, 30) == 0;
  if (a4) {
    rep.ell = (lk - 1) / 30;
    a4 = rep.ell != 0;
  }
  set("A4", a4,
      a4 ? "lk = 30*(" + std::to_string(rep.ell) + ")+1"
         : "lk = " + std::to_string(lk) + " is not 30*ell+1 with ell != 0");
  set("A4a", imod(lk, 2) != 0, "lk mod 2 = " + std::to_string(imod(lk, 2)));
  set("A4b", imod(lk, 3) != 0, "lk mod 3 = " + std::to_string(imod(lk, 3)));
  set("A4c", std::abs(lk) >= 4, "|lk| = " + std::to_string(std::abs(lk)));
  set("A4d", !in_a4d_set(lk), in_a4d_set(lk) ? "lk is in {+-1,+-3,+-5,+-7,+-11}" : "lk avoids {+-1,+-3,+-5,+-7,+-11}");
  set("A4e", imod(lk, 3) == 1, "lk mod 3 = " + std::to_string(imod(lk, 3)));
  set("A4f", imod(lk, 5) == 1, "lk mod 5 = " + std::to_string(imod(lk, 5)));
  set("A5", K.arf == 1, "Arf(" + K.name + ") = " + std::to_string(K.arf));
  Int s2 = K.signature_at(RootOfUnity(1, 2));
  Int s3 = K.signature_at(RootOfUnity(1, 3));
  Int s5 = K.signature_at(RootOfUnity(1, 5));
  Int s52 = K.signature_at(RootOfUnity(2, 5));
  set("A6", s2 != 0, "sigma(1/2) = " + std::to_string(s2));
  set("A7", s3 != 2, "sigma(1/3) = " + std::to_string(s3));
  set("A8", s5 + s52 >= 2,
      "sigma(1/5) + sigma(2/5) = " + std::to_string(s5) + " + " + std::to_string(s52));
  if (rep.items.at("A4").pass) {
    for (const char* sub : {"A4a", "A4b", "A4c", "A4d", "A4e", "A4f"})
      if (!rep.items.at(sub).pass)
        throw InternalInconsistency(std::string("A4 holds but ") + sub + " failed");
  }
  return rep;
}

CaseSet generate_cases(Int lk) {
  require(imod(lk, 2) != 0, "A4a", "lk = " + std::to_string(lk) + " is even");
  require(imod(lk, 3) != 0, "A4b", "lk = " + std::to_string(lk) + " is divisible by 3");
  CaseSet cs;
  cs.live.push_back({"grey", kAlpha, {0, 1, 1, 1}, false, "-(a+b+1)", "a+b+1 = lk"});
  cs.live.push_back({"blue", kAlpha, {1, 1, 0, 1}, false, "a-b", "b-a = lk"});
  cs.live.push_back({"green0", kAlpha, {0, 1, -1, -1}, false, "2ab+a+b+1", "2ab+a+b+1 = -lk"});
  cs.live.push_back({"green1", kAlpha, {1, 1, 0, -1}, false, "2ab+a+b", "2ab+a+b = -lk"});
  cs.live.push_back({"sporadic(3,1)", kAlpha, {3, 0, 1, 0}, true, "2a-1", "-2a+1 = lk"});
  cs.live.push_back({"sporadic(-1,-3)", kAlpha, {-1, 0, -3, 0}, true, "2a+3", "-2a-3 = lk"});
  // the six sporadic classes discarded through genus-2 windows on alpha+beta
  const std::vector<HomologyClass> discarded_betas = {
      {-1, 3}, {-3, 1}, {1, -3}, {3, -1}, {-3, -1}, {1, 3}};
  const auto& form = IntersectionForm::diag_1_m1();
  for (const auto& beta : discarded_betas) {
    auto ts = genus_window_on_diagonal_line(beta.coords[0], 1 + beta.coords[1], 2);
    for (Int t : ts) {
      HomologyClass alpha = at(kAlpha, t);
      Int pv = pairing(form, alpha, beta);
      cs.discarded.push_back({beta, t + beta.coords[0], alpha, pv, -pv});
    }
  }
  return cs;
}

std::string verdict_str(Certificate::Verdict v) {
  return v == Certificate::Verdict::NOT_SLICE ? "NOT_SLICE" : "INCONCLUSIVE";
}

CaseLeaf rule_grey(const KnotRecord& K, Int lk) {
  require(imod(lk, 2) != 0, "A4a", "lk even");
  require(std::abs(lk) >= 4, "A4c", "|lk| < 4");
  require(K.g4 == 1, "A2", "g4 != 1");
  // constraint a+b+1 = lk pins b = lk-1-a; alpha+beta must lose the parameter
  AffineClass beta{lk - 1, -1, lk, -1};
  AffineClass sum = affine_add(kAlpha, beta);
  if (sum.xt != 0 || sum.yt != 0)
    throw InternalInconsistency("grey cell: parameter fails to cancel in alpha+beta");
  Quad sq = affine_square(sum);
  if (sq.c1 != 0 || sq.c2 != 0 || sq.c0 != -4 * lk)
    throw InternalInconsistency("grey cell: (alpha+beta)^2 != -4*lk");
  const auto& form = IntersectionForm::diag_1_m1();
  for (Int a : probes(0))
    if (pairing(form, at(kAlpha, a), at(beta, a)) != -lk)
      throw InternalInconsistency("grey cell: pairing constraint fails at a=" + std::to_string(a));
  Int sigma_ab = 2 * K.signature_at(RootOfUnity(1, 2));
  auto v = signature_obstruction(sigma_ab, AmbientProfile::cp2bcp2(),
                                 HomologyClass(lk - 1, lk + 1), 0, RootOfUnity(1, 2));
  CaseLeaf leaf;
  leaf.label = "cell:grey";
  leaf.citation = "Lemma: table1 / Thm: signature";
  leaf.classes = {{"alpha", "(a,a+1)"}, {"beta", "(b,b+1)"}};
  leaf.parameters = {{"constraint", "a+b+1 = lk"},
                     {"b", "lk-1-a"},
                     {"sum_class", "(lk-1,lk+1)"},
                     {"checked_at", "a in {-2,-1,0,1,2}"}};
  leaf.witness = v.witness;
  leaf.witness["sigma_AB_at_-1"] = std::to_string(sigma_ab);
  leaf.verdict = v.outcome;
  return leaf;
}

CaseLeaf rule_blue(const KnotRecord& K, Int lk) {
  require(imod(lk, 2) != 0, "A4a", "lk even");
  Int s2 = K.signature_at(RootOfUnity(1, 2));
  require(s2 != 0, "A6", "sigma(1/2) = 0");
  AffineClass beta{lk + 1, 1, lk, 1};  // b = a + lk
  AffineClass sum = affine_add(kAlpha, beta);
  Quad sq = affine_square(sum);
  if (sq.c0 != 0 || sq.c1 != 0 || sq.c2 != 0)
    throw InternalInconsistency("blue cell: (alpha+beta)^2 != 0");
  const auto& form = IntersectionForm::diag_1_m1();
  Int sigma_ab = 2 * s2;
  ObstructionVerdict ref;
  bool first = true;
  for (Int a : probes(0)) {
    if (pairing(form, at(kAlpha, a), at(beta, a)) != -lk)
      throw InternalInconsistency("blue cell: pairing constraint fails at a=" + std::to_string(a));
    auto v = signature_obstruction(sigma_ab, AmbientProfile::cp2bcp2(), at(sum, a), 0,
                                   RootOfUnity(1, 2));
    if (first) {
      ref = v;
      first = false;
    } else if (v.outcome != ref.outcome || v.witness.at("lhs") != ref.witness.at("lhs")) {
      throw InternalInconsistency("blue cell: inequality not constant in the parameter");
    }
  }
  CaseLeaf leaf;
  leaf.label = "cell:blue";
  leaf.citation = "Lemma: table3 / Thm: signature";
  leaf.classes = {{"alpha", "(a,a+1)"}, {"beta", "(b+1,b)"}};
  leaf.parameters = {{"constraint", "b-a = lk"},
                     {"b", "a+lk"},
                     {"sum_class", "(2a+lk+1,2a+lk+1)"},
                     {"checked_at", "a in {-2,-1,0,1,2}"}};
  leaf.witness = ref.witness;
  leaf.witness["sigma_AB_at_-1"] = std::to_string(sigma_ab);
  leaf.verdict = ref.outcome;
  return leaf;
}

std::vector<std::tuple<Int, Int, int>> green_divisor_oracle(Int lk) {
  std::vector<std::tuple<Int, Int, int>> out;
  const auto& form = IntersectionForm::diag_1_m1();
  for (int eta = 0; eta <= 1; ++eta) {
    Int d = 2 * (-lk - 1 + eta) + 1;  // (2a+1)(2b+1) = d, odd
    Int ad = std::abs(d);
    for (Int d1 = 1; d1 * d1 <= ad; ++d1) {
      if (ad % d1 != 0) continue;
      for (Int u : {d1, ad / d1}) {
        for (Int sgn : {1, -1}) {
          Int e1 = sgn * u, e2 = d / e1;
          Int a = (e1 - 1) / 2, b = (e2 - 1) / 2;
          if (2 * a + 1 != e1 || 2 * b + 1 != e2) continue;  // parity guard
          HomologyClass alpha(a, a + 1);
          HomologyClass beta = eta == 0 ? HomologyClass(b, -(b + 1)) : HomologyClass(b + 1, -b);
          if (pairing(form, alpha, beta) != -lk)
            throw InternalInconsistency("divisor oracle produced an inconsistent solution");
          out.push_back({a, b, eta});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CaseLeaf> rule_green(const KnotRecord& K, Int lk, int eta) {
  require(imod(lk, 2) != 0, "A4a", "lk even");
  require(!in_a4d_set(lk), "A4d", "lk in {+-1,+-3,+-5,+-7,+-11}");
  Int s2 = K.signature_at(RootOfUnity(1, 2));
  require(s2 != 0, "A6", "sigma(1/2) = 0");
  require(K.g4 == 1, "A2", "g4 != 1");
  Int sigma_ab = 2 * s2;
  const std::string cell = "cell:green.eta=" + std::to_string(eta);
  const std::string beta_sym = eta == 0 ? "(b,-(b+1))" : "(b+1,-b)";
  auto base_leaf = [&](const std::string& tag) {
    CaseLeaf leaf;
    leaf.label = cell + ":" + tag;
    leaf.citation = "Lemma: table2 / Thm: signature";
    leaf.classes = {{"alpha", "(a,a+1)"}, {"beta", beta_sym}};
    leaf.parameters = {{"eta", std::to_string(eta)},
                       {"atilde", "a+eta"},
                       {"sum_class", "(a+b+eta,a-b+eta)"},
                       {"sum_square", "4*(a+eta)*b"}};
    return leaf;
  };

  std::vector<CaseLeaf> leaves;
  // |sigma_AB - 2(a+eta)b| <= 2 with |sigma_AB| <= 4 kills |(a+eta)b| >= 4
  {
    CaseLeaf leaf = base_leaf("bound");
    leaf.witness["sigma_AB_bound"] = "4";
    leaf.witness["sigma_AB_at_-1"] = std::to_string(sigma_ab);
    leaf.witness["inequality"] = "|sigma_AB - 2*(a+eta)*b| <= 2";
    leaf.witness["margin"] = "|2*(a+eta)*b| >= 8 > 2 + 4";
    leaf.witness["covers"] = "|(a+eta)*b| >= 4";
    leaf.verdict = (2 * 4 > 2 + 2 * 2 * K.g4) ? Outcome::ruled_out : Outcome::consistent;
    leaves.push_back(leaf);
  }
  // (a+eta)b = 0 makes alpha+beta square to zero; A6 then contradicts
  {
    CaseLeaf leaf = base_leaf("product0");
    auto v = signature_obstruction(sigma_ab, AmbientProfile::cp2bcp2(), HomologyClass(0, 0), 0,
                                   RootOfUnity(1, 2));
    // representative zero-square class; the inequality only sees the square
    leaf.witness = v.witness;
    leaf.witness["covers"] = "(a+eta)*b = 0";
    leaf.witness["sigma_AB_at_-1"] = std::to_string(sigma_ab);
    leaf.verdict = v.outcome;
    leaves.push_back(leaf);
  }
  // the eight residual pairs (products +-1, +-3; +-2 excluded by parity)
  const std::vector<std::pair<Int, Int>> pairs = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1},
                                                  {1, 3}, {1, -3}, {-1, 3}, {-1, -3}};
  auto f_eta = [](int e, Int at, Int b) { return at * b + (at + 1 - 2 * e) * (b + 1); };
  for (auto [at_, b] : pairs) {
    if ((at_ + b) % 2 != 0)
      throw InternalInconsistency("green cell: enumerated pair violates parity");
    Int f = f_eta(eta, at_, b);
    if (f_eta(1, at_, b) != -f_eta(0, -at_, b))
      throw InternalInconsistency("green cell: f_1(a,b) != -f_0(-a,b)");
    CaseLeaf leaf = base_leaf("pair(" + std::to_string(at_) + "," + std::to_string(b) + ")");
    leaf.witness["atilde"] = std::to_string(at_);
    leaf.witness["b"] = std::to_string(b);
    leaf.witness["product"] = std::to_string(at_ * b);
    leaf.witness["f"] = std::to_string(f);
    leaf.witness["required_lk"] = std::to_string(-f);
    leaf.witness["actual_lk"] = std::to_string(lk);
    leaf.witness["in_A4d_set"] = in_a4d_set(-f) ? "true" : "false";
    leaf.witness["swap_partner"] = "(" + std::to_string(b) + "," + std::to_string(at_) + ")";
    if (-f == lk)
      leaf.verdict = Outcome::consistent;  // surviving case; certificate stays open
    else if (in_a4d_set(-f))
      leaf.verdict = Outcome::ruled_out;
    else {
      leaf.verdict = Outcome::consistent;
      leaf.witness["reason"] = "value outside the excluded linking-number set";
    }
    leaves.push_back(leaf);
  }
  // completeness: every divisor solution must fall to the bound or A6 leaves
  for (const auto& [a, b, e] : green_divisor_oracle(lk)) {
    if (e != eta) continue;
    Int prod = (a + eta) * b;
    if (prod != 0 && std::abs(prod) <= 3)
      throw InternalInconsistency("green cell: divisor solution escapes the case list");
  }
  for (auto& leaf : leaves) leaf.witness["divisor_oracle_checked"] = "true";
  return leaves;
}

namespace {

struct BranchEval {
  int sign;
  Int q = 0;
  Int sigma = 0;
  ObstructionVerdict verdict;
  HomologyClass cls;
};

BranchEval sporadic_branch(const KnotRecord& K, Int param, int sign, bool five_case) {
  // three-case: lk = 6j+1, a = -3j, beta = (3,1);  five-case: lk = 10k+1,
  // a = -5k-2, beta = (-1,-3) with the roles of the two components swapped.
  BranchEval out;
  out.sign = sign;
  ExprPtr atom = KnotExpression::atom(K);
  Int lk = five_case ? 10 * param + 1 : 6 * param + 1;
  Int a = five_case ? -5 * param - 2 : -3 * param;
  HomologyClass alpha(a, a + 1);
  HomologyClass beta = five_case ? HomologyClass(-1, -3) : HomologyClass(3, 1);
  Int n = -lk;
  auto discs = five_case ? derived_discs(atom, atom, beta, alpha, n)
                         : derived_discs(atom, atom, alpha, beta, n);
  for (const auto& d : discs) {
    if (d.construction != DerivedDisc::Construction::cable_sum || d.sign_choice != sign) continue;
    out.q = d.parameter_q;
    out.cls = d.cls;
    RootOfUnity w(1, five_case ? 5 : 3);
    out.sigma = eval_signature(d.knot, w);
    out.verdict = signature_obstruction(out.sigma, AmbientProfile::cp2bcp2(), d.cls, 0, w);
    return out;
  }
  throw InternalInconsistency("derived_discs missing a cable branch");
}

}  // namespace

CaseLeaf rule_sporadic_3(const KnotRecord& K, Int lk) {
  require(imod(lk, 2) != 0, "A4a", "lk even");
  require(imod(lk, 3) == 1, "A4e", "lk != 1 mod 3");
  Int s3 = K.signature_at(RootOfUnity(1, 3));
  require(s3 != 2, "A7", "sigma(1/3) = +2");
  if (imod(lk, 6) != 1) throw InternalInconsistency("A4a+A4e must force lk = 1 mod 6");
  Int j = (lk - 1) / 6;
  // symbolic square of alpha+2*beta = (-3j+6, -3j+3)
  Quad sq = affine_square(AffineClass{6, -3, 3, -3});
  if (sq.c2 != 0 || sq.c1 != -18 || sq.c0 != 27)
    throw InternalInconsistency("3-signature cell: (alpha+2beta)^2 != 9(-2j+3)");
  CaseLeaf leaf;
  leaf.label = "sporadic:(3,1)";
  leaf.citation = "Lemma: 3-signatures / Thm: signature";
  leaf.classes = {{"alpha", "(a,a+1)"}, {"beta", "(3,1)"}};
  leaf.parameters = {{"constraint", "-2a+1 = lk"},
                     {"j", std::to_string(j)},
                     {"a", "-3j = " + std::to_string(-3 * j)},
                     {"disc_class", "(-3j+6,-3j+3)"},
                     {"disc_square", "9*(-2j+3)"},
                     {"cable_q", "12j-14+-1"},
                     {"checked_at", "j in {j0-2,...,j0+2}"}};
  int closed = 0;
  for (int sign : {+1, -1}) {
    BranchEval b = sporadic_branch(K, j, sign, false);
    if (b.q != 12 * j - 14 + sign)
      throw InternalInconsistency("3-signature cell: wrong cable parameter");
    if (b.cls != HomologyClass(-3 * j + 6, -3 * j + 3))
      throw InternalInconsistency("3-signature cell: wrong disc class");
    for (Int jj : probes(j)) {
      BranchEval c = sporadic_branch(K, jj, sign, false);
      if (c.verdict.witness.at("lhs") != b.verdict.witness.at("lhs") ||
          c.verdict.outcome != b.verdict.outcome)
        throw InternalInconsistency("3-signature cell: j-dependence fails to cancel");
    }
    // cancelled form: |2 sigma_K(1/3) - 3 - sign| <= 2
    Int direct = std::abs(2 * s3 - 3 - sign);
    if (std::to_string(direct) != b.verdict.witness.at("lhs"))
      throw InternalInconsistency("3-signature cell: cancelled inequality mismatch");
    std::string p = sign > 0 ? "plus" : "minus";
    leaf.witness[p + "_cable_q"] = std::to_string(b.q);
    leaf.witness[p + "_sigma_K"] = std::to_string(b.sigma);
    leaf.witness[p + "_lhs"] = b.verdict.witness.at("lhs");
    leaf.witness[p + "_bound"] = b.verdict.witness.at("bound");
    leaf.witness[p + "_outcome"] = outcome_str(b.verdict.outcome);
    if (b.verdict.outcome == Outcome::ruled_out) ++closed;
  }
  leaf.witness["class"] = class_str(HomologyClass(-3 * j + 6, -3 * j + 3));
  leaf.witness["both_constructions_realized"] = "true";
  leaf.witness["single_branch_closure"] = closed == 1 ? "true" : "false";
  leaf.verdict = closed >= 1 ? Outcome::ruled_out : Outcome::consistent;
  return leaf;
}

CaseLeaf rule_sporadic_5(const KnotRecord& K, Int lk, bool a3_declared) {
  require(imod(lk, 2) != 0, "A4a", "lk even");
  require(imod(lk, 5) == 1, "A4f", "lk != 1 mod 5");
  require(a3_declared, "A3", "component swap not declared");
  Int s5 = K.signature_at(RootOfUnity(1, 5));
  Int s52 = K.signature_at(RootOfUnity(2, 5));
  require(s5 + s52 >= 2, "A8", "sigma(1/5)+sigma(2/5) < +2");
  if (imod(lk, 10) != 1) throw InternalInconsistency("A4a+A4f must force lk = 1 mod 10");
  Int k = (lk - 1) / 10;
  // symbolic square of 2*alpha+beta = (-10k-5, -10k-5)
  Quad sq = affine_square(AffineClass{-5, -10, -5, -10});
  if (sq.c0 != 0 || sq.c1 != 0 || sq.c2 != 0)
    throw InternalInconsistency("5-signature cell: (2alpha+beta)^2 != 0");
  CaseLeaf leaf;
  leaf.label = "sporadic:(-1,-3)";
  leaf.citation = "Lemma: 5-signatures / Thm: signature";
  leaf.classes = {{"alpha", "(a,a+1)"}, {"beta", "(-1,-3)"}};
  leaf.parameters = {{"constraint", "-2a-3 = lk"},
                     {"k", std::to_string(k)},
                     {"a", "-5k-2 = " + std::to_string(-5 * k - 2)},
                     {"disc_class", "(-10k-5,-10k-5)"},
                     {"disc_square", "0"},
                     {"cable_q", "-4+-1"},
                     {"checked_at", "k in {k0-2,...,k0+2}"}};
  int closed = 0;
  for (int sign : {+1, -1}) {
    BranchEval b = sporadic_branch(K, k, sign, true);
    if (b.q != -4 + sign) throw InternalInconsistency("5-signature cell: wrong cable parameter");
    if (b.cls != HomologyClass(-10 * k - 5, -10 * k - 5))
      throw InternalInconsistency("5-signature cell: wrong disc class");
    for (Int kk : probes(k)) {
      BranchEval c = sporadic_branch(K, kk, sign, true);
      if (c.verdict.witness.at("lhs") != b.verdict.witness.at("lhs") ||
          c.verdict.outcome != b.verdict.outcome)
        throw InternalInconsistency("5-signature cell: k-dependence fails to cancel");
    }
    // cancelled form: |sigma_K(1/5) + sigma_K(2/5) + 2| <= 2
    Int direct = std::abs(s5 + s52 + 2);
    if (std::to_string(direct) != b.verdict.witness.at("lhs"))
      throw InternalInconsistency("5-signature cell: cancelled inequality mismatch");
    std::string p = sign > 0 ? "plus" : "minus";
    leaf.witness[p + "_cable_q"] = std::to_string(b.q);
    leaf.witness[p + "_sigma_K"] = std::to_string(b.sigma);
    leaf.witness[p + "_lhs"] = b.verdict.witness.at("lhs");
    leaf.witness[p + "_bound"] = b.verdict.witness.at("bound");
    leaf.witness[p + "_outcome"] = outcome_str(b.verdict.outcome);
    if (b.verdict.outcome == Outcome::ruled_out) ++closed;
  }
  leaf.witness["class"] = class_str(HomologyClass(-10 * k - 5, -10 * k - 5));
  leaf.witness["both_constructions_realized"] = "true";
  leaf.witness["single_branch_closure"] = closed == 1 ? "true" : "false";
  leaf.verdict = closed >= 1 ? Outcome::ruled_out : Outcome::consistent;
  return leaf;
}

namespace {

// decomposition exclusions backing the family/sporadic reduction
std::vector<CaseLeaf> decomposition_leaves(const KnotRecord& K, Int lk) {
  std::vector<CaseLeaf> out;
  const auto& amb = AmbientProfile::cp2bcp2();
  for (int s : {+1, -1}) {
    CaseLeaf leaf;
    leaf.label = s > 0 ? "exclude:(a,a)" : "exclude:(a,-a)";
    leaf.citation = "Lemma: aa / Thm: Arf";
    leaf.classes = {{"shape", s > 0 ? "(a,a)" : "(a,-a)"}};
    leaf.parameters = {{"argument",
                        "odd lk forces a odd, so the class is characteristic with square 0; "
                        "the Arf congruence then forces Arf = 0"}};
    bool all_ruled = imod(lk, 2) != 0;
    for (Int a : {1, 3, -5, 7, -9}) {  // odd representatives
      HomologyClass c(a, s * a);
      if (!is_characteristic(IntersectionForm::diag_1_m1(), c))
        throw InternalInconsistency("(a,+-a) with a odd must be characteristic");
      auto v = arf_obstruction(K.arf, amb, c);
      all_ruled = all_ruled && v.outcome == Outcome::ruled_out;
      if (a == 1) leaf.witness = v.witness;
    }
    leaf.witness["checked_at"] = "a in {1,3,-5,7,-9}";
    leaf.witness["lk_parity"] = std::to_string(imod(lk, 2));
    leaf.verdict = all_ruled ? Outcome::ruled_out : Outcome::consistent;
    out.push_back(leaf);
  }
  for (const std::string& shape : {std::string("(0,+-2)"), std::string("(+-2,0)")}) {
    CaseLeaf leaf;
    leaf.label = "exclude:" + shape;
    leaf.citation = "Lemma: aa";
    leaf.classes = {{"shape", shape}};
    leaf.parameters = {{"argument", "pairing with any class is even, contradicting odd lk"}};
    leaf.witness["lk_mod_2"] = std::to_string(imod(lk, 2));
    leaf.verdict = imod(lk, 2) != 0 ? Outcome::ruled_out : Outcome::consistent;
    out.push_back(leaf);
  }
  for (const std::string& shape : {std::string("(+-3,0)"), std::string("(0,+-3)")}) {
    CaseLeaf leaf;
    leaf.label = "exclude:" + shape;
    leaf.citation = "Lemma: aa2";
    leaf.classes = {{"shape", shape}};
    leaf.parameters = {{"argument", "pairing with any class is divisible by 3"}};
    leaf.witness["lk_mod_3"] = std::to_string(imod(lk, 3));
    leaf.verdict = imod(lk, 3) != 0 ? Outcome::ruled_out : Outcome::consistent;
    out.push_back(leaf);
  }
  {
    CaseLeaf leaf;
    leaf.label = "exclude:sporadic-pair";
    leaf.citation = "Lemma: B1-5";
    leaf.classes = {{"shape", "both classes in {(+-1,+-3),(+-3,+-1)}"}};
    leaf.parameters = {{"argument", "sporadic classes pair evenly, contradicting odd lk"}};
    auto dec = genus1_family_decomposition();
    bool all_even = true;
    for (const auto& s1 : dec.sporadics)
      for (const auto& s2 : dec.sporadics) {
        Int pv = pairing(IntersectionForm::diag_1_m1(), at(s1.cls, 0), at(s2.cls, 0));
        all_even = all_even && imod(pv, 2) == 0;
      }
    if (!all_even) throw InternalInconsistency("sporadic pairings must all be even");
    leaf.witness["pairings_even"] = "true";
    leaf.witness["lk_mod_2"] = std::to_string(imod(lk, 2));
    leaf.verdict = imod(lk, 2) != 0 ? Outcome::ruled_out : Outcome::consistent;
    out.push_back(leaf);
  }
  return out;
}

}  // namespace

Certificate certify_not_slice(const KnotRecord& K, Int lk, const DeclaredFlags& declared) {
  Certificate cert;
  cert.input["knot"] = K.name;
  cert.input["digest"] = K.digest();
  cert.input["lk"] = std::to_string(lk);
  cert.input["twists"] = std::to_string(-lk);
  try {
    cert.assumptions = check_assumptions(K, lk, declared);
  } catch (const MissingSample& e) {
    cert.verdict = Certificate::Verdict::INCONCLUSIVE;
    cert.surviving.push_back(std::string("assumptions: ") + e.what());
    return cert;
  }
  if (!cert.assumptions.all_pass()) {
    cert.verdict = Certificate::Verdict::INCONCLUSIVE;
    for (const auto& f : cert.assumptions.failures()) cert.surviving.push_back("assumption " + f);
    return cert;
  }
  cert.decomposition = decomposition_leaves(K, lk);
  CaseSet cs = generate_cases(lk);
  for (const auto& row : cs.discarded) {
    CaseLeaf leaf;
    leaf.label = "reduction:beta=" + class_str(row.beta) + ":x=" + std::to_string(row.x);
    leaf.citation = "Lemma: reduction";
    leaf.classes = {{"alpha", class_str(row.alpha)}, {"beta", class_str(row.beta)}};
    leaf.parameters = {{"x", std::to_string(row.x)}, {"genus_bound", "2"}};
    leaf.witness["pairing"] = std::to_string(row.pairing_value);
    leaf.witness["required_lk"] = std::to_string(row.required_lk);
    leaf.witness["actual_lk"] = std::to_string(lk);
    leaf.witness["in_A4d_set"] = in_a4d_set(row.required_lk) ? "true" : "false";
    leaf.witness["sum_genus"] =
        std::to_string(ruberman_genus(row.alpha.coords[0] + row.beta.coords[0],
                                      row.alpha.coords[1] + row.beta.coords[1]));
    leaf.verdict = row.required_lk != lk ? Outcome::ruled_out : Outcome::consistent;
    cert.cases.push_back(leaf);
  }
  cert.cases.push_back(rule_grey(K, lk));
  cert.cases.push_back(rule_blue(K, lk));
  for (int eta : {0, 1})
    for (auto& leaf : rule_green(K, lk, eta)) cert.cases.push_back(std::move(leaf));
  cert.cases.push_back(rule_sporadic_3(K, lk));
  cert.cases.push_back(rule_sporadic_5(K, lk, declared.a3_symmetric));
  cert.coverage_ok = verify_coverage(cert);
  bool all_ruled = cert.coverage_ok;
  for (const auto& leaf : cert.decomposition)
    if (leaf.verdict != Outcome::ruled_out) {
      cert.surviving.push_back(leaf.label);
      all_ruled = false;
    }
  for (const auto& leaf : cert.cases)
    if (leaf.verdict != Outcome::ruled_out) {
      cert.surviving.push_back(leaf.label);
      all_ruled = false;
    }
  if (!cert.coverage_ok) cert.surviving.push_back("coverage check failed");
  cert.verdict = all_ruled ? Certificate::Verdict::NOT_SLICE : Certificate::Verdict::INCONCLUSIVE;
  return cert;
}

namespace {

// families as linear relations p*x + q*y = r
struct FamilyRel {
  Int p, q, r;
};

int family_index(FamilyRel f) {
  if (f.p < 0) {
    f.p = -f.p;
    f.q = -f.q;
    f.r = -f.r;
  }
  const FamilyRel fams[4] = {{1, -1, -1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}};
  for (int i = 0; i < 4; ++i)
    if (f.p == fams[i].p && f.q == fams[i].q && f.r == fams[i].r) return i;
  return -1;
}

}  // namespace

bool verify_coverage(const Certificate& cert) {
  auto has_label = [&](const std::string& prefix) {
    for (const auto& leaf : cert.cases)
      if (leaf.label.rfind(prefix, 0) == 0) return true;
    return false;
  };
  auto has_excl = [&](const std::string& label) {
    for (const auto& leaf : cert.decomposition)
      if (leaf.label == label) return true;
    return false;
  };
  // the four coordinate sign maps act simply transitively on the families
  const FamilyRel fams[4] = {{1, -1, -1}, {1, -1, 1}, {1, 1, -1}, {1, 1, 1}};
  const std::pair<Int, Int> group[4] = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
  auto apply = [](const FamilyRel& f, const std::pair<Int, Int>& g) {
    return FamilyRel{f.p * g.first, f.q * g.second, f.r};
  };
  int to_f1[4];
  for (int i = 0; i < 4; ++i) {
    int found = -1;
    for (int gi = 0; gi < 4; ++gi)
      if (family_index(apply(fams[i], group[gi])) == 0) {
        if (found >= 0) return false;
        found = gi;
      }
    if (found < 0) return false;
    to_f1[i] = found;
  }
  // family x family: 16 ordered pairs reduce to the four first-row cells
  const char* cell_label[4] = {"cell:grey", "cell:blue", "cell:green.eta=0", "cell:green.eta=1"};
  int tally[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int col = family_index(apply(fams[j], group[to_f1[i]]));
      if (col < 0) return false;
      ++tally[col];
      if (!has_label(cell_label[col])) return false;
    }
  for (int c = 0; c < 4; ++c)
    if (tally[c] != 4) return false;
  // family x sporadic (sporadic-first pairs fold over by the swap symmetry)
  const std::vector<std::pair<Int, Int>> sporadics = {{1, 3},  {3, 1},  {1, -3},  {-3, 1},
                                                      {-1, 3}, {3, -1}, {-1, -3}, {-3, -1}};
  for (int i = 0; i < 4; ++i)
    for (const auto& s : sporadics) {
      auto g = group[to_f1[i]];
      std::pair<Int, Int> img{s.first * g.first, s.second * g.second};
      std::string cl = "(" + std::to_string(img.first) + "," + std::to_string(img.second) + ")";
      if (img == std::pair<Int, Int>{3, 1} || img == std::pair<Int, Int>{-1, -3}) {
        if (!has_label("sporadic:" + cl)) return false;
      } else {
        if (!has_label("reduction:beta=" + cl)) return false;
      }
    }
  // sporadic x sporadic and the excluded shapes
  if (!has_excl("exclude:sporadic-pair")) return false;
  for (const char* l : {"exclude:(a,a)", "exclude:(a,-a)", "exclude:(0,+-2)", "exclude:(+-2,0)",
                        "exclude:(+-3,0)", "exclude:(0,+-3)"})
    if (!has_excl(l)) return false;
  // bounded partition check: genus <= 1 classes fall into the decomposition
  auto dec = genus1_family_decomposition();
  for (const auto& c : classes_of_genus_at_most(1, 40))
    if (dec.classify(c[0], c[1]) == Genus1Decomposition::Bucket::outside) return false;
  return true;
}

}  // namespace slicecert
