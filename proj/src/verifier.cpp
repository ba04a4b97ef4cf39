#include "slicecert/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "slicecert/exact.hpp"

namespace slicecert {

namespace {

Int imod(Int a, Int b) { return ((a % b) + b) % b; }

bool in_a4d(Int v) {
  Int a = std::abs(v);
  return a == 1 || a == 3 || a == 5 || a == 7 || a == 11;
}

Int to_int(const std::string& s) { return std::stoll(s); }

// "(x,y)" -> class
HomologyClass parse_class(const std::string& s) {
  auto comma = s.find(',');
  if (s.empty() || s.front() != '(' || s.back() != ')' || comma == std::string::npos)
    throw InvalidInput("verifier: malformed class " + s);
  return HomologyClass(to_int(s.substr(1, comma - 1)),
                       to_int(s.substr(comma + 1, s.size() - comma - 2)));
}

const std::string* get(const Witness& w, const std::string& key) {
  auto it = w.find(key);
  return it == w.end() ? nullptr : &it->second;
}

bool check_signature_leaf(const CaseLeaf& leaf, Int sigma, const HomologyClass& cls,
                          const RootOfUnity& w) {
  auto v = signature_obstruction(sigma, AmbientProfile::cp2bcp2(), cls, 0, w);
  const std::string* lhs = get(leaf.witness, "lhs");
  return lhs && *lhs == v.witness.at("lhs") && leaf.verdict == v.outcome;
}

bool check_reduction_leaf(const KnotRecord&, Int lk, const CaseLeaf& leaf) {
  HomologyClass alpha = parse_class(leaf.classes.at("alpha"));
  HomologyClass beta = parse_class(leaf.classes.at("beta"));
  const auto& form = IntersectionForm::diag_1_m1();
  Int pv = pairing(form, alpha, beta);
  if (std::to_string(pv) != leaf.witness.at("pairing")) return false;
  if (to_int(leaf.witness.at("required_lk")) != -pv) return false;
  // alpha must sit in the (a,a+1) family and alpha+beta within genus 2
  if (alpha.coords[1] != alpha.coords[0] + 1) return false;
  if (ruberman_genus(alpha.coords[0] + beta.coords[0], alpha.coords[1] + beta.coords[1]) > 2)
    return false;
  return leaf.verdict == (-pv != lk ? Outcome::ruled_out : Outcome::consistent);
}

// branch arithmetic of the two cable closers, rebuilt from primitives
bool check_sporadic_leaf(const KnotRecord& K, Int lk, const CaseLeaf& leaf, bool five_case) {
  Int mm = five_case ? 10 : 6;
  if (imod(lk, mm) != 1) return false;
  Int param = (lk - 1) / mm;
  if (to_int(leaf.parameters.at(five_case ? "k" : "j")) != param) return false;
  Int a = five_case ? -5 * param - 2 : -3 * param;
  HomologyClass cls = five_case ? HomologyClass(-10 * param - 5, -10 * param - 5)
                                : HomologyClass(-3 * param + 6, -3 * param + 3);
  if (class_str(cls) != leaf.witness.at("class")) return false;
  HomologyClass alpha(a, a + 1);
  HomologyClass beta = five_case ? HomologyClass(-1, -3) : HomologyClass(3, 1);
  const auto& form = IntersectionForm::diag_1_m1();
  if (pairing(form, alpha, beta) != -lk) return false;
  // cls = alpha + 2 beta (roles swapped in the five-case)
  for (int i = 0; i < 2; ++i) {
    Int expect = five_case ? 2 * alpha.coords[i] + beta.coords[i]
                           : alpha.coords[i] + 2 * beta.coords[i];
    if (cls.coords[i] != expect) return false;
  }
  Int sq_other = five_case ? pairing(form, alpha, alpha) : pairing(form, beta, beta);
  Int n = -lk;
  RootOfUnity w(1, five_case ? 5 : 3);
  int closed = 0;
  for (int sign : {+1, -1}) {
    Int q = -2 * sq_other - 2 * n + sign;
    std::string p = sign > 0 ? "plus" : "minus";
    if (to_int(leaf.witness.at(p + "_cable_q")) != q) return false;
    Int companion = K.signature_at(RootOfUnity(2, five_case ? 5 : 3));
    Int pattern = (q == 1 || q == -1) ? 0 : torus2_signature(q, w);
    Int sigma = K.signature_at(w) + companion + pattern;
    if (to_int(leaf.witness.at(p + "_sigma_K")) != sigma) return false;
    Int sq = pairing(form, cls, cls);
    mpq_class middle =
        mpq_of(2 * w.r * (w.m - w.r)) * mpq_of(sq) / mpq_of(w.m * w.m);
    mpq_class lhs = mpq_of(sigma);  // sigma(X) = 0
    lhs -= middle;
    if (lhs < 0) lhs = -lhs;
    if (q_str(lhs) != leaf.witness.at(p + "_lhs")) return false;
    bool ruled = lhs > mpq_class(2);
    if ((leaf.witness.at(p + "_outcome") == "ruled_out") != ruled) return false;
    if (ruled) ++closed;
  }
  return leaf.verdict == (closed >= 1 ? Outcome::ruled_out : Outcome::consistent);
}

bool check_green_pair_leaf(Int lk, const CaseLeaf& leaf) {
  Int at_ = to_int(leaf.witness.at("atilde"));
  Int b = to_int(leaf.witness.at("b"));
  int eta = static_cast<int>(to_int(leaf.parameters.at("eta")));
  if ((at_ + b) % 2 != 0) return false;
  Int prod = at_ * b;
  if (prod == 0 || std::abs(prod) > 3) return false;
  Int f = at_ * b + (at_ + 1 - 2 * eta) * (b + 1);
  if (to_int(leaf.witness.at("f")) != f) return false;
  if (to_int(leaf.witness.at("required_lk")) != -f) return false;
  Outcome expect = (-f == lk) ? Outcome::consistent
                              : (in_a4d(-f) ? Outcome::ruled_out : Outcome::consistent);
  return leaf.verdict == expect;
}

}  // namespace

namespace {

bool replay_impl(const Certificate& cert, const KnotRecord& K);

}  // namespace

bool replay_certificate(const Certificate& cert, const KnotRecord& K) {
  // malformed or tampered certificates must fail the replay, not crash it
  try {
    return replay_impl(cert, K);
  } catch (...) {
    return false;
  }
}

namespace {

bool replay_impl(const Certificate& cert, const KnotRecord& K) {
  if (cert.input.at("knot") != K.name) return false;
  if (cert.input.at("digest") != K.digest()) return false;
  Int lk = to_int(cert.input.at("lk"));
  if (to_int(cert.input.at("twists")) != -lk) return false;

  // assumption layer, re-derived
  bool a4 = imod(lk - 1, 30) == 0 && (lk - 1) / 30 != 0;
  Int s2, s3, s5, s52;
  try {
    s2 = K.signature_at(RootOfUnity(1, 2));
    s3 = K.signature_at(RootOfUnity(1, 3));
    s5 = K.signature_at(RootOfUnity(1, 5));
    s52 = K.signature_at(RootOfUnity(2, 5));
  } catch (const MissingSample&) {
    return cert.verdict == Certificate::Verdict::INCONCLUSIVE;
  }
  bool assumptions_ok = a4 && K.g4 == 1 && K.arf == 1 && s2 != 0 && s3 != 2 && s5 + s52 >= 2;
  for (const auto& [key, item] : cert.assumptions.items)
    if (!item.pass) assumptions_ok = false;
  if (!assumptions_ok) return cert.verdict == Certificate::Verdict::INCONCLUSIVE;

  bool all_ruled = true;
  for (const auto& leaf : cert.decomposition) {
    bool ok;
    if (leaf.label == "exclude:(a,a)" || leaf.label == "exclude:(a,-a)") {
      int s = leaf.label == "exclude:(a,a)" ? 1 : -1;
      ok = imod(lk, 2) != 0;
      for (Int a : {1, 3, -5, 7, -9}) {
        HomologyClass c(a, s * a);
        ok = ok && is_characteristic(IntersectionForm::diag_1_m1(), c);
        auto v = arf_obstruction(K.arf, AmbientProfile::cp2bcp2(), c);
        ok = ok && v.outcome == Outcome::ruled_out;
      }
      if (!ok || leaf.verdict != Outcome::ruled_out) return false;
    } else if (leaf.label == "exclude:(0,+-2)" || leaf.label == "exclude:(+-2,0)" ||
               leaf.label == "exclude:sporadic-pair") {
      ok = imod(lk, 2) != 0;
      if (leaf.label == "exclude:sporadic-pair") {
        std::vector<HomologyClass> spor;
        for (Int u : {1, -1})
          for (Int v : {3, -3}) {
            spor.emplace_back(u, v);
            spor.emplace_back(v, u);
          }
        for (const auto& c1 : spor)
          for (const auto& c2 : spor)
            ok = ok && imod(pairing(IntersectionForm::diag_1_m1(), c1, c2), 2) == 0;
      }
      if (leaf.verdict != Outcome::ruled_out || !ok) return false;
    } else if (leaf.label == "exclude:(+-3,0)" || leaf.label == "exclude:(0,+-3)") {
      if (leaf.verdict != Outcome::ruled_out || imod(lk, 3) == 0) return false;
    } else {
      return false;  // unknown decomposition leaf
    }
    if (leaf.verdict != Outcome::ruled_out) all_ruled = false;
  }

  // reduction completeness: recompute the genus-2 windows independently
  std::map<std::string, std::set<Int>> reduction_seen;
  std::set<std::pair<Int, Int>> green_pairs_seen[2];
  int green_bound_seen[2] = {0, 0}, green_product0_seen[2] = {0, 0};
  for (const auto& leaf : cert.cases) {
    if (leaf.label.rfind("reduction:", 0) == 0) {
      if (!check_reduction_leaf(K, lk, leaf)) return false;
      reduction_seen[leaf.classes.at("beta")].insert(to_int(leaf.parameters.at("x")));
      if (leaf.verdict != Outcome::ruled_out) all_ruled = false;
      continue;
    }
    if (leaf.label == "cell:grey") {
      Int sigma = 2 * s2;
      if (to_int(leaf.witness.at("sigma_AB_at_-1")) != sigma) return false;
      if (!check_signature_leaf(leaf, sigma, HomologyClass(lk - 1, lk + 1), RootOfUnity(1, 2)))
        return false;
    } else if (leaf.label == "cell:blue") {
      Int sigma = 2 * s2;
      for (Int a : {-2, -1, 0, 1, 2})
        if (!check_signature_leaf(leaf, sigma, HomologyClass(2 * a + lk + 1, 2 * a + lk + 1),
                                  RootOfUnity(1, 2)))
          return false;
    } else if (leaf.label.find(":bound") != std::string::npos) {
      if (leaf.verdict != Outcome::ruled_out) return false;  // 8 > 2 + 4
      if (2 * 4 <= 2 + 4 * K.g4) return false;
      ++green_bound_seen[to_int(leaf.parameters.at("eta"))];
    } else if (leaf.label.find(":product0") != std::string::npos) {
      if ((std::abs(2 * s2) > 2) != (leaf.verdict == Outcome::ruled_out)) return false;
      ++green_product0_seen[to_int(leaf.parameters.at("eta"))];
    } else if (leaf.label.find(":pair(") != std::string::npos) {
      if (!check_green_pair_leaf(lk, leaf)) return false;
      green_pairs_seen[to_int(leaf.parameters.at("eta"))].insert(
          {to_int(leaf.witness.at("atilde")), to_int(leaf.witness.at("b"))});
    } else if (leaf.label == "sporadic:(3,1)") {
      if (!check_sporadic_leaf(K, lk, leaf, false)) return false;
    } else if (leaf.label == "sporadic:(-1,-3)") {
      if (!check_sporadic_leaf(K, lk, leaf, true)) return false;
    } else {
      return false;  // unknown case leaf
    }
    if (leaf.verdict != Outcome::ruled_out) all_ruled = false;
  }

  // each discarded sporadic class must list exactly its genus-2 window
  const std::vector<HomologyClass> discarded = {{-1, 3}, {-3, 1}, {1, -3},
                                                {3, -1}, {-3, -1}, {1, 3}};
  for (const auto& beta : discarded) {
    std::set<Int> expect;
    for (Int t = -200; t <= 200; ++t)
      if (ruberman_genus(t + beta.coords[0], t + 1 + beta.coords[1]) <= 2)
        expect.insert(t + beta.coords[0]);
    if (reduction_seen[class_str(beta)] != expect) return false;
  }

  // the finite green enumeration must be complete: every (atilde, b) with
  // product in {+-1, +-3} and even sum, up to the swap symmetry, plus the
  // bound and product-zero strata
  {
    std::set<std::pair<Int, Int>> expect_pairs;
    for (Int at_ : {-3, -1, 1, 3})
      for (Int b : {-3, -1, 1, 3}) {
        Int prod = at_ * b;
        if (prod == 0 || std::abs(prod) > 3 || (at_ + b) % 2 != 0) continue;
        if (std::abs(at_) > std::abs(b)) continue;  // swap representative
        expect_pairs.insert({at_, b});
      }
    for (int eta = 0; eta <= 1; ++eta) {
      if (green_bound_seen[eta] != 1 || green_product0_seen[eta] != 1) return false;
      if (green_pairs_seen[eta] != expect_pairs) return false;
    }
  }

  // green completeness: every odd-factorisation solution falls to a leaf
  for (int eta = 0; eta <= 1; ++eta) {
    Int d = 2 * (-lk - 1 + eta) + 1;
    Int ad = std::abs(d);
    for (Int u = 1; u * u <= ad; ++u) {
      if (ad % u != 0) continue;
      for (Int v : {u, ad / u})
        for (Int sgn : {Int(1), Int(-1)}) {
          Int e1 = sgn * v, e2 = d / e1;
          Int a = (e1 - 1) / 2, b = (e2 - 1) / 2;
          Int prod = (a + eta) * b;
          if (prod != 0 && std::abs(prod) <= 3) return false;  // would escape the leaves
        }
    }
  }

  if (!verify_coverage(cert)) return false;
  bool verdict_ok =
      cert.verdict == (all_ruled && cert.coverage_ok ? Certificate::Verdict::NOT_SLICE
                                                     : Certificate::Verdict::INCONCLUSIVE);
  return verdict_ok;
}

}  // namespace

}  // namespace slicecert
