// Acceptance suite: one line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include "slicecert/aux_results.hpp"
#include "slicecert/casework.hpp"
#include "slicecert/certificate_io.hpp"
#include "slicecert/exotica.hpp"
#include "slicecert/genus_map.hpp"
#include "slicecert/knot_table.hpp"
#include "slicecert/verifier.hpp"

using namespace slicecert;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(int idx, const std::string& what, bool pass, double ms, double budget_ms) {
  bool ok = pass && (budget_ms <= 0 || ms <= budget_ms);
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << idx << ": " << what;
  std::ostringstream t;
  t.setf(std::ios::fixed);
  t.precision(1);
  t << ms;
  std::cout << " (" << t.str() << " ms";
  if (budget_ms > 0) std::cout << ", budget " << static_cast<long>(budget_ms) << " ms";
  std::cout << ")\n";
  if (!ok) ++failures;
}

KnotRecord load_10125(const std::string& data_dir) {
  auto res = ingest_knot_table(data_dir + "/knots.csv");
  for (const auto& r : res.records)
    if (r.name == "10_125") return r;
  throw InvalidInput("10_125 missing from the shipped knot table");
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = argc > 1 ? argv[1] : "data";
  KnotRecord k10125 = load_10125(data_dir);

  // 1. end-to-end certificate for the 29-twist link, with the exact rule set
  {
    auto t0 = Clock::now();
    auto cert = certify_not_slice(k10125, -29, DeclaredFlags{});
    bool pass = cert.verdict == Certificate::Verdict::NOT_SLICE;
    std::set<std::string> citations;
    for (const auto& leaf : cert.cases) citations.insert(leaf.citation);
    std::set<std::string> want = {
        "Lemma: table1 / Thm: signature",      "Lemma: table3 / Thm: signature",
        "Lemma: table2 / Thm: signature",      "Lemma: reduction",
        "Lemma: 3-signatures / Thm: signature", "Lemma: 5-signatures / Thm: signature"};
    pass = pass && citations == want && cert.coverage_ok;
    report(1, "certify(10_125, twists=29) = NOT_SLICE with the six closing rules", pass,
           ms_since(t0), 5000);
  }

  // 2. the twist family 30(4m+1)-1, m in {0,1,2,3}, with vanishing Rokhlin
  {
    auto t0 = Clock::now();
    bool pass = true;
    for (Int m = 0; m <= 3; ++m) {
      Int twists = 30 * (4 * m + 1) - 1;
      auto cert = certify_not_slice(k10125, -twists, DeclaredFlags{});
      auto fam = build_family(m);
      pass = pass && cert.verdict == Certificate::Verdict::NOT_SLICE &&
             fam.twist_count == twists && fam.rokhlin == RokhlinStatus::vanishes;
    }
    report(2, "family certificates for twists 29,149,269,389 with vanishing Rokhlin", pass,
           ms_since(t0), 20000);
  }

  // 3. genus-bounded classes in the box |a_i| <= 50 match the closed-form set
  {
    auto t0 = Clock::now();
    auto got = classes_of_genus_at_most(1, 50);
    std::set<std::array<Int, 2>> set_got(got.begin(), got.end());
    std::set<std::array<Int, 2>> want;
    for (Int a = -50; a <= 50; ++a)
      for (Int b = -50; b <= 50; ++b) {
        Int x = std::abs(a), y = std::abs(b);
        Int lo = std::min(x, y), hi = std::max(x, y);
        if (std::abs(x - y) <= 1 || (lo == 0 && hi == 2) || (lo == 0 && hi == 3) ||
            (lo == 1 && hi == 3))
          want.insert({a, b});
      }
    report(3, "classes_of_genus_at_most(1, 50) equals the closed-form set", set_got == want,
           ms_since(t0), 0);
  }

  // 4. table fidelity: green value multisets and the three reduction tables
  {
    auto t0 = Clock::now();
    auto cert = certify_not_slice(k10125, -29, DeclaredFlags{});
    std::multiset<Int> green0, green1;
    std::map<std::string, std::multiset<Int>> reduction;
    for (const auto& leaf : cert.cases) {
      if (leaf.label.find(":pair(") != std::string::npos) {
        Int f = std::stoll(leaf.witness.at("f"));
        (leaf.parameters.at("eta") == "0" ? green0 : green1).insert(f);
      }
      if (leaf.label.rfind("reduction:", 0) == 0)
        reduction[leaf.classes.at("beta")].insert(std::stoll(leaf.witness.at("pairing")));
    }
    bool pass = green0 == std::multiset<Int>{5, -1, -1, 1, 11, -7, -3, 3};
    pass = pass && green1 == std::multiset<Int>{-5, 1, 1, -1, -11, 7, 3, -3};
    pass = pass && reduction["(-1,3)"] == std::multiset<Int>{1, 5};
    pass = pass && reduction["(1,-3)"] == std::multiset<Int>{-1, 3, 7, 11};
    pass = pass && reduction["(-3,-1)"] == std::multiset<Int>{-5, -3, -1, 1};
    report(4, "green multiset {5,-1,-1,1,11,-7,-3,3} and reduction tables {1,5} {-1,3,7,11} "
              "{-5,-3,-1,1}",
           pass, ms_since(t0), 0);
  }

  // 5. signature engine cross-validation, jump points included
  {
    auto t0 = Clock::now();
    int mismatches = 0;
    for (Int q = 3; q <= 15; q += 2) {
      auto v = SeifertMatrix::torus2(q);
      for (Int m = 2; m <= 12; ++m)
        for (Int r = 1; r < m; ++r)
          if (lt_signature_seifert(v, RootOfUnity(r, m)) !=
              torus2_signature(q, RootOfUnity(r, m)))
            ++mismatches;
    }
    report(5, "Seifert engine matches the torus closed form, q in {3..15}, m <= 12",
           mismatches == 0, ms_since(t0), 10000);
  }

  // 6. framing search for lk = -29 is exactly the parity-filtered divisor pairs
  {
    auto t0 = Clock::now();
    auto found = framing_search(-29, 900);
    std::set<std::pair<Int, Int>> got;
    for (const auto& c : found) got.insert({c.fA, c.fB});
    std::set<std::pair<Int, Int>> want;
    for (Int fA = -900; fA <= 900; ++fA) {
      if (fA == 0 || 840 % fA != 0) continue;
      Int fB = 840 / fA;
      if (std::abs(fB) > 900) continue;
      if (fA % 2 != 0 || fB % 2 != 0) want.insert({fA, fB});
    }
    bool pass = got == want;
    for (auto p : {std::pair<Int, Int>{24, 35}, {40, 21}, {120, 7}, {840, 1}})
      pass = pass && got.count(p) == 1;
    report(6, "framings(lk=-29, bound=900) = divisor pairs of 840 incl. (24,35),(40,21),(120,7),"
              "(840,1)",
           pass, ms_since(t0), 0);
  }

  // 7. the #7 T(2,3) results
  {
    auto t0 = Clock::now();
    auto cert = verify_c7t23_not_slice_in_cp2s();
    bool f26 = false;
    for (const auto& leaf : cert.leaves)
      if (leaf.label == "kprt:d=6:m=2") f26 = leaf.witness.at("f_m_d") == "17";
    auto three = three_component_verdict(KnotTopProfile::c7t23());
    bool pass = cert.all_closed && f26 && replay_c7t23(cert) && three.obstructed;
    report(7, "#7 T(2,3): CP2/bCP2 certificate closes (f_2(6)=17) and the 3-component link is "
              "obstructed",
           pass, ms_since(t0), 1000);
  }

  // 8. property suites
  {
    auto t0 = Clock::now();
    bool pass = true;
    // trichotomy, exhaustive over the 16 residue pairs
    for (int a = 0; a < 2 && pass; ++a)
      for (int a2 = 0; a2 < 2 && pass; ++a2)
        for (int b = 0; b < 2 && pass; ++b)
          for (int b2 = 0; b2 < 2 && pass; ++b2) {
            auto t = my_trichotomy({a, a2}, {b, b2});
            if ((a * b2 + a2 * b) % 2 != 0)
              pass = t == Trichotomy::violates_hypothesis;
            else
              pass = t != Trichotomy::violates_hypothesis;
          }
    // van der Blij over |coords| <= 9 on both stock forms
    for (const AmbientProfile* amb : {&AmbientProfile::cp2bcp2(), &AmbientProfile::s2xs2()})
      for (Int a = -9; a <= 9 && pass; ++a)
        for (Int b = -9; b <= 9 && pass; ++b) {
          HomologyClass c(a, b);
          if (!is_characteristic(amb->form, c)) continue;
          try {
            arf_obstruction(0, *amb, c);
          } catch (const Error&) {
            pass = false;
          }
        }
    // certificate replay through the independent verifier
    auto cert = certify_not_slice(k10125, -29, DeclaredFlags{});
    pass = pass && replay_certificate(cert, k10125);
    // the symbolic-constancy five-point checks run inside every rule; they
    // throw on failure, so a clean pass here exercises them all
    try {
      rule_grey(k10125, -29);
      rule_blue(k10125, -29);
      rule_green(k10125, -29, 0);
      rule_green(k10125, -29, 1);
      rule_sporadic_3(k10125, -29);
      rule_sporadic_5(k10125, -29, true);
    } catch (const Error&) {
      pass = false;
    }
    report(8, "property suites: trichotomy, van der Blij, replay, 5-point constancy checks",
           pass, ms_since(t0), 0);
  }

  // 9. negative controls: twist counts 1, 3, 31 stay INCONCLUSIVE
  {
    auto t0 = Clock::now();
    bool pass = true;
    for (Int twists : {1, 3, 31}) {
      auto cert = certify_not_slice(k10125, -twists, DeclaredFlags{});
      pass = pass && cert.verdict == Certificate::Verdict::INCONCLUSIVE;
    }
    // the same linking numbers as written also stay inconclusive
    for (Int lk : {1, 3}) {
      auto cert = certify_not_slice(k10125, lk, DeclaredFlags{});
      pass = pass && cert.verdict == Certificate::Verdict::INCONCLUSIVE;
    }
    // and the +31 family control shows the non-vanishing Rokhlin obstruction
    pass = pass && rokhlin_vanishes(31) == RokhlinStatus::nonvanishing;
    report(9, "negative controls: twists in {1,3,31} INCONCLUSIVE; Rokhlin(31) nonvanishing",
           pass, ms_since(t0), 0);
  }

  std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                              : "acceptance: FAILURES present\n");
  return failures == 0 ? 0 : 1;
}
