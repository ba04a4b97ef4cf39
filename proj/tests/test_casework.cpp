#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "slicecert/casework.hpp"
#include "slicecert/verifier.hpp"

using namespace slicecert;

namespace {

KnotRecord rec_10125() {
  return KnotRecord::make("10_125", 1, 1,
                          {{RootOfUnity(1, 2), 2},
                           {RootOfUnity(1, 3), 0},
                           {RootOfUnity(1, 5), 0},
                           {RootOfUnity(2, 5), 2}},
                          std::nullopt);
}

KnotRecord rec_with(Int g4, int arf, Int s2, Int s3, Int s5, Int s52) {
  return KnotRecord::make("synthetic", g4, arf,
                          {{RootOfUnity(1, 2), s2},
                           {RootOfUnity(1, 3), s3},
                           {RootOfUnity(1, 5), s5},
                           {RootOfUnity(2, 5), s52}},
                          std::nullopt);
}

std::multiset<Int> green_f_values(const std::vector<CaseLeaf>& leaves) {
  std::multiset<Int> out;
  for (const auto& leaf : leaves)
    if (leaf.label.find(":pair(") != std::string::npos)
      out.insert(std::stoll(leaf.witness.at("f")));
  return out;
}

}  // namespace

TEST_CASE("assumption report") {
  auto rep = check_assumptions(rec_10125(), -29, DeclaredFlags{});
  CHECK(rep.all_pass());
  CHECK(rep.ell == -1);
  CHECK(rep.items.at("A4").detail == "lk = 30*(-1)+1");

  auto fail4 = check_assumptions(rec_10125(), 1, DeclaredFlags{});
  CHECK_FALSE(fail4.items.at("A4").pass);

  auto fail7 = check_assumptions(rec_with(1, 1, 2, 2, 0, 2), -29, DeclaredFlags{});
  CHECK_FALSE(fail7.items.at("A7").pass);

  auto sparse = KnotRecord::make("sparse", 1, 1, {{RootOfUnity(1, 2), 2}}, std::nullopt);
  CHECK_THROWS_AS(check_assumptions(sparse, -29, DeclaredFlags{}), MissingSample);

  DeclaredFlags no_sym;
  no_sym.a3_symmetric = false;
  CHECK_FALSE(check_assumptions(rec_10125(), -29, no_sym).items.at("A3").pass);
}

TEST_CASE("case generation") {
  auto cs = generate_cases(-29);
  CHECK(cs.live.size() == 6);
  std::map<std::string, std::set<Int>> discarded_values;
  for (const auto& row : cs.discarded)
    discarded_values[class_str(row.beta)].insert(row.pairing_value);
  CHECK(discarded_values.at("(-1,3)") == std::set<Int>{1, 5});
  CHECK(discarded_values.at("(1,-3)") == std::set<Int>{-1, 3, 7, 11});
  CHECK(discarded_values.at("(-3,-1)") == std::set<Int>{-5, -3, -1, 1});
  // partner classes carry the negated value sets
  CHECK(discarded_values.at("(-3,1)") == std::set<Int>{-1, -5});
  CHECK(discarded_values.at("(3,-1)") == std::set<Int>{1, -3, -7, -11});
  CHECK(discarded_values.at("(1,3)") == std::set<Int>{5, 3, 1, -1});
  bool grey_found = false;
  for (const auto& c : cs.live)
    if (c.cell == "grey") {
      grey_found = true;
      CHECK(c.constraint == "a+b+1 = lk");
    }
  CHECK(grey_found);
  CHECK_THROWS_AS(generate_cases(-28), PrerequisiteError);  // even
  CHECK_THROWS_AS(generate_cases(-27), PrerequisiteError);  // divisible by 3
}

TEST_CASE("grey cell rule") {
  auto leaf = rule_grey(rec_10125(), -29);
  CHECK(leaf.verdict == Outcome::ruled_out);
  CHECK(leaf.citation == "Lemma: table1 / Thm: signature");
  CHECK(leaf.witness.at("lhs") == "54");  // |2*2 + 2*(-29)|
  CHECK(leaf.witness.at("class") == "(-30,-28)");
  CHECK_THROWS_AS(rule_grey(rec_with(2, 1, -4, 0, 0, 2), 3), PrerequisiteError);   // A4c
  CHECK_THROWS_AS(rule_grey(rec_10125(), -28), PrerequisiteError);                 // A4a
  CHECK_THROWS_AS(rule_grey(rec_with(2, 1, 2, 0, 0, 2), -29), PrerequisiteError);  // A2
}

TEST_CASE("blue cell rule") {
  auto leaf = rule_blue(rec_10125(), -29);
  CHECK(leaf.verdict == Outcome::ruled_out);
  CHECK(leaf.witness.at("lhs") == "4");
  // sigma = 0 violates the prerequisite (certification then stays open)
  CHECK_THROWS_AS(rule_blue(rec_with(1, 1, 0, 0, 0, 2), -29), PrerequisiteError);
  // higher-genus knot with large signature still closes the blue cell
  auto big = rule_blue(rec_with(3, 1, -6, 0, 0, 2), -29);
  CHECK(big.verdict == Outcome::ruled_out);
  CHECK(big.witness.at("lhs") == "12");
}

TEST_CASE("green cells") {
  auto leaves0 = rule_green(rec_10125(), -29, 0);
  CHECK(green_f_values(leaves0) == std::multiset<Int>{5, -1, -1, 1, 11, -7, -3, 3});
  auto leaves1 = rule_green(rec_10125(), -29, 1);
  CHECK(green_f_values(leaves1) == std::multiset<Int>{-5, 1, 1, -1, -11, 7, 3, -3});
  for (const auto& leaves : {leaves0, leaves1})
    for (const auto& leaf : leaves) CHECK(leaf.verdict == Outcome::ruled_out);

  // f_1(a,b) = -f_0(-a,b) across a window
  auto f = [](int eta, Int at, Int b) { return at * b + (at + 1 - 2 * eta) * (b + 1); };
  for (Int at = -10; at <= 10; ++at)
    for (Int b = -10; b <= 10; ++b) CHECK(f(1, at, b) == -f(0, -at, b));

  CHECK_THROWS_AS(rule_green(rec_10125(), -3, 0), PrerequisiteError);  // A4d
}

TEST_CASE("green divisor oracle") {
  auto sols = green_divisor_oracle(-29);
  std::set<std::pair<Int, Int>> eta0;
  for (const auto& [a, b, e] : sols)
    if (e == 0) eta0.insert({a, b});
  // (2a+1)(2b+1) = 57
  std::set<std::pair<Int, Int>> want = {{0, 28}, {1, 9}, {9, 1}, {28, 0},
                                        {-1, -29}, {-2, -10}, {-10, -2}, {-29, -1}};
  CHECK(eta0 == want);
  // every returned solution satisfies the pairing exactly (validated inside);
  // none of them defeats the signature bound + A6 filter
  for (const auto& [a, b, e] : sols) {
    Int prod = (a + e) * b;
    CHECK((prod == 0 || std::abs(prod) > 3));
  }
  // degenerate factorisation 2(-lk-1)+1 = 1 at lk = -1
  auto degen = green_divisor_oracle(-1);
  bool has_zero_branch = false;
  for (const auto& [a, b, e] : degen) has_zero_branch = has_zero_branch || (a + e) * b == 0;
  CHECK(has_zero_branch);
}

TEST_CASE("3-signature closer") {
  auto leaf = rule_sporadic_3(rec_10125(), -29);
  CHECK(leaf.verdict == Outcome::ruled_out);
  // j = -5: cable parameters -73 and -75
  CHECK(leaf.witness.at("plus_cable_q") == "-73");
  CHECK(leaf.witness.at("minus_cable_q") == "-75");
  CHECK(leaf.witness.at("plus_lhs") == "4");
  CHECK(leaf.witness.at("minus_lhs") == "2");
  CHECK(leaf.witness.at("plus_outcome") == "ruled_out");
  CHECK(leaf.witness.at("minus_outcome") == "consistent");
  CHECK(leaf.witness.at("single_branch_closure") == "true");

  // sweep of sigma(1/3): the case closes exactly when sigma != +2
  for (Int s3 : {-4, -2, 0, 4}) {
    auto r = rule_sporadic_3(rec_with(2, 1, 2, s3, 0, 2), -29);
    CHECK(r.verdict == Outcome::ruled_out);
    bool both = r.witness.at("plus_outcome") == "ruled_out" &&
                r.witness.at("minus_outcome") == "ruled_out";
    CHECK(both == (s3 != 0));  // only sigma = 0 leaves the minus branch open
  }
  CHECK_THROWS_AS(rule_sporadic_3(rec_with(1, 1, 2, 2, 0, 2), -29), PrerequisiteError);  // A7
  CHECK_THROWS_AS(rule_sporadic_3(rec_10125(), -31), PrerequisiteError);                 // A4e
}

TEST_CASE("5-signature closer") {
  auto leaf = rule_sporadic_5(rec_10125(), -29, true);
  CHECK(leaf.verdict == Outcome::ruled_out);
  CHECK(leaf.witness.at("plus_cable_q") == "-3");
  CHECK(leaf.witness.at("minus_cable_q") == "-5");
  CHECK(leaf.witness.at("plus_lhs") == "4");
  CHECK(leaf.witness.at("minus_lhs") == "4");
  CHECK(leaf.witness.at("single_branch_closure") == "false");
  CHECK_THROWS_AS(rule_sporadic_5(rec_with(1, 1, 2, 0, 0, 0), -29, true),
                  PrerequisiteError);                                       // A8 boundary
  CHECK_THROWS_AS(rule_sporadic_5(rec_10125(), -29, false), PrerequisiteError);  // A3
  CHECK_THROWS_AS(rule_sporadic_5(rec_10125(), -33, true), PrerequisiteError);   // A4f
}

TEST_CASE("full certification") {
  auto cert = certify_not_slice(rec_10125(), -29, DeclaredFlags{});
  CHECK(cert.verdict == Certificate::Verdict::NOT_SLICE);
  CHECK(cert.coverage_ok);
  CHECK(cert.surviving.empty());
  CHECK(replay_certificate(cert, rec_10125()));

  // the case-analysis leaves cite exactly the six closing rules
  std::set<std::string> citations;
  for (const auto& leaf : cert.cases) citations.insert(leaf.citation);
  std::set<std::string> want = {
      "Lemma: table1 / Thm: signature", "Lemma: table3 / Thm: signature",
      "Lemma: table2 / Thm: signature", "Lemma: reduction",
      "Lemma: 3-signatures / Thm: signature", "Lemma: 5-signatures / Thm: signature"};
  CHECK(citations == want);

  // family members
  for (Int m : {0, 1, 2}) {
    Int lk = -(30 * (4 * m + 1) - 1);
    auto fam = certify_not_slice(rec_10125(), lk, DeclaredFlags{});
    CHECK(fam.verdict == Certificate::Verdict::NOT_SLICE);
    CHECK(replay_certificate(fam, rec_10125()));
  }

  // unknot record: assumption gate fails at A2 (and A5, A6, A8)
  auto unknot = KnotRecord::make("unknot", 0, 0,
                                 {{RootOfUnity(1, 2), 0},
                                  {RootOfUnity(1, 3), 0},
                                  {RootOfUnity(1, 5), 0},
                                  {RootOfUnity(2, 5), 0}},
                                 std::nullopt);
  auto inc = certify_not_slice(unknot, -29, DeclaredFlags{});
  CHECK(inc.verdict == Certificate::Verdict::INCONCLUSIVE);
  bool a2_listed = false;
  for (const auto& s : inc.surviving) a2_listed = a2_listed || s.find("A2") != std::string::npos;
  CHECK(a2_listed);

  // negative controls (box twist counts 1, 3, 31)
  for (Int twists : {1, 3, 31}) {
    auto neg = certify_not_slice(rec_10125(), -twists, DeclaredFlags{});
    CHECK(neg.verdict == Certificate::Verdict::INCONCLUSIVE);
    CHECK(replay_certificate(neg, rec_10125()));
  }
  // monotonicity: linking numbers in the excluded set never certify
  for (Int lk : {1, -1, 3, -3, 5, 7, 11}) {
    auto neg = certify_not_slice(rec_10125(), lk, DeclaredFlags{});
    CHECK(neg.verdict == Certificate::Verdict::INCONCLUSIVE);
  }
}

TEST_CASE("certificate tampering is caught") {
  auto cert = certify_not_slice(rec_10125(), -29, DeclaredFlags{});
  REQUIRE(replay_certificate(cert, rec_10125()));
  {
    auto bad = cert;
    bad.cases.pop_back();  // drop a closing rule
    CHECK_FALSE(replay_certificate(bad, rec_10125()));
  }
  {
    auto bad = cert;
    for (auto& leaf : bad.cases)
      if (leaf.label == "cell:grey") leaf.witness["lhs"] = "2";
    CHECK_FALSE(replay_certificate(bad, rec_10125()));
  }
  {
    auto bad = cert;
    bad.input["lk"] = "-59";
    CHECK_FALSE(replay_certificate(bad, rec_10125()));
  }
  {
    auto bad = cert;  // dropping a single green pair leaf must be caught
    bad.cases.erase(std::remove_if(bad.cases.begin(), bad.cases.end(),
                                   [](const CaseLeaf& l) {
                                     return l.label == "cell:green.eta=0:pair(1,3)";
                                   }),
                    bad.cases.end());
    CHECK_FALSE(replay_certificate(bad, rec_10125()));
  }
  {
    auto bad = cert;  // the big-product stratum is load-bearing too
    bad.cases.erase(std::remove_if(bad.cases.begin(), bad.cases.end(),
                                   [](const CaseLeaf& l) {
                                     return l.label == "cell:green.eta=1:bound";
                                   }),
                    bad.cases.end());
    CHECK_FALSE(replay_certificate(bad, rec_10125()));
  }
  {
    auto bad = cert;
    for (auto& leaf : bad.cases)
      if (leaf.label.rfind("reduction:beta=(1,3)", 0) == 0) leaf.parameters["x"] = "7";
    CHECK_FALSE(replay_certificate(bad, rec_10125()));
  }
}

TEST_CASE("coverage check is structural") {
  auto cert = certify_not_slice(rec_10125(), -29, DeclaredFlags{});
  CHECK(verify_coverage(cert));
  auto bad = cert;
  bad.cases.erase(std::remove_if(bad.cases.begin(), bad.cases.end(),
                                 [](const CaseLeaf& l) { return l.label == "sporadic:(3,1)"; }),
                  bad.cases.end());
  CHECK_FALSE(verify_coverage(bad));
  auto bad2 = cert;
  bad2.decomposition.clear();
  CHECK_FALSE(verify_coverage(bad2));
}
