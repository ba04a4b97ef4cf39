#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "slicecert/certificate_io.hpp"
#include "slicecert/knot_table.hpp"

using namespace slicecert;

namespace {

std::string data_dir() {
  const char* env = std::getenv("SLICECERT_DATA");
  return env ? env : "data";
}

int run_cli(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"slicecert"};
  argv.insert(argv.end(), args);
  return cli_dispatch(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("knot table parsing") {
  std::string table =
      "name,g4,arf,sigmas,seifert\n"
      "10_125,1,1,1/2=2;1/3=0;1/5=0;2/5=2,\n";
  auto res = parse_knot_table(table);
  REQUIRE(res.records.size() == 1);
  CHECK(res.diagnostics.empty());
  const auto& k = res.records[0];
  CHECK(k.name == "10_125");
  CHECK(k.g4 == 1);
  CHECK(k.arf == 1);
  CHECK(k.signature_at(RootOfUnity(1, 2)) == 2);
  CHECK(k.signature_at(RootOfUnity(2, 5)) == 2);
  CHECK_FALSE(k.seifert.has_value());
}

TEST_CASE("knot table rejects bad rows with line numbers") {
  std::string table =
      "name,g4,arf,sigmas,seifert\n"
      "odd_sigma,1,1,1/2=1,\n"
      "good,1,1,1/2=-2;1/3=-2;1/5=-2;2/5=-2,-1,1;0,-1\n"
      "bad_sample,1,1,1/2=2,-1,1;0,-1\n";
  auto res = parse_knot_table(table);
  CHECK(res.records.size() == 1);
  CHECK(res.records[0].name == "good");
  REQUIRE(res.diagnostics.size() == 2);
  CHECK(res.diagnostics[0].find("line 2") == 0);
  CHECK(res.diagnostics[0].find("even") != std::string::npos);
  CHECK(res.diagnostics[1].find("line 4") == 0);
  CHECK(res.diagnostics[1].find("disagrees") != std::string::npos);
}

TEST_CASE("record round trip through the row format") {
  auto res = ingest_knot_table(data_dir() + "/knots.csv");
  CHECK(res.diagnostics.empty());
  REQUIRE(res.records.size() == 3);
  for (const auto& rec : res.records) {
    std::string row = "name,g4,arf,sigmas,seifert\n" + knot_record_to_row(rec) + "\n";
    auto back = parse_knot_table(row);
    REQUIRE(back.records.size() == 1);
    CHECK(back.records[0].name == rec.name);
    CHECK(back.records[0].g4 == rec.g4);
    CHECK(back.records[0].arf == rec.arf);
    CHECK(back.records[0].samples == rec.samples);
    CHECK(back.records[0].seifert.has_value() == rec.seifert.has_value());
    CHECK(back.records[0].digest() == rec.digest());
  }
}

TEST_CASE("seifert matrix text formats") {
  auto a = parse_seifert("-1,1;0,-1");
  auto b = parse_seifert("-1,1\n0,-1\n");
  CHECK(a.entries == b.entries);
  CHECK_THROWS_AS(parse_seifert("1,2;3"), InvalidInput);
}

TEST_CASE("certificate serialization") {
  auto res = ingest_knot_table(data_dir() + "/knots.csv");
  const KnotRecord* k = nullptr;
  for (const auto& r : res.records)
    if (r.name == "10_125") k = &r;
  REQUIRE(k);
  auto cert = certify_not_slice(*k, -29, DeclaredFlags{});
  auto text1 = emit_certificate(cert, CertFormat::json);
  auto text2 = emit_certificate(certify_not_slice(*k, -29, DeclaredFlags{}), CertFormat::json);
  CHECK(text1 == text2);  // byte-identical across runs
  CHECK(text1.find("\"verdict\": \"NOT_SLICE\"") != std::string::npos);
  CHECK(text1.find("Lemma: table1 / Thm: signature") != std::string::npos);

  auto parsed = parse_certificate_json(text1);
  CHECK(parsed.verdict == cert.verdict);
  CHECK(parsed.input == cert.input);
  CHECK(parsed.cases.size() == cert.cases.size());
  for (size_t i = 0; i < parsed.cases.size(); ++i) {
    CHECK(parsed.cases[i].label == cert.cases[i].label);
    CHECK(parsed.cases[i].witness == cert.cases[i].witness);
    CHECK(parsed.cases[i].verdict == cert.cases[i].verdict);
  }
  CHECK(emit_certificate(parsed, CertFormat::json) == text1);

  auto md = emit_certificate(cert, CertFormat::markdown);
  CHECK(md.find("NOT_SLICE") != std::string::npos);
  CHECK(md.find("cell:grey") != std::string::npos);

  // the verdict field only takes the two contract values
  auto inc = certify_not_slice(*k, 1, DeclaredFlags{});
  auto inc_text = emit_certificate(inc, CertFormat::json);
  CHECK(inc_text.find("\"verdict\": \"INCONCLUSIVE\"") != std::string::npos);
}

TEST_CASE("golden certificate bytes") {
  auto res = ingest_knot_table(data_dir() + "/knots.csv");
  const KnotRecord* k = nullptr;
  for (const auto& r : res.records)
    if (r.name == "10_125") k = &r;
  REQUIRE(k);
  auto text = emit_certificate(certify_not_slice(*k, -29, DeclaredFlags{}), CertFormat::json);
  std::ifstream in(data_dir() + "/../tests/golden/cert_10_125_twists29.json", std::ios::binary);
  REQUIRE(in.good());
  std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == golden);
}

TEST_CASE("cli exit codes") {
  std::string knots = data_dir() + "/knots.csv";
  CHECK(run_cli({"certify", "--knots", knots.c_str(), "--knot", "10_125", "--twists", "29",
                 "--out", "/tmp/slicecert_test_cert.json"}) == 0);
  CHECK(run_cli({"certify", "--knots", knots.c_str(), "--knot", "10_125", "--lk", "1",
                 "--out", "/tmp/slicecert_test_cert2.json"}) == 2);
  CHECK(run_cli({"certify", "--knots", knots.c_str(), "--knot", "no_such_knot", "--twists",
                 "29"}) == 1);
  CHECK(run_cli({"certify", "--knots", knots.c_str(), "--knot", "10_125"}) == 1);  // lk/twists
  CHECK(run_cli({"genus", "--a", "1", "--b", "3"}) == 0);
  CHECK(run_cli({"nonsense"}) == 1);
  CHECK(run_cli({"genus", "--bogus-flag", "1"}) == 1);
  CHECK(run_cli({"sig", "--seifert", "/nonexistent", "--r", "1", "--m", "2"}) == 1);

  // written certificate replays byte-identically through the file
  std::ifstream in("/tmp/slicecert_test_cert.json");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto cert = parse_certificate_json(text);
  CHECK(cert.verdict == Certificate::Verdict::NOT_SLICE);
}
