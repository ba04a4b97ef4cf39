#include "slicecert/certificate_io.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "slicecert/exotica.hpp"
#include "slicecert/genus_map.hpp"
#include "slicecert/knot_table.hpp"
#include "slicecert/verifier.hpp"

namespace slicecert {

namespace {

using nlohmann::json;

json leaf_to_json(const CaseLeaf& leaf) {
  json j;
  j["label"] = leaf.label;
  j["citation"] = leaf.citation;
  j["classes"] = leaf.classes;
  j["parameters"] = leaf.parameters;
  j["verdict"] = outcome_str(leaf.verdict);
  j["witness"] = leaf.witness;
  return j;
}

CaseLeaf leaf_from_json(const json& j) {
  CaseLeaf leaf;
  leaf.label = j.at("label").get<std::string>();
  leaf.citation = j.at("citation").get<std::string>();
  leaf.classes = j.at("classes").get<std::map<std::string, std::string>>();
  leaf.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  std::string v = j.at("verdict").get<std::string>();
  leaf.verdict = v == "ruled_out"     ? Outcome::ruled_out
                 : v == "consistent" ? Outcome::consistent
                                     : Outcome::inapplicable;
  leaf.witness = j.at("witness").get<Witness>();
  return leaf;
}

std::string render_markdown(const Certificate& cert) {
  std::ostringstream os;
  os << "# Non-sliceness certificate\n\n";
  os << "- knot: " << cert.input.at("knot") << "\n";
  os << "- lk: " << cert.input.at("lk") << " (twist box: " << cert.input.at("twists") << ")\n";
  os << "- verdict: **" << verdict_str(cert.verdict) << "**\n\n";
  os << "## Assumptions\n\n";
  for (const auto& [key, item] : cert.assumptions.items)
    os << "- " << key << ": " << (item.pass ? "pass" : "FAIL") << " (" << item.detail << ")\n";
  if (!cert.decomposition.empty()) {
    os << "\n## Excluded class shapes\n\n";
    for (const auto& leaf : cert.decomposition)
      os << "- `" << leaf.label << "` [" << leaf.citation << "] " << outcome_str(leaf.verdict)
         << "\n";
  }
  if (!cert.cases.empty()) {
    os << "\n## Case analysis\n\n";
    for (const auto& leaf : cert.cases) {
      os << "- `" << leaf.label << "` [" << leaf.citation << "] " << outcome_str(leaf.verdict);
      if (leaf.witness.count("lhs"))
        os << " (lhs " << leaf.witness.at("lhs") << " vs bound " << leaf.witness.at("bound")
           << ")";
      if (leaf.witness.count("required_lk"))
        os << " (needs lk = " << leaf.witness.at("required_lk") << ")";
      os << "\n";
    }
  }
  if (!cert.surviving.empty()) {
    os << "\n## Surviving\n\n";
    for (const auto& s : cert.surviving) os << "- " << s << "\n";
  }
  return os.str();
}

}  // namespace

std::string emit_certificate(const Certificate& cert, CertFormat format) {
  if (format == CertFormat::markdown) return render_markdown(cert);
  json j;
  j["schema"] = "v1";
  j["input"] = cert.input;
  json items;
  for (const auto& [key, item] : cert.assumptions.items)
    items[key] = {{"pass", item.pass}, {"detail", item.detail}};
  j["assumptions"] = {{"items", items}, {"ell", std::to_string(cert.assumptions.ell)}};
  json dec = json::array();
  for (const auto& leaf : cert.decomposition) dec.push_back(leaf_to_json(leaf));
  j["decomposition"] = dec;
  json cases = json::array();
  for (const auto& leaf : cert.cases) cases.push_back(leaf_to_json(leaf));
  j["cases"] = cases;
  j["coverage_ok"] = cert.coverage_ok;
  j["surviving"] = cert.surviving;
  j["verdict"] = verdict_str(cert.verdict);
  return j.dump(2) + "\n";
}

Certificate parse_certificate_json(const std::string& text) {
  json j = json::parse(text);
  Certificate cert;
  cert.input = j.at("input").get<std::map<std::string, std::string>>();
  for (const auto& [key, val] : j.at("assumptions").at("items").items())
    cert.assumptions.items[key] = {val.at("pass").get<bool>(),
                                   val.at("detail").get<std::string>()};
  cert.assumptions.ell = std::stoll(j.at("assumptions").at("ell").get<std::string>());
  for (const auto& l : j.at("decomposition")) cert.decomposition.push_back(leaf_from_json(l));
  for (const auto& l : j.at("cases")) cert.cases.push_back(leaf_from_json(l));
  cert.coverage_ok = j.at("coverage_ok").get<bool>();
  cert.surviving = j.at("surviving").get<std::vector<std::string>>();
  cert.verdict = j.at("verdict").get<std::string>() == "NOT_SLICE"
                     ? Certificate::Verdict::NOT_SLICE
                     : Certificate::Verdict::INCONCLUSIVE;
  return cert;
}

std::string emit_aux_certificate(const AuxCertificate& cert, CertFormat format) {
  if (format == CertFormat::markdown) {
    std::ostringstream os;
    os << "# Non-sliceness certificate: " << cert.subject << " in CP2 and bCP2\n\n";
    os << "- closed: " << (cert.all_closed ? "yes" : "NO") << "\n\n";
    for (const auto& leaf : cert.leaves)
      os << "- `" << leaf.label << "` [" << leaf.citation << "] " << outcome_str(leaf.verdict)
         << "\n";
    return os.str();
  }
  json j;
  j["schema"] = "v1";
  j["subject"] = cert.subject;
  j["all_closed"] = cert.all_closed;
  json leaves = json::array();
  for (const auto& leaf : cert.leaves) leaves.push_back(leaf_to_json(leaf));
  j["leaves"] = leaves;
  return j.dump(2) + "\n";
}

namespace {

int run_certify(const std::string& table_path, const std::string& name, std::optional<Int> lk_opt,
                std::optional<Int> twists_opt, const std::string& out_path,
                const std::string& format) {
  auto ingest = ingest_knot_table(table_path);
  for (const auto& d : ingest.diagnostics) std::cerr << "knot table: " << d << "\n";
  const KnotRecord* rec = nullptr;
  for (const auto& r : ingest.records)
    if (r.name == name) rec = &r;
  if (!rec) {
    std::cerr << "error: knot '" << name << "' not found in " << table_path << "\n";
    return 1;
  }
  Int lk = lk_opt ? *lk_opt : -*twists_opt;
  Certificate cert = certify_not_slice(*rec, lk, DeclaredFlags{});
  if (!replay_certificate(cert, *rec)) {
    std::cerr << "error: certificate failed independent replay\n";
    return 1;
  }
  std::string text =
      emit_certificate(cert, format == "md" ? CertFormat::markdown : CertFormat::json);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << text;
  }
  std::cerr << verdict_str(cert.verdict) << "\n";
  return cert.verdict == Certificate::Verdict::NOT_SLICE ? 0 : 2;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
  CLI::App app{"exact-arithmetic slice obstruction engine for 2-component links in CP2#bCP2"};
  app.require_subcommand(1);

  // certify
  auto* certify = app.add_subcommand("certify", "certify non-sliceness of the symmetric link");
  std::string table_path, knot_name, out_path, format = "json";
  Int lk_val = 0, twists_val = 0;
  bool has_lk = false, has_twists = false;
  certify->add_option("--knots", table_path, "knot table CSV")->required();
  certify->add_option("--knot", knot_name, "knot name (A = B = K)")->required();
  auto* lk_o = certify->add_option("--lk", lk_val, "linking number of the two components");
  auto* tw_o = certify->add_option("--twists", twists_val, "full twists in the box (n = -lk)");
  certify->add_option("--out", out_path, "output file (default stdout)");
  certify->add_option("--format", format, "json|md")->check(CLI::IsMember({"json", "md"}));

  // genus
  auto* genus = app.add_subcommand("genus", "smooth genus function value on CP2#bCP2");
  Int ga = 0, gb = 0;
  genus->add_option("--a", ga, "first coordinate")->required();
  genus->add_option("--b", gb, "second coordinate")->required();

  // classes
  auto* classes = app.add_subcommand("classes", "classes of genus at most g in a box");
  Int cg = 0, cbound = 0;
  classes->add_option("--genus", cg, "genus bound")->required();
  classes->add_option("--bound", cbound, "coefficient box bound")->required()
      ->check(CLI::Range(Int(0), Int(2000)));

  // framings
  auto* framings = app.add_subcommand("framings", "framing pairs with det Q = -1");
  Int flk = 0, fbound = 0;
  bool allow_indef = false;
  framings->add_option("--lk", flk, "linking number")->required();
  framings->add_option("--bound", fbound, "framing coefficient bound")->required()
      ->check(CLI::Range(Int(1), Int(10000000)));
  framings->add_flag("--allow-indefinite", allow_indef, "emit det Q < 0 candidates instead");

  // family
  auto* family = app.add_subcommand("family", "surgery family member with vanishing Rokhlin");
  Int fm = 0;
  family->add_option("--m", fm, "family index")->required()
      ->check(CLI::Range(Int(-1000000), Int(1000000)));

  // kprt
  auto* kprt = app.add_subcommand("kprt", "#7 T(2,3) certificates and 3-component verdict");

  // realize
  auto* realize = app.add_subcommand("realize", "pairing-realization matrix for 3 classes");
  Int ra = 0, rb = 0, rc = 0;
  std::string target;
  realize->add_option("--a", ra)->required()->check(CLI::Range(Int(-1000000), Int(1000000)));
  realize->add_option("--b", rb)->required()->check(CLI::Range(Int(-1000000), Int(1000000)));
  realize->add_option("--c", rc)->required()->check(CLI::Range(Int(-1000000), Int(1000000)));
  realize->add_option("--target", target, "s2xs2|cp2bcp2")
      ->required()
      ->check(CLI::IsMember({"s2xs2", "cp2bcp2"}));

  // sig
  auto* sig = app.add_subcommand("sig", "Levine-Tristram signature from a Seifert matrix");
  std::string seifert_path;
  Int sr = 0, sm = 0;
  sig->add_option("--seifert", seifert_path, "matrix file: rows 'a,b' per line or ';'-separated")
      ->required();
  sig->add_option("--r", sr, "numerator")->required();
  sig->add_option("--m", sm, "denominator")->required()->check(CLI::Range(Int(2), Int(1000000)));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*certify) {
      has_lk = lk_o->count() > 0;
      has_twists = tw_o->count() > 0;
      if (has_lk == has_twists) {
        std::cerr << "error: give exactly one of --lk and --twists\n";
        return 1;
      }
      if (std::abs(has_lk ? lk_val : twists_val) > 100000000) {
        std::cerr << "error: |lk| capped at 1e8\n";
        return 1;
      }
      return run_certify(table_path, knot_name, has_lk ? std::optional<Int>(lk_val) : std::nullopt,
                         has_twists ? std::optional<Int>(twists_val) : std::nullopt, out_path,
                         format);
    }
    if (*genus) {
      std::cout << ruberman_genus(ga, gb) << "\n";
      return 0;
    }
    if (*classes) {
      for (const auto& c : classes_of_genus_at_most(cg, cbound))
        std::cout << "(" << c[0] << "," << c[1] << ")\n";
      return 0;
    }
    if (*framings) {
      auto found = allow_indef ? framing_search_indefinite(flk, fbound)
                               : framing_search(flk, fbound);
      for (const auto& c : found) {
        std::cout << c.fA << " " << c.fB << "  detQ=" << c.detQ
                  << (c.negative ? "  [negative]" : "") << "  rokhlin=";
        if (c.rokhlin_vanishes)
          std::cout << (*c.rokhlin_vanishes ? "vanishes" : "nonvanishing");
        else
          std::cout << "out_of_family";
        std::cout << "\n";
      }
      return 0;
    }
    if (*family) {
      auto d = build_family(fm);
      std::cout << "m=" << d.m << " twists=" << d.twist_count << " lk=" << d.lk
                << " fA=" << d.fA << " fB=" << d.fB << " detQ=" << d.detQ
                << " rokhlin=" << rokhlin_str(d.rokhlin) << "\n";
      return 0;
    }
    if (*kprt) {
      auto cert = verify_c7t23_not_slice_in_cp2s();
      bool replay = replay_c7t23(cert);
      auto three = three_component_verdict(KnotTopProfile::c7t23());
      std::cout << emit_aux_certificate(cert, CertFormat::json);
      std::cout << "replay: " << (replay ? "ok" : "FAILED") << "\n";
      std::cout << "three_component: " << (three.obstructed ? "obstructed" : "not_obstructed")
                << " (" << three.reason << ")\n";
      return cert.all_closed && replay && three.obstructed ? 0 : 2;
    }
    if (*realize) {
      auto cols = yasuhara_realize(ra, rb, rc,
                                   target == "s2xs2" ? RealizeTarget::S2xS2
                                                     : RealizeTarget::CP2bCP2);
      for (const auto& row : cols)
        std::cout << row[0] << " " << row[1] << " " << row[2] << "\n";
      return 0;
    }
    if (*sig) {
      std::ifstream in(seifert_path);
      if (!in) {
        std::cerr << "error: cannot open '" << seifert_path << "'\n";
        return 1;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      SeifertMatrix V = parse_seifert(buf.str());
      if (V.size() > 64) {
        std::cerr << "error: matrix size capped at 64\n";
        return 1;
      }
      std::cout << lt_signature_seifert(V, RootOfUnity(sr, sm)) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace slicecert
