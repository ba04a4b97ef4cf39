#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slicecert/aux_results.hpp"
#include "slicecert/certificate_io.hpp"
#include "slicecert/exact.hpp"
#include "slicecert/exotica.hpp"
#include "slicecert/genus_map.hpp"
#include "slicecert/knot_table.hpp"
#include "slicecert/verifier.hpp"

namespace py = pybind11;
using namespace slicecert;

namespace {

SeifertMatrix matrix_from(const std::vector<std::vector<Int>>& rows) {
  return SeifertMatrix::make(rows);
}

std::string certify_json(const std::string& knots_csv, const std::string& name,
                         std::optional<Int> lk, std::optional<Int> twists) {
  if (lk.has_value() == twists.has_value())
    throw InvalidInput("give exactly one of lk and twists");
  auto res = ingest_knot_table(knots_csv);
  for (const auto& r : res.records)
    if (r.name == name) {
      auto cert = certify_not_slice(r, lk ? *lk : -*twists, DeclaredFlags{});
      if (!replay_certificate(cert, r)) throw Error("certificate failed independent replay");
      return emit_certificate(cert, CertFormat::json);
    }
  throw InvalidInput("knot '" + name + "' not found");
}

}  // namespace

PYBIND11_MODULE(slicecert, m) {
  m.doc() = "exact-arithmetic slice obstruction engine for 2-component links in CP2#bCP2";

  m.def("ruberman_genus", [](Int a, Int b) { return ruberman_genus(a, b); },
        py::arg("a1"), py::arg("a2"));
  m.def("classes_of_genus_at_most",
        [](Int g, Int bound) {
          std::vector<std::pair<Int, Int>> out;
          for (const auto& c : classes_of_genus_at_most(g, bound)) out.emplace_back(c[0], c[1]);
          return out;
        },
        py::arg("g"), py::arg("coeff_bound"));

  m.def("torus2_signature",
        [](Int q, Int r, Int mm) { return torus2_signature(q, RootOfUnity(r, mm)); },
        py::arg("q"), py::arg("r"), py::arg("m"));
  m.def("lt_signature",
        [](const std::vector<std::vector<Int>>& v, Int r, Int mm) {
          return lt_signature_seifert(matrix_from(v), RootOfUnity(r, mm));
        },
        py::arg("seifert"), py::arg("r"), py::arg("m"));
  m.def("arf_from_seifert",
        [](const std::vector<std::vector<Int>>& v) { return arf_from_seifert(matrix_from(v)); },
        py::arg("seifert"));

  m.def("framing_search",
        [](Int lk, Int bound) {
          std::vector<std::tuple<Int, Int, Int>> out;
          for (const auto& c : framing_search(lk, bound)) out.emplace_back(c.fA, c.fB, c.detQ);
          return out;
        },
        py::arg("lk"), py::arg("bound"));
  m.def("rokhlin_vanishes", [](Int lk) { return rokhlin_str(rokhlin_vanishes(lk)); },
        py::arg("lk"));
  m.def("build_family",
        [](Int mm) {
          auto d = build_family(mm);
          py::dict out;
          out["m"] = d.m;
          out["twist_count"] = d.twist_count;
          out["lk"] = d.lk;
          out["fA"] = d.fA;
          out["fB"] = d.fB;
          out["detQ"] = d.detQ;
          out["rokhlin"] = rokhlin_str(d.rokhlin);
          return out;
        },
        py::arg("m"));

  m.def("kprt_f", [](Int mm, Int d) { return q_str(kprt_f(mm, d)); }, py::arg("m"), py::arg("d"));
  m.def("yasuhara_realize",
        [](Int a, Int b, Int c, const std::string& target) {
          auto rows = yasuhara_realize(
              a, b, c, target == "s2xs2" ? RealizeTarget::S2xS2 : RealizeTarget::CP2bCP2);
          return std::vector<std::vector<Int>>{{rows[0][0], rows[0][1], rows[0][2]},
                                               {rows[1][0], rows[1][1], rows[1][2]}};
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("target"));

  m.def("certify", &certify_json, py::arg("knots_csv"), py::arg("knot"),
        py::arg("lk") = std::nullopt, py::arg("twists") = std::nullopt,
        "run the full certificate and return its JSON encoding");

  m.def("verify_c7t23", [] {
    auto cert = verify_c7t23_not_slice_in_cp2s();
    return py::make_tuple(cert.all_closed, replay_c7t23(cert),
                          emit_aux_certificate(cert, CertFormat::json));
  });
  m.def("three_component_obstructed",
        [] { return three_component_verdict(KnotTopProfile::c7t23()).obstructed; });

  py::register_exception<Error>(m, "SlicecertError");
}
