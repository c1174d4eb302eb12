#include <doctest.h>

#include "ckit/report.hpp"
#include "ckit/salamon.hpp"
#include "support/fixtures.hpp"

using namespace ckit;
using namespace ckit::fixtures;

TEST_CASE("pipeline on the motivating example") {
  CatalogEntry e = catalog_build("kodaira");
  PipelineInput in(e.algebra);
  in.J = e.structures[0].J;
  in.periods = {Period::pi(2), Period::pi(1)};
  json rep = run_pipeline(in);
  CHECK(rep["schema"] == "ckit/1");
  CHECK(rep["structure"]["jacobi"] == true);
  CHECK(rep["structure"]["unimodular"] == true);
  CHECK(rep["structure"]["solvable"] == true);
  CHECK(rep["complex"]["integrable"] == true);
  CHECK(rep["complex"]["psi"]["e0"] == "-2");
  CHECK(rep["complex"]["verdict"] == "NoInvariantSection");
  CHECK(rep["complex"]["obstruction"] == "PsiVanishesOnCommutator");
  CHECK(rep["section"]["lambda"] == "1");
  CHECK(rep["section"]["sigma"] == "(e0+ie3)^(e1+ie2)");
  CHECK(rep["section"]["alpha"]["e0"] == "-i");
  CHECK(rep["section"]["closed_coords"][0] == "e0");
  CHECK(rep["section"]["verified"] == true);
  CHECK(rep["section"]["invariance"][0]["result"] == "Invariant");
  CHECK(rep["section"]["invariance"][1]["result"] == "TorsionOrder 2");
  CHECK(exit_code_for(rep) == 1);  // no invariant section
}

TEST_CASE("pipeline flags the obstructed surface") {
  CatalogEntry e = catalog_build("inoue_s0");
  PipelineInput in(e.algebra);
  in.J = e.structures[0].J;
  json rep = run_pipeline(in);
  CHECK(rep["complex"]["obstruction"] == "Obstructed");
  CHECK(rep["complex"]["note"] ==
        "no compact quotient has holomorphically torsion canonical bundle");
  CHECK(exit_code_for(rep) == 1);
}

TEST_CASE("pipeline hypercomplex block on ghat") {
  CatalogEntry e = catalog_build("hypercomplex_ghat");
  PipelineInput in(e.algebra);
  in.J = e.triple->J1;
  in.triple = e.triple;
  in.certificate = e.certificates[0].cert;
  in.periods = {Period::pi(1)};
  json rep = run_pipeline(in);
  CHECK(rep["complex"]["verdict"] == "NoInvariantSection");
  CHECK(rep["section"]["lambda"] == "2");
  CHECK(rep["section"]["invariance"][0]["result"] == "Invariant");
  CHECK(rep["lattice"]["pass"] == true);
  CHECK(rep["hypercomplex"]["triple_valid"] == true);
  CHECK(rep["hypercomplex"]["obata_torsion_free"] == true);
  CHECK(rep["hypercomplex"]["psi"][0]["e8"] == "-4");
  CHECK(rep["hypercomplex"]["psi"][1]["e3"] == "-4");
  CHECK(rep["hypercomplex"]["psi"][2]["e7"] == "-4");
  CHECK(rep["hypercomplex"]["sphere_psi_linear"] == true);
}

TEST_CASE("pipeline exit code zero for positive verdicts") {
  CatalogEntry e = catalog_build("nakamura_s");
  PipelineInput in(e.algebra);
  in.J = e.structures[0].J;
  json rep = run_pipeline(in);
  CHECK(rep["complex"]["verdict"] == "InvariantTrivial");
  CHECK(exit_code_for(rep) == 0);
}

TEST_CASE("pipeline determinism: byte-identical reports") {
  CatalogEntry e = catalog_build("s_6_44");
  PipelineInput in(e.algebra);
  in.J = e.structures[0].J;
  in.periods = {Period::pi(1)};
  in.certificate = e.certificates[0].cert;
  std::string a = run_pipeline(in).dump();
  std::string b = run_pipeline(in).dump();
  CHECK(a == b);
}

TEST_CASE("stage isolation: a lattice failure keeps earlier stages") {
  CatalogEntry e = catalog_build("kodaira");
  PipelineInput in(e.algebra);
  in.J = e.structures[0].J;
  LatticeCertificate broken = e.certificates[0].cert;
  broken.P = Mat<TScalar>(3, 3);  // singular
  in.certificate = broken;
  json rep = run_pipeline(in);
  CHECK(rep["complex"]["verdict"] == "NoInvariantSection");
  CHECK(rep["section"]["verified"] == true);
  CHECK(rep["lattice"].contains("error"));
  CHECK(exit_code_for(rep) == 2);
}

TEST_CASE("verdict json schema") {
  LieAlgebra g = kodaira_algebra();
  auto v = decide_invariant_trivial(g, kodaira_J());
  auto o = obstruction_check(g, kodaira_J());
  json j = verdict_to_json(g, v, o);
  CHECK(j["integrable"] == true);
  CHECK(j["psi"]["e0"] == "-2");
  CHECK(j["psi"].size() == 1);  // zero entries omitted
  CHECK(j["verdict"] == "NoInvariantSection");
  CHECK(j["witness"] == "e0");
  CHECK(j["obstruction"] == "PsiVanishesOnCommutator");
}

TEST_CASE("algebra json round trip") {
  for (const auto& name : {"kodaira", "nakamura_s_n", "s_6_44"}) {
    CatalogEntry e = catalog_build(name);
    json j = algebra_to_json(e.algebra);
    LieAlgebra back = algebra_from_json(j);
    CHECK(back == e.algebra);
    CHECK(back.labels() == e.algebra.labels());
  }
  // The documented encoding: h3 is {"dim":3,"brackets":[{"j":1,"k":2,
  // "coeffs":{"3":"1"}}]}.
  json h3 = {{"dim", 3},
             {"brackets",
              json::array({{{"j", 1}, {"k", 2}, {"coeffs", {{"3", "1"}}}}})}};
  LieAlgebra g = algebra_from_json(h3);
  CHECK(g.c(0, 1, 2) == Scalar(1));
  CHECK(algebra_to_json(g)["brackets"][0]["coeffs"]["3"] == "1");
}

TEST_CASE("certificate json round trip") {
  for (const auto& name : {"nakamura_s_n", "an2_i", "s_6_44", "g_p"}) {
    CatalogEntry e = catalog_build(name);
    for (const auto& nc : e.certificates) {
      json j = certificate_to_json(nc.cert);
      LatticeCertificate back = certificate_from_json(j);
      CHECK(back.k == nc.cert.k);
      CHECK(back.n == nc.cert.n);
      CHECK(back.P == nc.cert.P);
      auto check = verify_certificate(back);
      CHECK(check.pass);
    }
  }
  // Times serialize in the documented shape.
  json t = time_to_json(unit_time(3));
  CHECK(t["type"] == "log_unit");
  CHECK(t["m"] == 3);
  json p = time_to_json(TimeValue::pi());
  CHECK(p["type"] == "pi");
  CHECK(p["q"] == "1");
}

TEST_CASE("matrix and triple json round trips") {
  CatalogEntry e = catalog_build("hypercomplex_ghat");
  json j = triple_to_json(*e.triple);
  HypercomplexTriple back = triple_from_json(j);
  CHECK(back.J1 == e.triple->J1);
  CHECK(back.J3 == e.triple->J3);
}

TEST_CASE("pipeline accepts tuple input end to end") {
  LieAlgebra g = parse_salamon("(e^{23},e^{36},-e^{26},e^{26}+e^{56},e^{36}-e^{46},0)");
  PipelineInput in(g);
  SMat J(6, 6);
  fixtures::pair(J, 0, 5);
  fixtures::pair(J, 1, 2);
  fixtures::pair(J, 3, 4);
  in.J = J;
  in.periods = {Period::pi(1)};
  json rep = run_pipeline(in);
  CHECK(rep["complex"]["psi"]["e6"] == "4");
  CHECK(rep["section"]["lambda"] == "-2");
  CHECK(rep["section"]["invariance"][0]["result"] == "Invariant");
}
