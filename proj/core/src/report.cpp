#include "ckit/report.hpp"

namespace ckit {

namespace {

json invariance_json(const InvarianceResult& r) {
  switch (r.kind) {
    case InvarianceKind::Invariant:
      return "Invariant";
    case InvarianceKind::TorsionOrder:
      return "TorsionOrder " + std::to_string(r.order);
    case InvarianceKind::NotPeriodic:
      return "NotPeriodic";
  }
  return "?";
}

}  // namespace

json run_pipeline(const PipelineInput& in) {
  json rep;
  rep["schema"] = "ckit/1";
  const LieAlgebra& L = in.algebra;

  {
    json st;
    auto jac = validate_jacobi(L);
    st["jacobi"] = jac.pass;
    if (!jac.pass)
      st["jacobi_witness"] = {L.label(jac.i), L.label(jac.j), L.label(jac.k)};
    st["unimodular"] = is_unimodular(L);
    auto ss = structure_subspaces(L);
    st["solvable"] = ss.is_solvable;
    st["nilpotent"] = ss.is_nilpotent;
    st["commutator_dim"] = ss.commutator.rank();
    rep["structure"] = st;
  }

  bool solvable = rep["structure"]["solvable"].get<bool>();
  bool negative_verdict = false;
  bool error_seen = false;

  if (in.J) {
    try {
      auto verdict = decide_invariant_trivial(L, *in.J);
      auto obs = obstruction_check(L, *in.J);
      json cx = verdict_to_json(L, verdict, obs);
      cx["abelian_structure"] = is_abelian_cs(L, *in.J);
      cx["chern_ricci_zero"] = chern_ricci(L, *in.J).is_zero();
      rep["complex"] = cx;
      if (verdict.kind != VerdictKind::InvariantTrivial)
        negative_verdict = true;
      if (obs.status == ObstructionStatus::Obstructed) {
        negative_verdict = true;
        rep["complex"]["note"] =
            "no compact quotient has holomorphically torsion canonical bundle";
      }

      if (solvable && verdict.kind != VerdictKind::NotIntegrable) {
        try {
          SectionDescriptor S = build_section(L, *in.J);
          json sec = descriptor_to_json(L, S);
          auto check = verify_section(L, *in.J, S);
          sec["verified"] = check.pass;
          if (!check.pass) sec["failing_identity"] = check.failing_identity;
          json pj = json::array();
          for (const auto& p : in.periods) {
            json one;
            one["period"] = p.str();
            try {
              one["result"] = invariance_json(lattice_invariance(S, p));
            } catch (const Error& err) {
              one["error"] = err.what();
              error_seen = true;
            }
            pj.push_back(one);
          }
          if (!in.periods.empty()) sec["invariance"] = pj;
          rep["section"] = sec;
        } catch (const Error& err) {
          rep["section"] = {{"error", err.what()}};
          error_seen = true;
        }
      }
    } catch (const Error& err) {
      rep["complex"] = {{"error", err.what()}};
      error_seen = true;
    }
  }

  if (in.certificate) {
    try {
      auto check = verify_certificate(*in.certificate);
      json lat;
      lat["pass"] = check.pass;
      if (!check.pass) {
        lat["detail"] = check.detail;
        negative_verdict = true;
      } else {
        json es = json::array();
        for (const auto& E : check.conjugates) es.push_back(matrix_to_json(E));
        lat["conjugates"] = es;
      }
      rep["lattice"] = lat;
    } catch (const Error& err) {
      rep["lattice"] = {{"error", err.what()}};
      error_seen = true;
    }
  }

  if (in.triple) {
    try {
      json hc;
      auto tr = validate_triple(L, *in.triple);
      hc["triple_valid"] = tr.pass;
      if (!tr.pass) {
        hc["detail"] = tr.detail;
        negative_verdict = true;
      } else {
        auto table = obata(L, *in.triple);
        hc["obata_torsion_free"] = table.torsion_free;
        hc["obata_parallel"] = table.parallel[0] && table.parallel[1] &&
                               table.parallel[2];
        auto sph = psi_sphere_check(L, *in.triple, default_sphere_samples());
        hc["psi"] = {covector_to_json(L, sph.psi_alpha[0]),
                     covector_to_json(L, sph.psi_alpha[1]),
                     covector_to_json(L, sph.psi_alpha[2])};
        hc["some_pole_trivial"] = sph.some_pole_trivial;
        hc["sphere_psi_linear"] = sph.linear_in_a;
      }
      rep["hypercomplex"] = hc;
    } catch (const Error& err) {
      rep["hypercomplex"] = {{"error", err.what()}};
      error_seen = true;
    }
  }

  rep["summary"] = {{"negative_verdict", negative_verdict},
                    {"error", error_seen}};
  return rep;
}

int exit_code_for(const json& report) {
  if (report.contains("summary")) {
    if (report["summary"].value("error", false)) return 2;
    if (report["summary"].value("negative_verdict", false)) return 1;
  }
  if (!report.value("pass", true)) return 1;
  return 0;
}

namespace {

bool check_equal(json& out, const std::string& key, const json& got,
                 const json& want) {
  bool ok = got == want;
  out[key] = {{"got", got}, {"want", want}, {"ok", ok}};
  return ok;
}

}  // namespace

json catalog_report(const CatalogEntry& e) {
  json rep;
  rep["schema"] = "ckit/1";
  rep["entry"] = e.name;
  bool all = true;

  json alg;
  all &= check_equal(alg, "jacobi", validate_jacobi(e.algebra).pass, true);
  rep["algebra"] = alg;

  json structures = json::array();
  for (const auto& s : e.structures) {
    json js;
    js["structure"] = s.name;
    bool ok = true;
    auto verdict = decide_invariant_trivial(e.algebra, s.J);
    auto obs = obstruction_check(e.algebra, s.J);
    ok &= check_equal(js, "integrable",
                      verdict.kind != VerdictKind::NotIntegrable,
                      s.integrable);
    ok &= check_equal(js, "abelian", is_abelian_cs(e.algebra, s.J), s.abelian);
    ok &= check_equal(js, "psi", covector_to_json(e.algebra, verdict.psi_covector),
                      covector_to_json(e.algebra, s.psi));
    ok &= check_equal(js, "verdict", verdict_name(verdict.kind),
                      verdict_name(s.verdict));
    if (s.witness >= 0)
      ok &= check_equal(js, "witness",
                        verdict.witness_index
                            ? json(e.algebra.label(*verdict.witness_index))
                            : json(nullptr),
                        e.algebra.label(s.witness));
    ok &= check_equal(js, "obstruction", obstruction_name(obs.status),
                      obstruction_name(s.obstruction));
    auto str = structure_subspaces(e.algebra);
    if (str.is_solvable && s.integrable) {
      SectionDescriptor S = build_section(e.algebra, s.J);
      ok &= check_equal(js, "section_verified",
                        verify_section(e.algebra, s.J, S).pass, true);
      if (s.lambda) {
        json got = S.rank_one ? json(S.rank_one->lambda.str()) : json(nullptr);
        ok &= check_equal(js, "lambda", got, s.lambda->str());
      }
      if (s.e0) {
        json got =
            S.rank_one ? json(vector_str(e.algebra, S.rank_one->e0)) : json(nullptr);
        ok &= check_equal(js, "e0", got, vector_str(e.algebra, *s.e0));
      }
      json inv = json::array();
      for (const auto& [p, want] : s.invariance) {
        auto got = lattice_invariance(S, p);
        json one;
        one["period"] = p.str();
        bool iok = got.kind == want.kind &&
                   (got.kind != InvarianceKind::TorsionOrder ||
                    got.order == want.order);
        one["got"] = invariance_json(got);
        one["want"] = invariance_json(want);
        one["ok"] = iok;
        ok &= iok;
        inv.push_back(one);
      }
      js["invariance"] = inv;
    }
    js["ok"] = ok;
    all &= ok;
    structures.push_back(js);
  }
  rep["structures"] = structures;

  if (e.companion) {
    json comp;
    bool ok = true;
    const auto& c = *e.companion;
    // φ[x,y] = [φx, φy] and φ∘J_src = J_dst∘φ.
    bool homo = true;
    int d = c.source.dim();
    for (int a = 0; a < d && homo; ++a)
      for (int b = a + 1; b < d; ++b)
        if (!vec_is_zero(c.phi.apply(c.source.bracket_basis(a, b)) -
                         e.algebra.bracket(c.phi.col(a), c.phi.col(b)))) {
          homo = false;
          break;
        }
    ok &= check_equal(comp, "phi_homomorphism", homo, true);
    const SMat* Jdst = nullptr;
    for (const auto& s : e.structures)
      if (s.name == c.dst_structure) Jdst = &s.J;
    if (Jdst)
      ok &= check_equal(comp, "phi_intertwines", c.phi * c.source_J == *Jdst * c.phi,
                        true);
    ok &= check_equal(comp, "phi_invertible",
                      c.phi.inverse().has_value(), true);
    comp["ok"] = ok;
    all &= ok;
    rep["companion"] = comp;
  }

  if (e.triple) {
    json hc;
    bool ok = true;
    auto tr = validate_triple(e.algebra, *e.triple);
    ok &= check_equal(hc, "triple_valid", tr.pass, true);
    if (tr.pass) {
      auto table = obata(e.algebra, *e.triple);
      ok &= check_equal(hc, "obata_torsion_free", table.torsion_free, true);
      ok &= check_equal(hc, "obata_parallel",
                        table.parallel[0] && table.parallel[1] &&
                            table.parallel[2],
                        true);
      auto sph = psi_sphere_check(e.algebra, *e.triple, default_sphere_samples());
      ok &= check_equal(hc, "sphere_psi_linear", sph.linear_in_a, true);
    }
    hc["ok"] = ok;
    all &= ok;
    rep["hypercomplex"] = hc;
  }

  json certs = json::array();
  for (const auto& nc : e.certificates) {
    json jc;
    jc["name"] = nc.name;
    bool ok = true;
    try {
      auto check = verify_certificate(nc.cert);
      ok &= check_equal(jc, "pass", check.pass, true);
      if (!check.pass) jc["detail"] = check.detail;
      for (std::size_t j = 0;
           j < nc.expected_conjugates.size() && j < check.conjugates.size();
           ++j) {
        if (!nc.expected_conjugates[j]) continue;
        ok &= check_equal(jc, "conjugate_" + std::to_string(j + 1),
                          matrix_to_json(check.conjugates[j]),
                          matrix_to_json(*nc.expected_conjugates[j]));
      }
    } catch (const Error& err) {
      jc["error"] = err.what();
      ok = false;
    }
    jc["ok"] = ok;
    all &= ok;
    certs.push_back(jc);
  }
  if (!e.certificates.empty()) rep["certificates"] = certs;

  rep["pass"] = all;
  return rep;
}

}  // namespace ckit
