// Acceptance suite: one pass/fail line per criterion, all arithmetic exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "ckit/report.hpp"
#include "ckit/salamon.hpp"
#include "support/fixtures.hpp"

using namespace ckit;
using namespace ckit::fixtures;

namespace {

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const std::exception& e) {
    failure = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  if (failure.empty()) {
    std::cout << "PASS  criterion " << number << " (" << ms << " ms): "
              << title << "\n";
  } else {
    ++failures;
    std::cout << "FAIL  criterion " << number << " (" << ms << " ms): "
              << title << "\n      " << failure << "\n";
  }
}

struct CheckFail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFail(what);
}

template <class T>
void require_eq(const T& got, const T& want, const std::string& what) {
  if (!(got == want)) throw CheckFail(what);
}

SVec expect_psi(int dim, int idx, long long val) {
  SVec v = svec(dim);
  v[idx] = Scalar(val);
  return v;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  criterion(1, "invariant-triviality theorem sweep (catalog + 200 samples)",
            [] {
    auto start = clock::now();
    auto samples = equivalence_samples(200);
    int generated = 0;
    for (const auto& smp : samples) {
      if (smp.origin == "random_almost_abelian") ++generated;
      bool trivial = decide_invariant_trivial(smp.L, smp.J).kind ==
                     VerdictKind::InvariantTrivial;
      Form sigma = sigma_form(adapted_coframe(smp.L, smp.J));
      bool dsigma_zero = ce_d(smp.L, sigma).is_zero();
      require(trivial == dsigma_zero,
              "verdict and dσ disagree on " + smp.origin);
      // The right side of the theorem, computed from its own two halves.
      bool integrable = !nijenhuis_witness(smp.L, smp.J).has_value();
      bool psi_zero = vec_is_zero(psi(smp.L, smp.J));
      require(dsigma_zero == (integrable && psi_zero),
              "dσ = 0 vs (N ≡ 0 ∧ ψ ≡ 0) disagree on " + smp.origin);
    }
    require(generated >= 200, "sample generator produced too few algebras");
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                    clock::now() - start)
                    .count();
    require(secs < 30, "sweep exceeded 30 s");
  });

  criterion(2, "dσ = ¼ Σ (−ψ(v_j)+iψ(u_j)) γ̄_j ∧ σ on integrable samples",
            [] {
    for (const auto& smp : equivalence_samples(40)) {
      if (nijenhuis_witness(smp.L, smp.J)) continue;
      Form beta = dsigma_beta(smp.L, smp.J);  // re-checks β∧σ = dσ exactly
      Form sigma = sigma_form(adapted_coframe(smp.L, smp.J));
      require(wedge(beta, sigma) == ce_d(smp.L, sigma),
              "β∧σ ≠ dσ on " + smp.origin);
    }
    LieAlgebra g = kodaira_algebra();
    Form sigma = sigma_form(adapted_coframe(g, kodaira_J()));
    Form both = ce_d(g, sigma);
    require_eq(form_str(both, g.labels()), std::string("-e{013} - i*e{023}"),
               "motivating dσ text");
    require(both == wedge(dsigma_beta(g, kodaira_J()), sigma),
            "two routes to dσ differ");
  });

  criterion(3, "ψ fixtures", [] {
    CatalogEntry kod = catalog_build("kodaira");
    require_eq(psi(kod.algebra, kod.structures[0].J),
               expect_psi(4, 0, -2), "kodaira ψ(e0) = −2");
    CatalogEntry gp = catalog_build("g_p");
    require_eq(psi(gp.algebra, gp.structures[0].J), expect_psi(6, 5, 2),
               "g_p ψ(e6) = 2");
    CatalogEntry s644 = catalog_build("s_6_44");
    require_eq(psi(s644.algebra, s644.structures[0].J), expect_psi(6, 5, 4),
               "s_6_44 ψ(e6) = 4");
    CatalogEntry spl = catalog_build("nakamura_splitting_jb");
    require_eq(psi(spl.algebra, spl.structures[0].J), expect_psi(6, 4, 4),
               "splitting ψ(f5) = 4");
    CatalogEntry ghat = catalog_build("hypercomplex_ghat");
    require_eq(psi(ghat.algebra, ghat.triple->J1), expect_psi(8, 7, -4),
               "ψ1 = −4e8");
    require_eq(psi(ghat.algebra, ghat.triple->J2), expect_psi(8, 2, -4),
               "ψ2 = −4e3");
    require_eq(psi(ghat.algebra, ghat.triple->J3), expect_psi(8, 6, -4),
               "ψ3 = −4e7");
    // Almost abelian trace formula on randomized block data.
    Rng rng(71);
    for (int t = 0; t < 25; ++t) {
      int m = 2 * static_cast<int>(rng.integer(1, 3));
      Scalar a = Scalar(rng.integer(-4, 4));
      SMat A(m, m);
      for (int b = 0; b < m / 2; ++b) {
        Scalar x = Scalar(rng.rational(3, 2)), y = Scalar(rng.rational(3, 2));
        A.at(2 * b, 2 * b) = A.at(2 * b + 1, 2 * b + 1) = x;
        A.at(2 * b + 1, 2 * b) = y;
        A.at(2 * b, 2 * b + 1) = -y;
      }
      int dim = m + 2;
      LieAlgebra g(dim);
      if (!a.is_zero()) g.add_bracket(dim - 1, 0, 0, a);
      for (int i = 0; i < m; ++i)
        for (int l = 0; l < m; ++l)
          if (!A.at(l, i).is_zero())
            g.add_bracket(dim - 1, 1 + i, 1 + l, A.at(l, i));
      SMat J(dim, dim);
      fixtures::pair(J, 0, dim - 1);
      for (int b = 0; b < m / 2; ++b) fixtures::pair(J, 1 + 2 * b, 2 + 2 * b);
      require_eq(psi(g, J)[0], Scalar(-2) * a - A.trace(),
                 "ψ(e1) = −2a − TrA on symbolic data");
    }
  });

  criterion(4, "Chern–Ricci identity 2ρ + dψ = 0; ρ = 0 when ψ([g,g]) = 0",
            [] {
    for (const auto& smp : equivalence_samples(60)) {
      SVec ps = psi(smp.L, smp.J);
      SMat rho = chern_ricci(smp.L, smp.J);
      Form rho2(smp.L.dim(), 2);
      for (int j = 0; j < smp.L.dim(); ++j)
        for (int k = j + 1; k < smp.L.dim(); ++k)
          rho2.add((1u << j) | (1u << k), Scalar(2) * rho.at(j, k));
      require((rho2 + ce_d(smp.L, Form::covector(smp.L.dim(), ps))).is_zero(),
              "2ρ + dψ ≠ 0 on " + smp.origin);
      if (obstruction_check(smp.L, smp.J).status ==
          ObstructionStatus::PsiVanishesOnCommutator)
        require(rho.is_zero(), "ρ ≠ 0 with ψ([g,g]) = 0 on " + smp.origin);
    }
  });

  criterion(5, "abelian complex structures on unimodular algebras are trivial",
            [] {
    int abelian_seen = 0;
    for (const auto& smp : equivalence_samples(60)) {
      if (!is_unimodular(smp.L) || !is_abelian_cs(smp.L, smp.J)) continue;
      ++abelian_seen;
      require(decide_invariant_trivial(smp.L, smp.J).kind ==
                  VerdictKind::InvariantTrivial,
              "abelian J not trivial on " + smp.origin);
    }
    for (long long n = 1; n <= 3; ++n) {
      CatalogParams p;
      p.n = n;
      CatalogEntry sn = catalog_build("nakamura_s_n", p);
      require(is_abelian_cs(sn.algebra, sn.structures[0].J),
              "s_n abelian structure check");
      require(decide_invariant_trivial(sn.algebra, sn.structures[0].J).kind ==
                  VerdictKind::InvariantTrivial,
              "s_n abelian J not trivial");
    }
    CatalogEntry s = catalog_build("nakamura_s");
    require(decide_invariant_trivial(s.algebra, s.structures[0].J).kind ==
                VerdictKind::InvariantTrivial,
            "s abelian J not trivial");
    require(abelian_seen > 0, "no abelian samples exercised");
  });

  criterion(6, "sections: build_section passes verify_section; λ fixtures",
            [] {
    for (const auto& name : catalog_list()) {
      CatalogEntry e = catalog_build(name);
      if (!structure_subspaces(e.algebra).is_solvable) continue;
      for (const auto& s : e.structures) {
        SectionDescriptor S = build_section(e.algebra, s.J);
        auto check = verify_section(e.algebra, s.J, S);
        require(check.pass, name + "/" + s.name + ": " +
                                check.failing_identity);
      }
    }
    auto lambda_of = [](const std::string& name, int structure) {
      CatalogEntry e = catalog_build(name);
      SectionDescriptor S =
          build_section(e.algebra, e.structures[structure].J);
      require(S.rank_one.has_value(), name + " missing rank-one data");
      return S.rank_one->lambda;
    };
    require_eq(lambda_of("kodaira", 0), Scalar(1), "kodaira λ = 1");
    require_eq(lambda_of("s_6_44", 0), Scalar(-2), "s_6_44 λ = −2");
    require_eq(lambda_of("nakamura_splitting_jb", 0), Scalar(-2),
               "splitting λ = −2");
    require_eq(lambda_of("hypercomplex_ghat", 0), Scalar(2), "ĝ/J1 λ = 2");
  });

  criterion(7, "invariance and torsion orders", [] {
    require(lattice_invariance(Scalar(1), Period::pi(2)).kind ==
                InvarianceKind::Invariant,
            "λ=1, p=2π");
    auto t = lattice_invariance(Scalar(1), Period::pi(1));
    require(t.kind == InvarianceKind::TorsionOrder && t.order == 2,
            "λ=1, p=π is torsion of order 2");
    require(lattice_invariance(Scalar(-2), Period::pi(1)).kind ==
                InvarianceKind::Invariant,
            "λ=−2, p=π");
    require(lattice_invariance(Scalar(2), Period::pi(1)).kind ==
                InvarianceKind::Invariant,
            "λ=2, p=π");
  });

  criterion(8, "lattice certificates verify for m = 3..10 (under 10 s)", [] {
    auto start = clock::now();
    for (long long m = 3; m <= 10; ++m) {
      CatalogParams p;
      p.m = m;
      for (long long n = 1; n <= 3; ++n) {
        CatalogParams pn = p;
        pn.n = n;
        auto sn = catalog_build("nakamura_s_n", pn);
        auto check = verify_certificate(sn.certificates[0].cert);
        require(check.pass, "s_n n=" + std::to_string(n) + " m=" +
                                std::to_string(m) + ": " + check.detail);
      }
      for (const auto& name :
           {"an1_i", "an1_ii", "an2_i", "an2_ii", "g_p", "s_6_44",
            "hypercomplex_ghat", "kodaira", "nakamura_splitting_jb"}) {
        CatalogEntry e = catalog_build(name, p);
        for (const auto& nc : e.certificates) {
          auto check = verify_certificate(nc.cert);
          require(check.pass, std::string(name) + " m=" + std::to_string(m) +
                                  ": " + check.detail);
          for (std::size_t j = 0; j < nc.expected_conjugates.size(); ++j)
            if (nc.expected_conjugates[j])
              require(check.conjugates[j] == *nc.expected_conjugates[j],
                      std::string(name) + ": conjugate matrix mismatch");
        }
      }
    }
    // The pinned basis form of exp(πA) for s_6_44: (1) ⊕ [−1 1; 0 −1]^⊕2.
    auto s644 = catalog_build("s_6_44");
    auto check = verify_certificate(s644.certificates[0].cert);
    SMat E(5, 5);
    E.at(0, 0) = Scalar(1);
    E.at(1, 1) = E.at(2, 2) = E.at(3, 3) = E.at(4, 4) = Scalar(-1);
    E.at(1, 2) = E.at(3, 4) = Scalar(1);
    require(check.conjugates[0] == E, "s_6_44 companion-basis matrix");
    // g_p's conjugate is the companion pattern [0 1; 1 m] ⊕ … ⊕ (1).
    auto gp = catalog_build("g_p");
    auto gpc = verify_certificate(gp.certificates[0].cert);
    require(gpc.conjugates[0].at(0, 2) == Scalar(1) &&
                gpc.conjugates[0].at(2, 0) == Scalar(1) &&
                gpc.conjugates[0].at(2, 2) == Scalar(3) &&
                gpc.conjugates[0].at(4, 4) == Scalar(1),
            "g_p companion form");
    auto secs =
        std::chrono::duration_cast<std::chrono::seconds>(clock::now() - start)
            .count();
    require(secs < 10, "certificate sweep exceeded 10 s");
  });

  criterion(9, "constructor families build, verdicts match, violations are "
               "rejected with the violated equation", [] {
    // Valid families give the trivial verdict through the trace conditions.
    for (const auto& name : {"an1_i", "an1_ii", "an2_i", "an2_ii"}) {
      CatalogEntry e = catalog_build(name);
      require(decide_invariant_trivial(e.algebra, e.structures[0].J).kind ==
                  VerdictKind::InvariantTrivial,
              std::string(name) + " verdict");
    }
    // fp1: nonzero a with A*η = 0 violates A*η = aη.
    FP1Data d1;
    d1.half = 2;
    d1.a = Scalar(1);
    d1.A = SMat(2, 2);
    d1.eta = SMat(2, 2);
    d1.eta.at(0, 1) = Scalar(1);
    d1.eta.at(1, 0) = Scalar(-1);
    d1.J1 = SMat(2, 2);
    fixtures::pair(d1.J1, 0, 1);
    bool threw = false;
    try {
      fp1_construct(d1);
    } catch (const DomainError& err) {
      threw = std::string(err.what()).find("A*eta = a eta") !=
              std::string::npos;
    }
    require(threw, "fp1 must name the violated equation");
    // fp1 verdict: a + ½TrA ≠ 0 gives the negative verdict.
    FP1Data d2 = d1;
    d2.a = Scalar(1);
    d2.A.at(0, 0) = d2.A.at(1, 1) = Scalar::rational(1, 2);
    auto [g2, J2] = fp1_construct(d2);
    require(decide_invariant_trivial(g2, J2).kind ==
                VerdictKind::NoInvariantSection,
            "fp1 negative verdict for a + ½TrA ≠ 0");
    // fp2: violating the first displayed equation.
    FP2Data d3;
    d3.half = 4;
    d3.a = Scalar(1);
    d3.a1 = Scalar(0);
    d3.a2 = Scalar(1);
    d3.v1 = d3.v2 = Scalar(1);
    d3.A = SMat(4, 4);
    d3.xi = SMat(4, 4);
    d3.alpha_cov = svec(4);
    d3.gamma_cov = svec(4);
    d3.v = svec(4);
    bool threw2 = false;
    try {
      fp2_construct(d3);
    } catch (const DomainError& err) {
      threw2 = std::string(err.what()).find("a+a2") != std::string::npos;
    }
    require(threw2, "fp2 must name the violated equation");
  });

  criterion(10, "hypercomplex block reproduces the negative answer", [] {
    LieAlgebra r4(4);
    SMat J1(4, 4), J2(4, 4);
    fixtures::pair(J1, 0, 1);
    fixtures::pair(J1, 3, 2);
    fixtures::pair(J2, 0, 2);
    fixtures::pair(J2, 1, 3);
    HypercomplexTriple flat{J1, J2, J1 * J2};
    require(validate_triple(r4, flat).pass, "trivial quaternionic triple");
    auto t0 = obata(r4, flat);
    require(t0.torsion_free && t0.parallel[0] && t0.parallel[1] &&
                t0.parallel[2],
            "flat Obata invariants");
    auto sp0 = psi_sphere_check(r4, flat, default_sphere_samples());
    require(sp0.all_samples_trivial, "flat sphere check");

    CatalogEntry e = catalog_build("hypercomplex_ghat");
    require(validate_triple(e.algebra, *e.triple).pass, "ĝ triple");
    auto t1 = obata(e.algebra, *e.triple);
    require(t1.torsion_free && t1.parallel[0] && t1.parallel[1] &&
                t1.parallel[2],
            "ĝ Obata invariants");
    auto sp1 = psi_sphere_check(e.algebra, *e.triple,
                                default_sphere_samples());
    require(sp1.linear_in_a && !sp1.some_pole_trivial, "ĝ sphere report");

    // End-to-end report: J1 non-invariantly trivial with an invariant
    // exponential section; J2, J3 obstructed.
    PipelineInput in(e.algebra);
    in.J = e.triple->J1;
    in.triple = e.triple;
    in.certificate = e.certificates[0].cert;
    in.periods = {Period::pi(1)};
    json rep = run_pipeline(in);
    require(rep["complex"]["verdict"] == "NoInvariantSection",
            "ĝ/J1 verdict");
    require(rep["complex"]["obstruction"] == "PsiVanishesOnCommutator",
            "ĝ/J1 obstruction");
    require(rep["section"]["lambda"] == "2", "ĝ/J1 λ");
    require(rep["section"]["invariance"][0]["result"] == "Invariant",
            "ĝ/J1 lattice invariance");
    require(rep["lattice"]["pass"] == true, "ĝ lattice certificate");
    for (const SMat* J : {&e.triple->J2, &e.triple->J3})
      require(obstruction_check(e.algebra, *J).status ==
                  ObstructionStatus::Obstructed,
              "ĝ/J2, J3 obstruction");
  });

  criterion(11, "parser round-trip and the sign-convention fixture", [] {
    LieAlgebra h3 = parse_salamon("(0,0,-e^{12})");
    require(h3.c(0, 1, 2) == Scalar(1), "h3 sign convention [e1,e2] = e3");
    std::vector<std::string> shorthands = {
        "(0,0,-e^{12})",
        "(e^{15},-e^{25},-e^{35},e^{45},0,0)",
        "(e^{23},e^{36},-e^{26},e^{26}+e^{56},e^{36}-e^{46},0)",
    };
    for (const auto& s : shorthands) {
      LieAlgebra g = parse_salamon(s);
      require(parse_salamon(print_salamon(g)) == g, "round trip of " + s);
    }
    for (const auto& name : catalog_list()) {
      CatalogEntry e = catalog_build(name);
      LieAlgebra plain(e.algebra.dim());
      for (int j = 0; j < e.algebra.dim(); ++j)
        for (int k = j + 1; k < e.algebra.dim(); ++k)
          for (const auto& [l, c] : e.algebra.bracket_jk(j, k))
            plain.add_bracket(j, k, l, c);
      require(parse_salamon(print_salamon(plain)) == plain,
              "round trip of catalog entry " + name);
    }
  });

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED\n";
  return 1;
}
