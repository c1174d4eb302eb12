#include <doctest.h>

#include "support/fixtures.hpp"

using namespace ckit;
using namespace ckit::fixtures;

TEST_CASE("jacobi holds on the fixtures") {
  CHECK(validate_jacobi(heisenberg3()).pass);
  CHECK(validate_jacobi(kodaira_algebra()).pass);
}

TEST_CASE("jacobi detects a genuine failure with a witness triple") {
  // Replacing [e0,e1] = e2 by [e0,e1] = e3 keeps Jacobi (e3 is central and
  // every cyclic sum collapses), so that mutation must still pass.
  LieAlgebra still_ok(4, {"e0", "e1", "e2", "e3"});
  still_ok.add_bracket(1, 2, 3, Scalar(1));
  still_ok.add_bracket(0, 1, 3, Scalar(1));
  still_ok.add_bracket(0, 2, 1, Scalar(-1));
  CHECK(validate_jacobi(still_ok).pass);

  // [e0,e2] = −e0 breaks the identity at (e0,e1,e2).
  LieAlgebra bad(4, {"e0", "e1", "e2", "e3"});
  bad.add_bracket(1, 2, 3, Scalar(1));
  bad.add_bracket(0, 1, 2, Scalar(1));
  bad.add_bracket(0, 2, 0, Scalar(-1));
  auto rep = validate_jacobi(bad);
  CHECK(!rep.pass);
  CHECK(rep.i == 0);
  CHECK(rep.j == 1);
  CHECK(rep.k == 2);
  CHECK(!vec_is_zero(rep.defect));
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(heisenberg3()));
  CHECK(is_unimodular(kodaira_algebra()));
  CHECK(!is_unimodular(aff_r()));  // Tr ad e1 = 1
  // Inoue surface algebra: traces 1 − ½ − ½ cancel.
  CatalogEntry inoue = catalog_build("inoue_s0");
  CHECK(is_unimodular(inoue.algebra));
}

TEST_CASE("structure subspaces of the fixtures") {
  auto h = structure_subspaces(heisenberg3());
  CHECK(h.is_nilpotent);
  CHECK(h.is_solvable);
  CHECK(h.commutator.rank() == 1);
  CHECK(contains(h.commutator, unit_vec(3, 2)));
  CHECK(h.center.rank() == 1);

  auto k = structure_subspaces(kodaira_algebra());
  CHECK(k.is_solvable);
  CHECK(!k.is_nilpotent);
  CHECK(k.commutator.rank() == 3);
  for (int j = 1; j <= 3; ++j) CHECK(contains(k.commutator, unit_vec(4, j)));
  CHECK(!contains(k.commutator, unit_vec(4, 0)));

  auto s = structure_subspaces(catalog_build("nakamura_s").algebra);
  CHECK(s.is_solvable);
  CHECK(!s.is_nilpotent);
  CHECK(s.commutator.rank() == 4);
  for (int j = 0; j < 4; ++j) CHECK(contains(s.commutator, unit_vec(6, j)));
}

TEST_CASE("semidirect products") {
  // k = 1, n = H3, B the plane rotation: the motivating 4-dim algebra.
  LieAlgebra h3 = heisenberg3();
  SMat B(3, 3);
  B.at(1, 0) = Scalar(1);
  B.at(0, 1) = Scalar(-1);
  LieAlgebra g = semidirect(1, h3, {B}, {"e0", "e1", "e2", "e3"});
  CHECK(g == kodaira_algebra());
  CHECK(validate_jacobi(g).pass);

  // Restriction to n reproduces n, Tr ad t_j = Tr B_j.
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k)
      CHECK(g.c(1 + j, 1 + k, 3) == h3.c(j, k, 2));
  CHECK(g.ad(0).trace() == B.trace());

  // k = 2 abelian factor with commuting actions.
  LieAlgebra r4(4);
  SMat A1(4, 4), A2(4, 4);
  A1.at(1, 0) = Scalar(1);
  A1.at(0, 1) = Scalar(-1);
  for (int i = 0; i < 4; ++i) A2.at(i, i) = Scalar(i < 2 ? 1 : -1);
  LieAlgebra s = semidirect(2, r4, {A1, A2});
  CHECK(validate_jacobi(s).pass);
  CHECK(s.ad(1).trace() == A2.trace());

  // Non-derivation input is rejected.
  SMat notder(3, 3);
  notder.at(2, 0) = Scalar(1);
  notder.at(0, 2) = Scalar(1);  // moves the center out
  CHECK(!is_derivation(h3, notder));
  CHECK_THROWS_AS(semidirect(1, h3, {notder}), DomainError);

  // Non-commuting family is rejected.
  SMat C1(4, 4), C2(4, 4);
  C1.at(1, 0) = Scalar(1);
  C2.at(0, 1) = Scalar(1);
  CHECK_THROWS_AS(semidirect(2, r4, {C1, C2}), DomainError);
}

TEST_CASE("derivation predicate") {
  LieAlgebra h3 = heisenberg3();
  SMat D(3, 3);
  D.at(0, 0) = Scalar(1);
  D.at(1, 1) = Scalar(1);
  D.at(2, 2) = Scalar(2);  // grading derivation of h3
  CHECK(is_derivation(h3, D));
  SMat E = D;
  E.at(2, 2) = Scalar(3);
  CHECK(!is_derivation(h3, E));
}

TEST_CASE("nilradical verification") {
  // A nilpotent algebra is its own nilradical.
  SubspaceBasis all3;
  all3.dim = 3;
  for (int j = 0; j < 3; ++j) all3.vectors.push_back(unit_vec(3, j));
  CHECK(verify_nilradical(heisenberg3(), all3).verdict ==
        NilradicalVerdict::Verified);

  // Kodaira: span{e1,e2,e3} is the nilradical (ad e0 has eigenvalues ±i).
  SubspaceBasis W;
  W.dim = 4;
  for (int j = 1; j <= 3; ++j) W.vectors.push_back(unit_vec(4, j));
  CHECK(verify_nilradical(kodaira_algebra(), W).verdict ==
        NilradicalVerdict::Verified);

  // span{e3} misses [g,g].
  SubspaceBasis small;
  small.dim = 4;
  small.vectors.push_back(unit_vec(4, 3));
  CHECK(verify_nilradical(kodaira_algebra(), small).verdict ==
        NilradicalVerdict::Rejected);

  // Codimension-2 decision: for s both R²-directions act non-nilpotently,
  // and no combination x·f1 + f2 is ad-nilpotent.
  CatalogEntry sn = catalog_build("nakamura_s_n");
  SubspaceBasis nil;
  nil.dim = 6;
  for (int j = 2; j < 6; ++j) nil.vectors.push_back(unit_vec(6, j));
  CHECK(verify_nilradical(sn.algebra, nil).verdict ==
        NilradicalVerdict::Verified);

  // Proper nilpotent ideal below the nilradical is rejected as non-maximal:
  // in h3 ⊕ R the span of the center misses nilpotent directions.
  LieAlgebra h3r(4);
  h3r.add_bracket(0, 1, 2, Scalar(1));
  SubspaceBasis center;
  center.dim = 4;
  center.vectors.push_back(unit_vec(4, 2));
  center.vectors.push_back(unit_vec(4, 3));
  CHECK(verify_nilradical(h3r, center).verdict ==
        NilradicalVerdict::Rejected);

  // aff(R) ⊕ R²: W = [g,g] ⊕ 0 has codim 3 from g — maximality undecided.
  LieAlgebra a(5);
  a.add_bracket(0, 1, 1, Scalar(1));
  SubspaceBasis w;
  w.dim = 5;
  w.vectors.push_back(unit_vec(5, 1));
  CHECK(verify_nilradical(a, w).verdict == NilradicalVerdict::NecessaryOnly);

  // Codimension-2 pencil with a degenerate direction at an irrational
  // parameter: commuting actions diag(1,−1) and diag(−√2,√2) make
  // x·ad(t1) + ad(t2) vanish exactly at x = √2, found through the
  // real-root count over Q(√2).
  {
    LieAlgebra g(4);
    g.add_bracket(0, 2, 2, Scalar(1));
    g.add_bracket(0, 3, 3, Scalar(-1));
    g.add_bracket(1, 2, 2, -Scalar::sqrt_int(2));
    g.add_bracket(1, 3, 3, Scalar::sqrt_int(2));
    CHECK(validate_jacobi(g).pass);
    SubspaceBasis r2;
    r2.dim = 4;
    r2.vectors = {unit_vec(4, 2), unit_vec(4, 3)};
    auto rep = verify_nilradical(g, r2);
    CHECK(rep.verdict == NilradicalVerdict::Rejected);
    CHECK(rep.reason.find("real ad-nilpotent direction") != std::string::npos);
    // Direct witness: √2 t1 + t2 is central, so ad of it vanishes.
    SVec x = svec(4);
    x[0] = Scalar::sqrt_int(2);
    x[1] = Scalar(1);
    CHECK(g.ad(x).is_zero());
  }
  // diag(1,−1) with diag(1,−2): the two scaling conditions are
  // incompatible, so the candidate really is the nilradical.
  {
    LieAlgebra g(4);
    g.add_bracket(0, 2, 2, Scalar(1));
    g.add_bracket(0, 3, 3, Scalar(-1));
    g.add_bracket(1, 2, 2, Scalar(1));
    g.add_bracket(1, 3, 3, Scalar(-2));
    CHECK(validate_jacobi(g).pass);
    SubspaceBasis r2;
    r2.dim = 4;
    r2.vectors = {unit_vec(4, 2), unit_vec(4, 3)};
    CHECK(verify_nilradical(g, r2).verdict == NilradicalVerdict::Verified);
  }

  CHECK_THROWS_AS(verify_nilradical(
                      [] {
                        LieAlgebra so3(3);  // not solvable
                        so3.add_bracket(0, 1, 2, Scalar(1));
                        so3.add_bracket(1, 2, 0, Scalar(1));
                        so3.add_bracket(2, 0, 1, Scalar(1));
                        return so3;
                      }(),
                      all3),
                  DomainError);
}

TEST_CASE("commutator sits inside every verified candidate") {
  for (const auto& name : {"kodaira", "nakamura_s", "s_6_44"}) {
    CatalogEntry e = catalog_build(name);
    auto str = structure_subspaces(e.algebra);
    // the nilradical candidate: all basis vectors with nilpotent ad
    SubspaceBasis W;
    W.dim = e.algebra.dim();
    for (int j = 0; j < e.algebra.dim(); ++j) {
      SMat p = e.algebra.ad(j);
      SMat acc = p;
      for (int k = 1; k < e.algebra.dim(); ++k) acc = acc * p;
      if (acc.is_zero()) try_extend(W, unit_vec(e.algebra.dim(), j));
    }
    auto rep = verify_nilradical(e.algebra, W);
    CHECK(rep.verdict == NilradicalVerdict::Verified);
    CHECK(contains_all(W, str.commutator));
  }
}

TEST_CASE("antisymmetry and jacobi hold for every catalog algebra") {
  for (const auto& name : catalog_list()) {
    CatalogEntry e = catalog_build(name);
    CHECK(validate_jacobi(e.algebra).pass);
    for (int j = 0; j < e.algebra.dim(); ++j)
      for (int k = 0; k < e.algebra.dim(); ++k)
        for (int l = 0; l < e.algebra.dim(); ++l)
          CHECK(e.algebra.c(j, k, l) == -e.algebra.c(k, j, l));
  }
}

TEST_CASE("structure constants must be real") {
  LieAlgebra g(3);
  CHECK_THROWS_AS(g.add_bracket(0, 1, 2, Scalar::i()), DomainError);
}
