#include "ckit/catalog.hpp"

#include "ckit/salamon.hpp"

namespace ckit {

namespace {

// J e_a = e_b (0-based indices).
void set_pair(SMat& J, int a, int b) {
  J.at(b, a) = Scalar(1);
  J.at(a, b) = Scalar(-1);
}

SMat standard_pairing(int dim) {
  SMat J(dim, dim);
  for (int k = 0; k + 1 < dim; k += 2) set_pair(J, k, k + 1);
  return J;
}

Scalar get_scalar(const CatalogParams& p, const std::string& key,
                  const Scalar& dflt) {
  auto it = p.scalars.find(key);
  return it == p.scalars.end() ? dflt : it->second;
}

SVec unit(int n, int j) { return unit_vec(n, j); }

Period pi_period(long long num, long long den = 1) {
  return Period::pi(mpq_class(static_cast<long>(num), static_cast<long>(den)));
}

InvarianceResult invariant() { return {InvarianceKind::Invariant, 1}; }
InvarianceResult torsion(long long k) {
  return {InvarianceKind::TorsionOrder, k};
}

// ---------------------------------------------------------------------------
// kodaira: R ⋉ H₃ with the rotation action; J e0 = e3, J e1 = e2.
CatalogEntry build_kodaira(const CatalogParams&) {
  CatalogEntry e;
  e.name = "kodaira";
  e.note = "rotation extension of the Heisenberg group; primary/secondary "
           "Kodaira surfaces arise from its lattices";
  LieAlgebra g(4, {"e0", "e1", "e2", "e3"});
  g.add_bracket(1, 2, 3, Scalar(1));
  g.add_bracket(0, 1, 2, Scalar(1));
  g.add_bracket(0, 2, 1, Scalar(-1));
  e.algebra = g;

  ExpectedStructure s;
  s.name = "J";
  SMat J(4, 4);
  set_pair(J, 0, 3);
  set_pair(J, 1, 2);
  s.J = J;
  s.psi = {Scalar(-2), Scalar(0), Scalar(0), Scalar(0)};
  s.verdict = VerdictKind::NoInvariantSection;
  s.witness = 0;
  s.obstruction = ObstructionStatus::PsiVanishesOnCommutator;
  s.lambda = Scalar(1);
  s.e0 = unit(4, 0);
  s.invariance = {{pi_period(2), invariant()}, {pi_period(1), torsion(2)}};
  e.structures.push_back(s);

  // Lattices Γ = 2πZ ⋉ exp(Z × Z × ½Z) and Γ' with period π.
  LieAlgebra h3(3);
  h3.add_bracket(0, 1, 2, Scalar(1));
  StructuredDerivation B = StructuredDerivation::zero(3);
  B.rot_blocks.push_back({1, unit(3, 0), unit(3, 1)});
  SMat P(3, 3);
  P.at(0, 0) = Scalar(1);
  P.at(1, 1) = Scalar(1);
  P.at(2, 2) = Scalar::rational(1, 2);
  for (auto [name, q] : {std::pair<const char*, long long>{"period_2pi", 2},
                         {"period_pi", 1}}) {
    NamedCertificate c;
    c.name = name;
    c.cert.k = 1;
    c.cert.n = h3;
    c.cert.B = {B};
    c.cert.times = {TimeValue::pi(static_cast<long>(q))};
    c.cert.P = lift(P);
    SMat E = SMat::identity(3);
    if (q == 1) {
      E.at(0, 0) = Scalar(-1);
      E.at(1, 1) = Scalar(-1);
    }
    c.expected_conjugates = {E};
    e.certificates.push_back(std::move(c));
  }
  return e;
}

// ---------------------------------------------------------------------------
// inoue_s0 (parameter b ≠ 0): no holomorphically torsion canonical bundle.
CatalogEntry build_inoue(const CatalogParams& p) {
  Scalar b = get_scalar(p, "b", Scalar(1));
  if (b.is_zero() || !b.is_real())
    throw DomainError("inoue_s0: parameter b must be real and nonzero");
  CatalogEntry e;
  e.name = "inoue_s0";
  e.note = "solvable surface algebra with psi nonzero on the commutator";
  LieAlgebra g(4, {"e0", "e1", "e2", "e3"});
  g.add_bracket(0, 1, 1, Scalar(1));
  g.add_bracket(0, 2, 2, Scalar::rational(-1, 2));
  g.add_bracket(0, 2, 3, b);
  g.add_bracket(0, 3, 2, -b);
  g.add_bracket(0, 3, 3, Scalar::rational(-1, 2));
  e.algebra = g;

  ExpectedStructure s;
  s.name = "J";
  SMat J(4, 4);
  set_pair(J, 0, 1);
  set_pair(J, 2, 3);
  s.J = J;
  s.psi = {Scalar(-2) * b, Scalar(1), Scalar(0), Scalar(0)};
  s.verdict = VerdictKind::NoInvariantSection;
  s.witness = 0;
  s.obstruction = ObstructionStatus::Obstructed;
  e.structures.push_back(s);
  return e;
}

// ---------------------------------------------------------------------------
// g1 = (e^{15},−e^{25},−e^{35},e^{45},0,0), almost abelian.
CatalogEntry build_g1(const CatalogParams&) {
  CatalogEntry e;
  e.name = "g1";
  e.note = "unimodular almost abelian algebra with a closed (3,0)-form";
  e.algebra = parse_salamon("(e^{15},-e^{25},-e^{35},e^{45},0,0)");

  ExpectedStructure s;
  s.name = "J";
  SMat J(6, 6);
  set_pair(J, 0, 3);  // pairs chosen so that J commutes with ad e5
  set_pair(J, 1, 2);
  set_pair(J, 4, 5);
  s.J = J;
  s.psi = svec(6);
  s.verdict = VerdictKind::InvariantTrivial;
  e.structures.push_back(s);
  return e;
}

// ---------------------------------------------------------------------------
// g2_alpha, parameter α ≥ 0.
CatalogEntry build_g2(const CatalogParams& p) {
  Scalar alpha = get_scalar(p, "alpha", Scalar(1));
  if (!alpha.is_real()) throw DomainError("g2_alpha: alpha must be real");
  CatalogEntry e;
  e.name = "g2_alpha";
  e.note = "almost abelian family with paired rotation/scaling action";
  e.algebra = parse_salamon(
      "(alpha*e^{15}+e^{25},-e^{15}+alpha*e^{25},"
      "-alpha*e^{35}+e^{45},-e^{35}-alpha*e^{45},0,0)",
      {{"alpha", alpha}});

  ExpectedStructure s;
  s.name = "J";
  SMat J(6, 6);
  set_pair(J, 1, 0);  // J e2 = e1 (i.e. J e1 = −e2)
  set_pair(J, 2, 3);
  set_pair(J, 4, 5);
  s.J = J;
  s.psi = svec(6);
  s.verdict = VerdictKind::InvariantTrivial;
  e.structures.push_back(s);
  return e;
}

// ---------------------------------------------------------------------------
// Shared pieces for the s_n family (and s = s_1).
struct SnParts {
  LieAlgebra algebra;
  SMat J, Jtilde;
  NamedCertificate cert;
  SnParts(int unused) : algebra(1) { (void)unused; }
};

// R² ⋉ R^{4n}: generators act by the block rotations and diag(1,1,−1,−1).
SnParts make_sn(long long n, long long m, bool f_last) {
  int nd = static_cast<int>(4 * n);
  int dim = nd + 2;
  // Basis order: generators first unless f_last (the 6-dim presentation s
  // uses e1..e4, f-generators at the end as e5, e6).
  std::vector<std::string> labels;
  int t0, b0;  // index of first generator / first nilradical vector
  if (f_last) {
    for (int j = 1; j <= nd; ++j) labels.push_back("e" + std::to_string(j));
    labels.push_back("e" + std::to_string(nd + 1));
    labels.push_back("e" + std::to_string(nd + 2));
    t0 = nd;
    b0 = 0;
  } else {
    labels = {"f1", "f2"};
    for (int j = 1; j <= nd; ++j) labels.push_back("e" + std::to_string(j));
    t0 = 0;
    b0 = 2;
  }
  SnParts parts(0);
  LieAlgebra g(dim, labels);
  for (int blk = 0; blk < n; ++blk) {
    int c = b0 + 4 * blk;
    // A = ad t1: rotation +1 on (1st,2nd), −1 on (3rd,4th) of each block.
    g.add_bracket(t0, c, c + 1, Scalar(1));
    g.add_bracket(t0, c + 1, c, Scalar(-1));
    g.add_bracket(t0, c + 2, c + 3, Scalar(-1));
    g.add_bracket(t0, c + 3, c + 2, Scalar(1));
    // B = ad t2: diag(1,1,−1,−1).
    g.add_bracket(t0 + 1, c, c, Scalar(1));
    g.add_bracket(t0 + 1, c + 1, c + 1, Scalar(1));
    g.add_bracket(t0 + 1, c + 2, c + 2, Scalar(-1));
    g.add_bracket(t0 + 1, c + 3, c + 3, Scalar(-1));
  }
  parts.algebra = g;

  SMat J(dim, dim), Jt(dim, dim);
  set_pair(J, t0, t0 + 1);
  set_pair(Jt, t0 + 1, t0);
  for (int c = b0; c + 1 < b0 + nd; c += 2) {
    set_pair(J, c, c + 1);
    set_pair(Jt, c, c + 1);
  }
  parts.J = J;
  parts.Jtilde = Jt;

  // Certificate: exp(π A) = −I, exp(t_m B) pair-conjugate to companions.
  LieAlgebra nil(nd);
  StructuredDerivation A = StructuredDerivation::zero(nd);
  StructuredDerivation B = StructuredDerivation::zero(nd);
  HyperbolicPattern pat;
  pat.n = nd;
  pat.unit = {m, false};
  for (int blk = 0; blk < n; ++blk) {
    int c = 4 * blk;
    A.rot_blocks.push_back({1, unit(nd, c), unit(nd, c + 1)});
    A.rot_blocks.push_back({-1, unit(nd, c + 2), unit(nd, c + 3)});
    B.real_blocks.push_back({1, {unit(nd, c), unit(nd, c + 1)}});
    B.real_blocks.push_back({-1, {unit(nd, c + 2), unit(nd, c + 3)}});
    pat.pairs.push_back({c, c + 2, false});
    pat.pairs.push_back({c + 1, c + 3, false});
  }
  parts.cert.name = "Gamma_m";
  parts.cert.cert.k = 2;
  parts.cert.cert.n = nil;
  parts.cert.cert.B = {A, B};
  parts.cert.cert.times = {TimeValue::pi(), unit_time(m)};
  parts.cert.cert.P = hyperbolic_conjugator(pat);
  SMat expA(nd, nd);
  for (int i = 0; i < nd; ++i) expA.at(i, i) = Scalar(-1);
  parts.cert.expected_conjugates = {expA, std::nullopt};
  return parts;
}

CatalogEntry build_nakamura_s(const CatalogParams& p) {
  CatalogEntry e;
  e.name = "nakamura_s";
  e.note = "real algebra of the complex parallelizable Nakamura manifold";
  SnParts parts = make_sn(1, p.m, /*f_last=*/true);
  e.algebra = parts.algebra;
  ExpectedStructure s;
  s.name = "J";
  s.J = parts.J;
  s.abelian = true;
  s.psi = svec(6);
  s.verdict = VerdictKind::InvariantTrivial;
  e.structures.push_back(s);
  e.certificates.push_back(parts.cert);
  return e;
}

CatalogEntry build_sn(const CatalogParams& p) {
  if (p.n < 1) throw DomainError("nakamura_s_n: n must be ≥ 1");
  CatalogEntry e;
  e.name = "nakamura_s_n";
  e.note = "generalized Nakamura family R² ⋉ R^{4n}";
  SnParts parts = make_sn(p.n, p.m, /*f_last=*/false);
  e.algebra = parts.algebra;
  int dim = e.algebra.dim();
  ExpectedStructure s;
  s.name = "J";
  s.J = parts.J;
  s.abelian = true;
  s.psi = svec(dim);
  s.verdict = VerdictKind::InvariantTrivial;
  e.structures.push_back(s);
  ExpectedStructure st;
  st.name = "Jtilde";
  st.J = parts.Jtilde;
  st.abelian = false;
  st.psi = svec(dim);
  st.verdict = VerdictKind::InvariantTrivial;
  e.structures.push_back(st);
  e.certificates.push_back(parts.cert);
  return e;
}

// ---------------------------------------------------------------------------
// an1_i: R e_{4n+2} ⋉ h_{4n+1}, B = 0 ⊕ I_{2n} ⊕ (−I_{2n}).
CatalogEntry build_an1_i(const CatalogParams& p) {
  long long n = p.n;
  if (n < 1) throw DomainError("an1_i: n must be ≥ 1");
  int half = static_cast<int>(2 * n + 1);  // algebra dim = 4n + 2
  int k1 = 2 * half - 2;                   // = 4n

  FP1Data d;
  d.half = half;
  d.a = Scalar(0);
  d.A = SMat(k1, k1);
  for (int i = 0; i < k1 / 2; ++i) {
    d.A.at(i, i) = Scalar(1);
    d.A.at(k1 / 2 + i, k1 / 2 + i) = Scalar(-1);
  }
  d.eta = SMat(k1, k1);
  for (int i = 0; i < k1 / 2; ++i) {
    d.eta.at(i, k1 / 2 + i) = Scalar(1);
    d.eta.at(k1 / 2 + i, i) = Scalar(-1);
  }
  d.J1 = standard_pairing(k1);
  auto [g, J] = fp1_construct(d);

  CatalogEntry e;
  e.name = "an1_i";
  e.note = "almost nilpotent family, J[n,n] orthogonal to n, hyperbolic "
           "action";
  e.algebra = g;
  ExpectedStructure s;
  s.name = "J";
  s.J = J;
  s.psi = svec(2 * half);
  s.verdict = VerdictKind::InvariantTrivial;
  e.structures.push_back(s);

  // Lattice: exp(t_m B) is pair-conjugate to companions over the Heisenberg
  // rational basis (the center stays fixed).
  int nd = 2 * half - 1;
  LieAlgebra nil(nd);
  for (int i = 1; i <= k1 / 2; ++i)
    nil.add_bracket(i, k1 / 2 + i, 0, Scalar(-1));
  StructuredDerivation B = StructuredDerivation::zero(nd);
  std::vector<SVec> plus, minus;
  for (int i = 1; i <= k1 / 2; ++i) {
    plus.push_back(unit(nd, i));
    minus.push_back(unit(nd, k1 / 2 + i));
  }
  B.real_blocks = {{1, plus}, {-1, minus}};
  HyperbolicPattern pat;
  pat.n = nd;
  pat.unit = {p.m, false};
  pat.fixed = {0};
  for (int i = 1; i <= k1 / 2; ++i) pat.pairs.push_back({i, k1 / 2 + i, false});
  NamedCertificate c;
  c.name = "Gamma_m";
  c.cert.k = 1;
  c.cert.n = nil;
  c.cert.B = {B};
  c.cert.times = {unit_time(p.m)};
  c.cert.P = hyperbolic_conjugator(pat);
  e.certificates.push_back(std::move(c));
  return e;
}

// ---------------------------------------------------------------------------
// an1_ii: rotation rates q_i (units of π) with Σ q_i = 0.
CatalogEntry build_an1_ii(const CatalogParams& p) {
  std::vector<mpq_class> q = p.angles;
  if (q.empty()) q = {1, -1};
  mpq_class sum = 0;
  for (const auto& v : q) sum += v;
  if (sum != 0) throw DomainError("an1_ii: rotation rates must sum to zero");
  int blocks = static_cast<int>(q.size());
  int half = blocks + 1;  // algebra dim = 2·blocks + 2
  int k1 = 2 * blocks;

  FP1Data d;
  d.half = half;
  d.a = Scalar(0);
  d.A = SMat(k1, k1);
  d.eta = SMat(k1, k1);
  for (int i = 0; i < blocks; ++i) {
    d.A.at(2 * i, 2 * i + 1) = Scalar(-mpq_class(q[i]));
    d.A.at(2 * i + 1, 2 * i) = Scalar(mpq_class(q[i]));
    d.eta.at(2 * i, 2 * i + 1) = Scalar(1);
    d.eta.at(2 * i + 1, 2 * i) = Scalar(-1);
  }
  d.J1 = standard_pairing(k1);
  auto [g, J] = fp1_construct(d);

  CatalogEntry e;
  e.name = "an1_ii";
  e.note = "almost nilpotent family with rotation action; rates are "
           "rational multiples of pi so exp(pi B') is integral";
  e.algebra = g;
  ExpectedStructure s;
  s.name = "J";
  s.J = J;
  s.psi = svec(2 * half);
  s.verdict = VerdictKind::InvariantTrivial;
  e.structures.push_back(s);

  // Certificate needs every rate in {2, 1, 1/2} + 2Z.
  bool exact = true;
  for (const auto& v : q) {
    mpq_class r = v;
    mpz_class num = r.get_num(), den = r.get_den();
    if (den != 1 && den != 2) exact = false;
  }
  if (exact) {
    int nd = 2 * half - 1;
    LieAlgebra nil(nd);
    for (int i = 0; i < blocks; ++i)
      nil.add_bracket(1 + 2 * i, 2 + 2 * i, 0, Scalar(-1));
    StructuredDerivation B = StructuredDerivation::zero(nd);
    for (int i = 0; i < blocks; ++i)
      B.rot_blocks.push_back({q[i], unit(nd, 1 + 2 * i), unit(nd, 2 + 2 * i)});
    NamedCertificate c;
    c.name = "Gamma";
    c.cert.k = 1;
    c.cert.n = nil;
    c.cert.B = {B};
    c.cert.times = {TimeValue::pi()};
    c.cert.P = lift(SMat::identity(nd));
    e.certificates.push_back(std::move(c));
  }
  return e;
}

// ---------------------------------------------------------------------------
// an2_i: hyperbolic action with a shear column into the Heisenberg center.
CatalogEntry build_an2_i(const CatalogParams& p) {
  long long n = p.n >= 2 ? p.n : 2;
  Scalar v1 = get_scalar(p, "v1", Scalar(1));
  Scalar v2 = get_scalar(p, "v2", Scalar(1));
  if (v1.is_zero() || v2.is_zero())
    throw DomainError("an2_i: v1, v2 must be nonzero");
  int half = static_cast<int>(2 * n);  // algebra dim = 4n
  int k2 = 2 * half - 4;               // = 4n − 4

  FP2Data d;
  d.half = half;
  d.a = d.a1 = d.a2 = Scalar(0);
  d.v1 = v1;
  d.v2 = v2;
  d.A = SMat(k2, k2);
  d.xi = SMat(k2, k2);
  for (int i = 0; i < k2 / 2; ++i) {
    d.A.at(i, i) = Scalar(1);
    d.A.at(k2 / 2 + i, k2 / 2 + i) = Scalar(-1);
    d.xi.at(i, k2 / 2 + i) = Scalar(1);
    d.xi.at(k2 / 2 + i, i) = Scalar(-1);
  }
  d.alpha_cov = svec(k2);
  d.gamma_cov = svec(k2);
  d.v = svec(k2);
  auto [g, J] = fp2_construct(d);

  CatalogEntry e;
  e.name = "an2_i";
  e.note = "almost nilpotent family, J[n,n] inside n, hyperbolic action "
           "with shear";
  e.algebra = g;
  ExpectedStructure s;
  s.name = "J";
  s.J = J;
  s.psi = svec(2 * half);
  s.verdict = VerdictKind::InvariantTrivial;
  e.structures.push_back(s);

  int nd = 2 * half - 1;
  LieAlgebra nil(nd);
  for (int i = 0; i < k2 / 2; ++i)
    nil.add_bracket(2 + i, 2 + k2 / 2 + i, 0, Scalar(-1));
  StructuredDerivation B = StructuredDerivation::zero(nd);
  std::vector<SVec> plus, minus;
  for (int i = 0; i < k2 / 2; ++i) {
    plus.push_back(unit(nd, 2 + i));
    minus.push_back(unit(nd, 2 + k2 / 2 + i));
  }
  B.real_blocks = {{1, plus}, {-1, minus}};
  SMat N(nd, nd);
  N.at(0, nd - 1) = v1;
  N.at(1, nd - 1) = v2;
  B.nilpotent = N;
  HyperbolicPattern pat;
  pat.n = nd;
  pat.unit = {p.m, false};
  for (int i = 0; i < k2 / 2; ++i)
    pat.pairs.push_back({2 + i, 2 + k2 / 2 + i, false});
  pat.shear = HyperbolicPattern::Shear{v1, v2, 0, 1, nd - 1, true};
  NamedCertificate c;
  c.name = "Gamma_m";
  c.cert.k = 1;
  c.cert.n = nil;
  c.cert.B = {B};
  c.cert.times = {unit_time(p.m)};
  c.cert.transcendental = {Transcendental::Kind::UnitLog, {p.m, false}};
  c.cert.P = hyperbolic_conjugator(pat);
  e.certificates.push_back(std::move(c));
  return e;
}

// ---------------------------------------------------------------------------
// an2_ii: rotation rates (units of π) with shear; Σ q_i = 0.
CatalogEntry build_an2_ii(const CatalogParams& p) {
  std::vector<mpq_class> q = p.angles;
  if (q.empty()) q = {1, -1};
  mpq_class sum = 0;
  for (const auto& v : q) sum += v;
  if (sum != 0) throw DomainError("an2_ii: rotation rates must sum to zero");
  Scalar v1 = get_scalar(p, "v1", Scalar(1));
  Scalar v2 = get_scalar(p, "v2", Scalar(1));
  if (v1.is_zero() || v2.is_zero())
    throw DomainError("an2_ii: v1, v2 must be nonzero");
  int blocks = static_cast<int>(q.size());
  int half = blocks + 2;  // algebra dim = 2·blocks + 4
  int k2 = 2 * blocks;

  FP2Data d;
  d.half = half;
  d.a = d.a1 = d.a2 = Scalar(0);
  d.v1 = v1;
  d.v2 = v2;
  d.A = SMat(k2, k2);
  d.xi = SMat(k2, k2);
  for (int i = 0; i < blocks; ++i) {
    d.A.at(2 * i, 2 * i + 1) = Scalar(-mpq_class(q[i]));
    d.A.at(2 * i + 1, 2 * i) = Scalar(mpq_class(q[i]));
    d.xi.at(2 * i, 2 * i + 1) = Scalar(1);
    d.xi.at(2 * i + 1, 2 * i) = Scalar(-1);
  }
  d.alpha_cov = svec(k2);
  d.gamma_cov = svec(k2);
  d.v = svec(k2);
  auto [g, J] = fp2_construct(d);

  CatalogEntry e;
  e.name = "an2_ii";
  e.note = "almost nilpotent family with rotation action and shear";
  e.algebra = g;
  ExpectedStructure s;
  s.name = "J";
  s.J = J;
  s.psi = svec(2 * half);
  s.verdict = VerdictKind::InvariantTrivial;
  e.structures.push_back(s);

  bool exact = true;
  for (const auto& v : q)
    if (v.get_den() != 1 && v.get_den() != 2) exact = false;
  if (exact) {
    int nd = 2 * half - 1;
    LieAlgebra nil(nd);
    for (int i = 0; i < blocks; ++i)
      nil.add_bracket(2 + 2 * i, 3 + 2 * i, 0, Scalar(-1));
    StructuredDerivation B = StructuredDerivation::zero(nd);
    for (int i = 0; i < blocks; ++i)
      B.rot_blocks.push_back({q[i], unit(nd, 2 + 2 * i), unit(nd, 3 + 2 * i)});
    SMat N(nd, nd);
    N.at(0, nd - 1) = v1;
    N.at(1, nd - 1) = v2;
    B.nilpotent = N;
    HyperbolicPattern pat;
    pat.n = nd;
    for (int i = 2; i < nd - 1; ++i) pat.fixed.push_back(i);
    pat.shear = HyperbolicPattern::Shear{v1, v2, 0, 1, nd - 1, true};
    NamedCertificate c;
    c.name = "Gamma";
    c.cert.k = 1;
    c.cert.n = nil;
    c.cert.B = {B};
    c.cert.times = {TimeValue::pi()};
    c.cert.transcendental = {Transcendental::Kind::Pi, {}};
    c.cert.P = hyperbolic_conjugator(pat);
    e.certificates.push_back(std::move(c));
  }
  return e;
}

// ---------------------------------------------------------------------------
// g_p: R e6 ⋉ R⁵. The parameter p drops out of every diagnostic; the
// lattice exists at p = log-unit/π, which the certificate represents
// structurally.
CatalogEntry build_gp(const CatalogParams& par) {
  Scalar p = get_scalar(par, "p", Scalar(1));
  if (!p.is_real()) throw DomainError("g_p: p must be real");
  CatalogEntry e;
  e.name = "g_p";
  e.note = "torsion (order two) canonical bundle over a lattice quotient; "
           "diagnostics are p-independent, the certificate fixes "
           "p = log((m+sqrt(m^2+4))/2)/pi";
  LieAlgebra g(6);
  // ad e6 on span{e1..e5}: [−p −1; 1 −p] ⊕ [p 2; −2 p] ⊕ (0).
  g.add_bracket(5, 0, 0, -p);
  g.add_bracket(5, 0, 1, Scalar(1));
  g.add_bracket(5, 1, 0, Scalar(-1));
  g.add_bracket(5, 1, 1, -p);
  g.add_bracket(5, 2, 2, p);
  g.add_bracket(5, 2, 3, Scalar(-2));
  g.add_bracket(5, 3, 2, Scalar(2));
  g.add_bracket(5, 3, 3, p);
  e.algebra = g;

  ExpectedStructure s;
  s.name = "J";
  SMat J(6, 6);
  set_pair(J, 0, 1);
  set_pair(J, 2, 3);
  set_pair(J, 4, 5);
  s.J = J;
  s.psi = svec(6);
  s.psi[5] = Scalar(2);
  s.verdict = VerdictKind::NoInvariantSection;
  s.witness = 5;
  s.obstruction = ObstructionStatus::PsiVanishesOnCommutator;
  s.lambda = Scalar(-1);
  s.e0 = unit(6, 5);
  s.invariance = {{pi_period(1), torsion(2)}};
  e.structures.push_back(s);

  LieAlgebra nil(5);  // abelian
  StructuredDerivation B = StructuredDerivation::zero(5);
  B.real_scale = {true, {par.m, true}};
  B.real_blocks = {{-1, {unit(5, 0), unit(5, 1)}}, {1, {unit(5, 2), unit(5, 3)}}};
  B.rot_blocks = {{1, unit(5, 0), unit(5, 1)}, {-2, unit(5, 2), unit(5, 3)}};
  HyperbolicPattern pat;
  pat.n = 5;
  pat.unit = {par.m, true};
  pat.fixed = {4};
  pat.pairs = {{0, 2, true}, {1, 3, true}};  // −u⁻¹ sits on the first slot
  NamedCertificate c;
  c.name = "Gamma_m";
  c.cert.k = 1;
  c.cert.n = nil;
  c.cert.B = {B};
  c.cert.times = {TimeValue::pi()};
  c.cert.P = hyperbolic_conjugator(pat);
  e.certificates.push_back(std::move(c));
  return e;
}

// ---------------------------------------------------------------------------
// s_6_44 = (e^{23}, e^{36}, −e^{26}, e^{26}+e^{56}, e^{36}−e^{46}, 0).
CatalogEntry build_s644(const CatalogParams& p) {
  CatalogEntry e;
  e.name = "s_6_44";
  e.note = "almost nilpotent algebra over h3 ⊕ R²; non-invariant section "
           "tau = e^{−2it} sigma";
  e.algebra =
      parse_salamon("(e^{23},e^{36},-e^{26},e^{26}+e^{56},e^{36}-e^{46},0)");

  ExpectedStructure s;
  s.name = "J";
  SMat J(6, 6);
  set_pair(J, 0, 5);  // J e1 = e6
  set_pair(J, 1, 2);  // J e2 = e3
  set_pair(J, 3, 4);  // J e4 = e5
  s.J = J;
  s.psi = svec(6);
  s.psi[5] = Scalar(4);
  s.verdict = VerdictKind::NoInvariantSection;
  s.witness = 5;
  s.obstruction = ObstructionStatus::PsiVanishesOnCommutator;
  s.lambda = Scalar(-2);
  s.e0 = unit(6, 5);
  s.invariance = {{pi_period(1), invariant()}};
  e.structures.push_back(s);

  // n = h3 ⊕ R² = span{e1..e5}, B = ad e6 restricted.
  SubspaceBasis W;
  W.dim = 6;
  for (int j = 0; j < 5; ++j) W.vectors.push_back(unit(6, j));
  auto nil = restrict_to(e.algebra, W);
  if (!nil) throw Error("s_6_44: nilradical restriction failed");
  StructuredDerivation B = StructuredDerivation::zero(5);
  B.rot_blocks = {{-1, unit(5, 1), unit(5, 2)}, {-1, unit(5, 3), unit(5, 4)}};
  SMat N(5, 5);
  N.at(3, 1) = Scalar(1);  // ad e6: e2 ↦ −e3 + e4 (rotation −1 plus shear)
  N.at(4, 2) = Scalar(1);  // e3 ↦ −e2·0 … + e5
  B.nilpotent = N;
  // Rational basis f = (e1, −πe5, e3, −πe4, e2−e5).
  Mat<TScalar> P(5, 5);
  TScalar T = TScalar::t();
  P.at(0, 0) = TScalar(1);
  P.at(4, 1) = -T;
  P.at(2, 2) = TScalar(1);
  P.at(3, 3) = -T;
  P.at(1, 4) = TScalar(1);
  P.at(4, 4) = TScalar(-1);
  NamedCertificate c;
  c.name = "Gamma";
  c.cert.k = 1;
  c.cert.n = *nil;
  c.cert.B = {B};
  c.cert.times = {TimeValue::pi()};
  c.cert.transcendental = {Transcendental::Kind::Pi, {}};
  c.cert.P = P;
  SMat E(5, 5);
  E.at(0, 0) = Scalar(1);
  E.at(1, 1) = Scalar(-1);
  E.at(1, 2) = Scalar(1);
  E.at(2, 2) = Scalar(-1);
  E.at(3, 3) = Scalar(-1);
  E.at(3, 4) = Scalar(1);
  E.at(4, 4) = Scalar(-1);
  c.expected_conjugates = {E};
  e.certificates.push_back(std::move(c));
  (void)p;
  return e;
}

// ---------------------------------------------------------------------------
// nakamura_splitting_jb: (g, J_B) with B = r + is, |B| < 1, isomorphic to
// (s, J~_B); diagnostics and the section live on the s-side.
CatalogEntry build_splitting(const CatalogParams& p) {
  Scalar r = get_scalar(p, "r", Scalar::rational(1, 2));
  Scalar s = get_scalar(p, "s", Scalar::rational(1, 3));
  if (!r.is_real() || !s.is_real())
    throw DomainError("nakamura_splitting_jb: r, s must be real");
  Scalar norm = r * r + s * s;
  if ((norm - Scalar(1)).sign() >= 0)
    throw DomainError("nakamura_splitting_jb: need r² + s² < 1");

  CatalogEntry e;
  e.name = "nakamura_splitting_jb";
  e.note = "splitting-type structure on the Nakamura algebra; biholomorphic "
           "model carried over by the isomorphism phi";

  SnParts parts = make_sn(1, p.m, /*f_last=*/true);
  LieAlgebra salg(6, {"f1", "f2", "f3", "f4", "f5", "f6"});
  for (int j = 0; j < 6; ++j)
    for (int k = j + 1; k < 6; ++k)
      for (const auto& [l, c] : parts.algebra.bracket_jk(j, k))
        salg.add_bracket(j, k, l, c);
  e.algebra = salg;

  Scalar den = norm - Scalar(1);
  Scalar Aplus = norm + Scalar(2) * r + Scalar(1);   // (r+1)² + s²
  Scalar Aminus = norm - Scalar(2) * r + Scalar(1);  // (r−1)² + s²
  SMat Jt(6, 6);
  set_pair(Jt, 1, 0);  // J~ f1 = −f2
  set_pair(Jt, 2, 3);  // J~ f3 = f4
  Jt.at(4, 4) = Scalar(-2) * s / den;
  Jt.at(5, 4) = Aminus / den;
  Jt.at(4, 5) = -Aplus / den;
  Jt.at(5, 5) = Scalar(2) * s / den;

  ExpectedStructure es;
  es.name = "Jtilde_B";
  es.J = Jt;
  es.psi = svec(6);
  es.psi[4] = Scalar(4);
  es.verdict = VerdictKind::NoInvariantSection;
  es.witness = 4;
  es.obstruction = ObstructionStatus::PsiVanishesOnCommutator;
  es.lambda = Scalar(-2);
  SVec e0 = unit(6, 4);
  e0[5] = Scalar(-2) * s / Aplus;
  es.e0 = e0;
  es.invariance = {{pi_period(1), invariant()}};
  e.structures.push_back(es);

  // Companion (g, J_B) with the intertwining isomorphism phi.
  LieAlgebra g(6);
  Scalar one(1);
  auto br = [&g](int j, int k, int l, const Scalar& c) {
    g.add_bracket(j, k, l, c);
  };
  br(0, 4, 0, one - r);  br(0, 4, 1, -s);
  br(0, 5, 0, -s);       br(0, 5, 1, r + one);
  br(1, 4, 0, s);        br(1, 4, 1, one - r);
  br(1, 5, 0, -(r + one)); br(1, 5, 1, -s);
  br(2, 4, 2, r - one);  br(2, 4, 3, -s);
  br(2, 5, 2, s);        br(2, 5, 3, r + one);
  br(3, 4, 2, s);        br(3, 4, 3, r - one);
  br(3, 5, 2, -(r + one)); br(3, 5, 3, s);
  SMat Jb(6, 6);
  set_pair(Jb, 0, 1);
  set_pair(Jb, 2, 3);
  set_pair(Jb, 4, 5);
  SMat phi(6, 6);
  phi.at(3, 0) = one;        // phi e1 = f4
  phi.at(2, 1) = -one;       // phi e2 = −f3
  phi.at(1, 2) = one;        // phi e3 = f2
  phi.at(0, 3) = one;        // phi e4 = f1
  phi.at(4, 4) = -s;         // phi e5 = −s f5 + (1−r) f6
  phi.at(5, 4) = one - r;
  phi.at(4, 5) = r + one;    // phi e6 = (r+1) f5 − s f6
  phi.at(5, 5) = -s;
  CatalogEntry::Companion comp;
  comp.source = g;
  comp.source_J = Jb;
  comp.phi = phi;
  comp.dst_structure = "Jtilde_B";
  e.companion = comp;

  e.certificates.push_back(parts.cert);
  return e;
}

// ---------------------------------------------------------------------------
// hypercomplex_ghat: realification double of the 4-dim completely solvable
// algebra, with its hypercomplex triple and lattices.
CatalogEntry build_ghat(const CatalogParams& p) {
  LieAlgebra g(4);
  g.add_bracket(1, 2, 0, Scalar(1));   // [e2,e3] = e1
  g.add_bracket(1, 3, 1, Scalar(1));   // [e2,e4] = e2
  g.add_bracket(2, 3, 2, Scalar(-1));  // [e3,e4] = −e3
  SMat J(4, 4);
  set_pair(J, 0, 1);
  set_pair(J, 2, 3);
  SubspaceBasis gplus;
  gplus.dim = 4;
  gplus.vectors = {unit(4, 0), unit(4, 2)};
  auto [ghat, triple] = realification_double(g, J, gplus);

  CatalogEntry e;
  e.name = "hypercomplex_ghat";
  e.note = "eight-dimensional hypercomplex solvmanifold: J1 has a "
           "non-invariant trivializing section, J2 and J3 are obstructed";
  e.algebra = ghat;
  e.triple = triple;

  const SMat* Js[3] = {&triple.J1, &triple.J2, &triple.J3};
  int witness_idx[3] = {7, 2, 6};
  ObstructionStatus obs[3] = {ObstructionStatus::PsiVanishesOnCommutator,
                              ObstructionStatus::Obstructed,
                              ObstructionStatus::Obstructed};
  for (int a = 0; a < 3; ++a) {
    ExpectedStructure s;
    s.name = "J" + std::to_string(a + 1);
    s.J = *Js[a];
    s.psi = svec(8);
    s.psi[witness_idx[a]] = Scalar(-4);
    s.verdict = VerdictKind::NoInvariantSection;
    s.witness = witness_idx[a];
    s.obstruction = obs[a];
    if (a == 0) {
      s.lambda = Scalar(2);
      s.e0 = unit(8, 7);
      s.invariance = {{pi_period(1), invariant()}};
    }
    e.structures.push_back(s);
  }

  // ĝ = (R e8 ⊕ R e4) ⋉ n with n = span{e1,e2,e3,e5,e6,e7}.
  SubspaceBasis W;
  W.dim = 8;
  for (int j : {0, 1, 2, 4, 5, 6}) W.vectors.push_back(unit(8, j));
  auto nil = restrict_to(e.algebra, W);
  if (!nil) throw Error("hypercomplex_ghat: nilradical restriction failed");
  // Coordinates in n-order: (e1, e2, e3, e5, e6, e7).
  StructuredDerivation A = StructuredDerivation::zero(6);  // ad e8
  A.rot_blocks = {{-1, unit(6, 1), unit(6, 4)}, {1, unit(6, 2), unit(6, 5)}};
  StructuredDerivation Bm = StructuredDerivation::zero(6);  // ad e4
  Bm.real_blocks = {{-1, {unit(6, 1), unit(6, 4)}}, {1, {unit(6, 2), unit(6, 5)}}};
  HyperbolicPattern pat;
  pat.n = 6;
  pat.unit = {p.m, false};
  pat.fixed = {0, 3};
  pat.pairs = {{1, 2, true}, {4, 5, true}};  // α⁻¹ on e2/e6, α on e3/e7
  NamedCertificate c;
  c.name = "Gamma_m";
  c.cert.k = 2;
  c.cert.n = *nil;
  c.cert.B = {A, Bm};
  c.cert.times = {TimeValue::pi(), unit_time(p.m)};
  c.cert.P = hyperbolic_conjugator(pat);
  SMat expA(6, 6);
  int diag_sign[6] = {1, -1, -1, 1, -1, -1};
  for (int i = 0; i < 6; ++i) expA.at(i, i) = Scalar(diag_sign[i]);
  c.expected_conjugates = {expA, std::nullopt};
  e.certificates.push_back(std::move(c));
  return e;
}

}  // namespace

std::pair<LieAlgebra, SMat> fp1_construct(const FP1Data& d) {
  int k1 = 2 * d.half - 2;
  if (d.A.rows() != k1 || d.eta.rows() != k1 || d.J1.rows() != k1)
    throw DomainError("fp1: block size mismatch");
  if (!d.a.is_real()) throw DomainError("fp1: a must be real");
  if (d.eta.transpose() != -d.eta)
    throw DomainError("fp1: eta must be antisymmetric");
  if (d.J1 * d.J1 != -SMat::identity(k1))
    throw DomainError("fp1: J1² ≠ −I");
  if (d.A * d.J1 != d.J1 * d.A)
    throw DomainError("fp1: violated equation A J1 = J1 A");
  if (d.J1.transpose() * d.eta * d.J1 != d.eta)
    throw DomainError("fp1: violated equation eta(J·,J·) = eta");
  if (d.A.transpose() * d.eta + d.eta * d.A != d.eta * d.a)
    throw DomainError("fp1: violated equation A*eta = a eta");

  int dim = 2 * d.half;
  LieAlgebra g(dim);
  // Basis: e1 (= [n,n]), k1 = e2 … e_{2n−1}, e_{2n}.
  for (int i = 0; i < k1; ++i)
    for (int j = i + 1; j < k1; ++j)
      if (!d.eta.at(i, j).is_zero())
        g.add_bracket(1 + i, 1 + j, 0, -d.eta.at(i, j));
  if (!d.a.is_zero()) g.add_bracket(dim - 1, 0, 0, d.a);
  for (int i = 0; i < k1; ++i)
    for (int l = 0; l < k1; ++l)
      if (!d.A.at(l, i).is_zero())
        g.add_bracket(dim - 1, 1 + i, 1 + l, d.A.at(l, i));
  auto jac = validate_jacobi(g);
  if (!jac.pass) throw Error("fp1: construction violates Jacobi");

  SMat J(dim, dim);
  set_pair(J, 0, dim - 1);  // J e1 = e_{2n}
  for (int i = 0; i < k1; ++i)
    for (int l = 0; l < k1; ++l) J.at(1 + l, 1 + i) = d.J1.at(l, i);
  return {g, J};
}

std::pair<LieAlgebra, SMat> fp2_construct(const FP2Data& d) {
  int k2 = 2 * d.half - 4;
  if (d.A.rows() != k2 || d.xi.rows() != k2 ||
      static_cast<int>(d.alpha_cov.size()) != k2 ||
      static_cast<int>(d.gamma_cov.size()) != k2 ||
      static_cast<int>(d.v.size()) != k2)
    throw DomainError("fp2: block size mismatch");
  if (d.xi.transpose() != -d.xi)
    throw DomainError("fp2: xi must be antisymmetric");
  SMat Jk2 = standard_pairing(k2);
  if (d.A * Jk2 != Jk2 * d.A)
    throw DomainError("fp2: violated equation [A, J|k2] = 0");
  if (!((d.a2 - d.a1) * (d.a + d.a2 - d.a1)).is_zero())
    throw DomainError("fp2: violated equation (a2−a1)(a+a2−a1) = 0");
  if (d.A.transpose() * d.xi + d.xi * d.A != d.xi * d.a1)
    throw DomainError("fp2: violated equation A*xi = a1 xi");
  // Covector equation: (a−a1)β + β∘A + (a2−a1)γ − ι_v ξ = 0, β = γ + α∘J.
  SVec beta(k2);
  for (int i = 0; i < k2; ++i) {
    Scalar aj(0);
    for (int l = 0; l < k2; ++l)
      if (!Jk2.at(l, i).is_zero()) aj += d.alpha_cov[l] * Jk2.at(l, i);
    beta[i] = d.gamma_cov[i] + aj;
  }
  for (int i = 0; i < k2; ++i) {
    Scalar betaA(0);
    for (int l = 0; l < k2; ++l)
      if (!d.A.at(l, i).is_zero()) betaA += beta[l] * d.A.at(l, i);
    Scalar iv(0);
    for (int l = 0; l < k2; ++l)
      if (!d.v[l].is_zero()) iv += d.v[l] * d.xi.at(l, i);
    Scalar lhs = (d.a - d.a1) * beta[i] + betaA + (d.a2 - d.a1) * d.gamma_cov[i] - iv;
    if (!lhs.is_zero())
      throw DomainError(
          "fp2: violated equation (a−a1)β + A*β + (a2−a1)γ − ι_v ξ = 0");
  }

  int dim = 2 * d.half;
  int last = dim - 2;  // e_{2n−1}
  LieAlgebra g(dim);
  // η = ξ + β ∧ e^{2n−1} + (a2−a1) e² ∧ e^{2n−1}; [Y,Z] = −η(Y,Z) e1.
  for (int i = 0; i < k2; ++i)
    for (int j = i + 1; j < k2; ++j)
      if (!d.xi.at(i, j).is_zero())
        g.add_bracket(2 + i, 2 + j, 0, -d.xi.at(i, j));
  for (int i = 0; i < k2; ++i)
    if (!beta[i].is_zero()) g.add_bracket(2 + i, last, 0, -beta[i]);
  if (!(d.a2 - d.a1).is_zero()) g.add_bracket(1, last, 0, -(d.a2 - d.a1));
  // ad e_{2n}.
  if (!d.a1.is_zero()) g.add_bracket(dim - 1, 0, 0, d.a1);
  if (!d.a2.is_zero()) g.add_bracket(dim - 1, 1, 1, d.a2);
  for (int i = 0; i < k2; ++i) {
    if (!d.alpha_cov[i].is_zero())
      g.add_bracket(dim - 1, 2 + i, 0, d.alpha_cov[i]);
    if (!d.gamma_cov[i].is_zero())
      g.add_bracket(dim - 1, 2 + i, 1, d.gamma_cov[i]);
    for (int l = 0; l < k2; ++l)
      if (!d.A.at(l, i).is_zero())
        g.add_bracket(dim - 1, 2 + i, 2 + l, d.A.at(l, i));
  }
  if (!d.v1.is_zero()) g.add_bracket(dim - 1, last, 0, d.v1);
  if (!d.v2.is_zero()) g.add_bracket(dim - 1, last, 1, d.v2);
  for (int l = 0; l < k2; ++l)
    if (!d.v[l].is_zero()) g.add_bracket(dim - 1, last, 2 + l, d.v[l]);
  if (!d.a.is_zero()) g.add_bracket(dim - 1, last, last, d.a);
  auto jac = validate_jacobi(g);
  if (!jac.pass) throw Error("fp2: construction violates Jacobi");
  return {g, standard_pairing(dim)};
}

const std::vector<std::string>& catalog_list() {
  static const std::vector<std::string> names = {
      "kodaira",  "inoue_s0", "g1",     "g2_alpha",
      "nakamura_s", "nakamura_s_n", "an1_i", "an1_ii",
      "an2_i",    "an2_ii",   "g_p",    "s_6_44",
      "nakamura_splitting_jb", "hypercomplex_ghat",
  };
  return names;
}

CatalogEntry catalog_build(const std::string& name,
                           const CatalogParams& params) {
  if (params.m < 3) throw DomainError("catalog: m must be ≥ 3");
  if (name == "kodaira") return build_kodaira(params);
  if (name == "inoue_s0") return build_inoue(params);
  if (name == "g1") return build_g1(params);
  if (name == "g2_alpha") return build_g2(params);
  if (name == "nakamura_s") return build_nakamura_s(params);
  if (name == "nakamura_s_n") return build_sn(params);
  if (name == "an1_i") return build_an1_i(params);
  if (name == "an1_ii") return build_an1_ii(params);
  if (name == "an2_i") return build_an2_i(params);
  if (name == "an2_ii") return build_an2_ii(params);
  if (name == "g_p") return build_gp(params);
  if (name == "s_6_44") return build_s644(params);
  if (name == "nakamura_splitting_jb") return build_splitting(params);
  if (name == "hypercomplex_ghat") return build_ghat(params);
  throw DomainError("catalog: unknown entry '" + name + "'");
}

}  // namespace ckit
