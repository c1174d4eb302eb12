#include "ckit/sections.hpp"

#include <sstream>

namespace ckit {

namespace {

// Standard basis vectors lying in the subspace, followed by its own basis:
// keeps the constructed pairs coordinate-aligned whenever possible.
std::vector<SVec> aligned_candidates(const SubspaceBasis& space) {
  std::vector<SVec> out;
  for (int j = 0; j < space.dim; ++j) {
    SVec e = unit_vec(space.dim, j);
    if (contains(space, e)) out.push_back(e);
  }
  for (const auto& v : space.vectors) out.push_back(v);
  return out;
}

}  // namespace

NiceBasis nice_basis(const LieAlgebra& L, const SMat& J) {
  auto str = structure_subspaces(L);
  if (!str.is_solvable) throw DomainError("nice_basis: algebra is not solvable");
  if (!is_integrable(L, J))
    throw DomainError("nice_basis: J is not integrable");
  int n = L.dim();

  NiceBasis nb;
  const SubspaceBasis& gp = str.commutator;
  SubspaceBasis Jgp = image(J, gp);
  nb.g_cap_Jg = intersect(gp, Jgp);

  // u: complement of g'∩Jg' inside g'.
  nb.u_space.dim = n;
  SubspaceBasis acc = nb.g_cap_Jg;
  for (const auto& w : aligned_candidates(gp))
    if (try_extend(acc, w)) nb.u_space.vectors.push_back(w);

  // S = g' ⊕ Ju, J-invariant.
  SubspaceBasis S = gp;
  for (const auto& y : nb.u_space.vectors)
    if (!try_extend(S, J.apply(y)))
      throw Error("nice_basis: g' ∩ Ju ≠ 0");

  // v: J-invariant complement, greedy over the basis.
  nb.v_space.dim = n;
  std::vector<std::pair<SVec, SVec>> pairs;  // (u_j, v_j)
  for (int j = 0; j < n && S.rank() < n; ++j) {
    SVec x = unit_vec(n, j);
    if (!try_extend(S, x)) continue;
    SVec jx = J.apply(x);
    if (!try_extend(S, jx))
      throw Error("nice_basis: J-invariant complement completion failed");
    nb.v_space.vectors.push_back(x);
    nb.v_space.vectors.push_back(jx);
    pairs.emplace_back(x, jx);
  }
  // (y, Jy) with y = −J ỹ for every u-basis vector ỹ, so Jy = ỹ ∈ u; the
  // sign of ỹ is chosen so the closed coordinate y has positive leading
  // coefficient.
  for (const auto& yt : nb.u_space.vectors) {
    SVec y = -Scalar(1) * J.apply(yt);
    SVec yy = yt;
    for (const auto& c : y) {
      if (c.is_zero()) continue;
      if (c.sign() < 0) {
        y = -Scalar(1) * y;
        yy = -Scalar(1) * yy;
      }
      break;
    }
    pairs.emplace_back(y, yy);
  }
  nb.s = static_cast<int>(pairs.size());
  // Pairs inside g'∩Jg', greedy over coordinate-aligned candidates.
  SubspaceBasis done;
  done.dim = n;
  for (const auto& z : aligned_candidates(nb.g_cap_Jg)) {
    if (!try_extend(done, z)) continue;
    SVec jz = J.apply(z);
    if (!try_extend(done, jz))
      throw Error("nice_basis: J-pairing inside g'∩Jg' failed");
    pairs.emplace_back(z, jz);
  }
  if (static_cast<int>(pairs.size()) * 2 != n)
    throw Error("nice_basis: pairing does not exhaust the algebra");

  // Coframe from the chosen pairs.
  int half = n / 2;
  SMat U(n, n);
  for (int j = 0; j < half; ++j) {
    U.set_col(j, pairs[j].first);
    U.set_col(half + j, pairs[j].second);
  }
  auto Uinv = U.inverse();
  if (!Uinv) throw Error("nice_basis: degenerate pairing");
  Coframe cf;
  for (int j = 0; j < half; ++j) {
    cf.u.push_back(pairs[j].first);
    cf.v.push_back(pairs[j].second);
    SVec urow(n), vrow(n);
    for (int l = 0; l < n; ++l) {
      urow[l] = Uinv->at(j, l);
      vrow[l] = Uinv->at(half + j, l);
    }
    cf.u_dual.push_back(Form::covector(n, urow));
    cf.v_dual.push_back(Form::covector(n, vrow));
    cf.gamma.push_back(cf.u_dual.back() + cf.v_dual.back() * Scalar::i());
    cf.gamma_bar.push_back(cf.u_dual.back() - cf.v_dual.back() * Scalar::i());
  }
  nb.coframe = cf;

  for (int j = 0; j < nb.s; ++j)
    if (!ce_d(L, cf.u_dual[j]).is_zero())
      throw Error("nice_basis: u^j not closed for j ≤ s");
  for (int j = nb.s; j < half; ++j)
    if (!contains(nb.g_cap_Jg, cf.u[j]) || !contains(nb.g_cap_Jg, cf.v[j]))
      throw Error("nice_basis: trailing pair outside g'∩Jg'");
  return nb;
}

namespace {

// Deterministic choice of e₀ with ψ(e₀) ≠ 0 and J e₀ ∈ Ker ψ: basis vectors
// first, then J-images of Ker ψ with leading coefficient normalized to 1.
std::optional<SVec> pick_rank_one_e0(const LieAlgebra& L, const SMat& J,
                                     const SVec& ps) {
  int n = L.dim();
  for (int j = 0; j < n; ++j) {
    if (ps[j].is_zero()) continue;
    if (psi_value(ps, J.col(j)).is_zero()) return unit_vec(n, j);
  }
  SMat psi_row(1, n);
  for (int j = 0; j < n; ++j) psi_row.at(0, j) = ps[j];
  for (const auto& w : psi_row.kernel()) {
    SVec cand = J.apply(w);
    if (psi_value(ps, cand).is_zero()) continue;
    // ψ(J cand) = −ψ(w) = 0 automatically.
    for (int l = 0; l < n; ++l)
      if (!cand[l].is_zero()) return cand[l].inverse() * cand;
  }
  return std::nullopt;
}

}  // namespace

SectionDescriptor build_section(const LieAlgebra& L, const SMat& J) {
  NiceBasis nb = nice_basis(L, J);
  SVec ps = psi(L, J);
  int n = L.dim(), half = n / 2;

  SectionDescriptor S;
  S.s = nb.s;
  S.sigma = sigma_form(nb.coframe);
  S.sigma_factors = nb.coframe.gamma;
  S.alpha = Form(n, 1);
  Scalar half_s = Scalar::rational(1, 2);
  for (int j = 0; j < half; ++j) {
    Scalar cj = -psi_value(ps, nb.coframe.v[j]) +
                Scalar::i() * psi_value(ps, nb.coframe.u[j]);
    S.C.push_back(cj);
    if (j >= nb.s) {
      if (!cj.is_zero()) throw Error("build_section: C_j ≠ 0 beyond s");
      continue;
    }
    S.alpha = S.alpha + nb.coframe.u_dual[j] * (half_s * cj);
  }
  for (int j = 0; j < nb.s; ++j) S.closed_coords.push_back(nb.coframe.u[j]);

  bool psi_zero = vec_is_zero(ps);
  if (!psi_zero && obstruction_check(L, J).status ==
                       ObstructionStatus::PsiVanishesOnCommutator) {
    if (auto e0 = pick_rank_one_e0(L, J, ps)) {
      RankOneData r;
      r.e0 = *e0;
      r.lambda = explicit_rank_one(L, J, *e0);
      S.rank_one = r;
    }
  }
  auto check = verify_section(L, J, S);
  if (!check.pass)
    throw Error("build_section: descriptor failed verification at " +
                check.failing_identity);
  return S;
}

Scalar explicit_rank_one(const LieAlgebra& L, const SMat& J, const SVec& e0) {
  require_almost_complex(L, J);
  SVec ps = psi(L, J);
  if (obstruction_check(L, J).status != ObstructionStatus::PsiVanishesOnCommutator)
    throw DomainError("explicit_rank_one: ψ([g,g]) ≠ 0");
  if (psi_value(ps, e0).is_zero())
    throw DomainError("explicit_rank_one: e₀ ∈ Ker ψ");
  if (!psi_value(ps, J.apply(e0)).is_zero())
    throw DomainError("explicit_rank_one: J e₀ ∉ Ker ψ");
  Scalar lam = Scalar::rational(-1, 2) * (J * L.ad(e0)).trace();
  if (!lam.is_real()) throw Error("explicit_rank_one: λ not real");
  return lam;
}

SectionCheck verify_section(const LieAlgebra& L, const SMat& J,
                            const SectionDescriptor& S) {
  (void)J;
  if (!ce_d(L, S.alpha).is_zero()) return {false, "dalpha != 0"};
  if (wedge(S.alpha, S.sigma) != ce_d(L, S.sigma))
    return {false, "alpha^sigma != dsigma"};
  return {};
}

std::string Period::str() const {
  if (!pi_multiple) return rat_str(q);
  return q == 1 ? "pi" : rat_str(q) + "pi";
}

Period Period::parse(std::string_view text) {
  std::string s(text);
  // strip whitespace
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  auto pos = t.find("pi");
  if (pos == std::string::npos) {
    auto upos = t.find("\xcf\x80");  // π
    if (upos != std::string::npos) {
      t.replace(upos, 2, "pi");
      pos = upos;
    }
  }
  if (pos == std::string::npos) return Period::rational(parse_rat(t));
  std::string before = t.substr(0, pos), after = t.substr(pos + 2);
  mpq_class q(1);
  if (!before.empty() && before != "+") {
    if (before == "-")
      q = -1;
    else
      q = parse_rat(before);
  }
  if (!after.empty()) {
    if (after[0] != '/') throw ParseError("bad period suffix", pos + 2);
    q /= parse_rat(after.substr(1));
  }
  if (q <= 0) throw DomainError("period must be positive");
  return Period::pi(q);
}

InvarianceResult lattice_invariance(const Scalar& lambda, const Period& p) {
  if (!lambda.is_real()) throw DomainError("lattice_invariance: λ not real");
  if (lambda.is_zero()) return {InvarianceKind::Invariant, 1};
  // Invariant iff λp ∈ 2πZ; torsion order is the least k ≥ 1 with kλp ∈ 2πZ.
  if (!p.pi_multiple || !lambda.is_rational())
    return {InvarianceKind::NotPeriodic, 0};
  mpq_class ratio = lambda.rat() * p.q / 2;  // λp / 2π
  if (ratio.get_den() == 1) return {InvarianceKind::Invariant, 1};
  long long k = mpz_get_si(ratio.get_den().get_mpz_t());
  return {InvarianceKind::TorsionOrder, k};
}

InvarianceResult lattice_invariance(const SectionDescriptor& S,
                                    const Period& p) {
  if (S.alpha.is_zero()) return {InvarianceKind::Invariant, 1};
  if (!S.rank_one)
    throw DomainError(
        "lattice_invariance: multi-coordinate exponents unsupported");
  return lattice_invariance(S.rank_one->lambda, p);
}

}  // namespace ckit
