#include "ckit/cstruct.hpp"

namespace ckit {

void require_almost_complex(const LieAlgebra& L, const SMat& J) {
  int n = L.dim();
  if (J.rows() != n || J.cols() != n)
    throw DomainError("complex structure: size mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!J.at(i, j).is_real())
        throw DomainError("complex structure: entries must be real");
  if (J * J != -SMat::identity(n))
    throw DomainError("complex structure: J² ≠ −I");
}

namespace {

SVec nijenhuis_unchecked(const LieAlgebra& L, const SMat& J, const SVec& x,
                         const SVec& y) {
  SVec jx = J.apply(x), jy = J.apply(y);
  return L.bracket(x, y) +
         J.apply(L.bracket(jx, y) + L.bracket(x, jy)) - L.bracket(jx, jy);
}

}  // namespace

SVec nijenhuis(const LieAlgebra& L, const SMat& J, const SVec& x,
               const SVec& y) {
  require_almost_complex(L, J);
  return nijenhuis_unchecked(L, J, x, y);
}

std::optional<std::pair<int, int>> nijenhuis_witness(const LieAlgebra& L,
                                                     const SMat& J) {
  require_almost_complex(L, J);
  int n = L.dim();
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      if (!vec_is_zero(
              nijenhuis_unchecked(L, J, unit_vec(n, j), unit_vec(n, k))))
        return std::make_pair(j, k);
  return std::nullopt;
}

bool is_integrable(const LieAlgebra& L, const SMat& J) {
  require_almost_complex(L, J);
  bool tensor = !nijenhuis_witness(L, J).has_value();
  // Independent criterion: dγ_j has no (0,2) component for every γ_j.
  Coframe cf = adapted_coframe(L, J);
  bool grading = true;
  for (const auto& g : cf.gamma) {
    auto parts = bigrade(L, J, ce_d(L, g));
    if (parts.count({0, 2})) {
      grading = false;
      break;
    }
  }
  if (tensor != grading)
    throw Error("is_integrable: Nijenhuis and bigrading criteria disagree");
  return tensor;
}

bool is_abelian_cs(const LieAlgebra& L, const SMat& J) {
  require_almost_complex(L, J);
  int n = L.dim();
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      if (!vec_is_zero(L.bracket(J.col(j), J.col(k)) - L.bracket_basis(j, k)))
        return false;
  return true;
}

SVec psi(const LieAlgebra& L, const SMat& J) {
  require_almost_complex(L, J);
  int n = L.dim();
  SVec tr_ad(n);
  for (int j = 0; j < n; ++j) tr_ad[j] = L.ad(j).trace();
  SVec out(n);
  for (int j = 0; j < n; ++j) {
    Scalar t1 = (J * L.ad(j)).trace();
    Scalar t2(0);  // Tr ad(J e_j)
    for (int l = 0; l < n; ++l)
      if (!J.at(l, j).is_zero()) t2 += J.at(l, j) * tr_ad[l];
    out[j] = t1 - t2;
  }
  return out;
}

Scalar psi_value(const SVec& psi_covector, const SVec& x) {
  if (psi_covector.size() != x.size())
    throw DomainError("psi_value: dimension mismatch");
  Scalar v(0);
  for (std::size_t j = 0; j < x.size(); ++j) v += psi_covector[j] * x[j];
  return v;
}

TrivialityVerdict decide_invariant_trivial(const LieAlgebra& L,
                                           const SMat& J) {
  require_almost_complex(L, J);
  TrivialityVerdict v;
  v.psi_covector = psi(L, J);
  if (auto pair = nijenhuis_witness(L, J)) {
    v.kind = VerdictKind::NotIntegrable;
    v.witness_pair = pair;
    return v;
  }
  int bad = -1;
  for (int j = 0; j < L.dim(); ++j)
    if (!v.psi_covector[j].is_zero()) {
      bad = j;
      break;
    }
  Form sigma = sigma_form(adapted_coframe(L, J));
  Form dsigma = ce_d(L, sigma);
  if (bad < 0) {
    if (!dsigma.is_zero())
      throw Error("decide_invariant_trivial: ψ ≡ 0 but dσ ≠ 0");
    v.kind = VerdictKind::InvariantTrivial;
    v.sigma = sigma;
  } else {
    if (dsigma.is_zero())
      throw Error("decide_invariant_trivial: ψ ≠ 0 but dσ = 0");
    v.kind = VerdictKind::NoInvariantSection;
    v.witness_index = bad;
  }
  return v;
}

Form dsigma_beta(const LieAlgebra& L, const SMat& J) {
  if (!is_integrable(L, J))
    throw DomainError("dsigma_beta: J is not integrable");
  Coframe cf = adapted_coframe(L, J);
  SVec ps = psi(L, J);
  int n = L.dim();
  Form beta(n, 1);
  Scalar quarter = Scalar::rational(1, 4);
  for (std::size_t j = 0; j < cf.u.size(); ++j) {
    Scalar cj = -psi_value(ps, cf.v[j]) + Scalar::i() * psi_value(ps, cf.u[j]);
    beta = beta + cf.gamma_bar[j] * (quarter * cj);
  }
  Form sigma = sigma_form(cf);
  if (wedge(beta, sigma) != ce_d(L, sigma))
    throw Error("dsigma_beta: β∧σ ≠ dσ");
  return beta;
}

bool power_invariant_trivial(const LieAlgebra& L, const SMat& J, long long k) {
  if (k < 1) throw DomainError("power_invariant_trivial: k must be ≥ 1");
  return dsigma_beta(L, J).is_zero();
}

bool g10_unimodular(const LieAlgebra& L, const SMat& J) {
  if (!is_unimodular(L))
    throw DomainError("g10_unimodular: algebra is not unimodular");
  if (!is_integrable(L, J))
    throw DomainError("g10_unimodular: J is not integrable");
  bool result = true;
  for (int j = 0; j < L.dim(); ++j)
    if (!(J * L.ad(j)).trace().is_zero()) {
      result = false;
      break;
    }
  bool trivial =
      decide_invariant_trivial(L, J).kind == VerdictKind::InvariantTrivial;
  if (result != trivial)
    throw Error("g10_unimodular: disagrees with decide_invariant_trivial");
  return result;
}

SMat chern_ricci(const LieAlgebra& L, const SMat& J) {
  SVec ps = psi(L, J);
  int n = L.dim();
  SMat rho(n, n);
  Scalar half = Scalar::rational(1, 2);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Scalar v = half * psi_value(ps, L.bracket_basis(j, k));
      rho.at(j, k) = v;
      rho.at(k, j) = -v;
    }
  return rho;
}

ObstructionReport obstruction_check(const LieAlgebra& L, const SMat& J) {
  SVec ps = psi(L, J);
  int n = L.dim();
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      SVec br = L.bracket_basis(j, k);
      if (!psi_value(ps, br).is_zero())
        return {ObstructionStatus::Obstructed, std::make_pair(j, k), br};
    }
  return {ObstructionStatus::PsiVanishesOnCommutator, std::nullopt, svec(n)};
}

AlmostAbelianReport almost_abelian_report(const LieAlgebra& L, const SMat& J,
                                          const SubspaceBasis& u) {
  require_almost_complex(L, J);
  int n = L.dim();
  if (u.rank() != n - 1)
    throw DomainError("almost_abelian: ideal must have codimension one");
  for (const auto& x : u.vectors)
    for (const auto& y : u.vectors)
      if (!vec_is_zero(L.bracket(x, y)))
        throw DomainError("almost_abelian: ideal is not abelian");
  for (int j = 0; j < n; ++j)
    for (const auto& x : u.vectors)
      if (!contains(u, L.bracket(unit_vec(n, j), x)))
        throw DomainError("almost_abelian: u is not an ideal");

  AlmostAbelianReport rep;
  rep.e2n_index = -1;
  SubspaceBasis ext = u;
  for (int j = 0; j < n; ++j)
    if (try_extend(ext, unit_vec(n, j))) {
      rep.e2n_index = j;
      break;
    }
  SVec e2n = unit_vec(n, rep.e2n_index);
  SVec e1 = -Scalar(1) * J.apply(e2n);
  if (!contains(u, e1))
    throw DomainError("almost_abelian: J e_2n must lie in u");

  SubspaceBasis Ju = image(J, u);
  SubspaceBasis uJu = intersect(u, Ju);
  if (uJu.rank() != n - 2)
    throw DomainError("almost_abelian: u ∩ Ju has wrong dimension");
  // Basis of u adapted to u = R e1 ⊕ (u ∩ Ju).
  SubspaceBasis adapted;
  adapted.dim = n;
  try_extend(adapted, e1);
  for (const auto& w : uJu.vectors) try_extend(adapted, w);
  if (adapted.rank() != n - 1)
    throw DomainError("almost_abelian: e1 lies in u ∩ Ju");

  // B = ad e_2n on u in the adapted basis; require the block form
  // [a 0; v A] (u ∩ Ju is B-invariant is part of the compatibility).
  SMat B_ad = L.ad(rep.e2n_index);
  SVec Be1 = B_ad.apply(e1);
  auto coords = coordinates_in(adapted, Be1);
  if (!coords) throw DomainError("almost_abelian: B does not preserve u");
  rep.a = (*coords)[0];
  int m = uJu.rank();
  SMat A(m, m), J1(m, m);
  for (int j = 0; j < m; ++j) {
    SVec bw = B_ad.apply(uJu.vectors[j]);
    auto bc = coordinates_in(uJu, bw);
    if (!bc)
      throw DomainError("almost_abelian: ad e_2n does not preserve u ∩ Ju");
    SVec jw = J.apply(uJu.vectors[j]);
    auto jc = coordinates_in(uJu, jw);
    if (!jc) throw DomainError("almost_abelian: J does not preserve u ∩ Ju");
    for (int i = 0; i < m; ++i) {
      A.at(i, j) = (*bc)[i];
      J1.at(i, j) = (*jc)[i];
    }
  }
  if (A * J1 != J1 * A)
    throw DomainError("almost_abelian: A does not commute with J₁");
  rep.tr_A = A.trace();
  rep.tr_J1A = (J1 * A).trace();
  Scalar half = Scalar::rational(1, 2);
  rep.invariant_trivial =
      (rep.a + half * rep.tr_A).is_zero() && rep.tr_J1A.is_zero();
  rep.unimodular_conditions =
      rep.a.is_zero() && rep.tr_A.is_zero() && rep.tr_J1A.is_zero();
  return rep;
}

}  // namespace ckit
