#pragma once

#include <optional>

#include "ckit/forms.hpp"
#include "ckit/lie_algebra.hpp"

namespace ckit {

/// Throws DomainError unless J is a real matrix with J² = −I.
void require_almost_complex(const LieAlgebra& L, const SMat& J);

/// N_J(x,y) = [x,y] + J([Jx,y] + [x,Jy]) − [Jx,Jy].
SVec nijenhuis(const LieAlgebra& L, const SMat& J, const SVec& x,
               const SVec& y);

/// First basis pair with N_J ≠ 0, if any.
std::optional<std::pair<int, int>> nijenhuis_witness(const LieAlgebra& L,
                                                     const SMat& J);

/// Integrability, decided by the Nijenhuis tensor and cross-checked against
/// the bigrading criterion d(Λ^{1,0}) ⊆ Λ^{2,0} ⊕ Λ^{1,1}; the two must
/// agree or an Error is thrown.
bool is_integrable(const LieAlgebra& L, const SMat& J);

/// [Jx, Jy] = [x, y] on all pairs (implies integrability).
bool is_abelian_cs(const LieAlgebra& L, const SMat& J);

/// Canonical 1-form ψ(x) = Tr(J ad x) − Tr ad(Jx), as its values on the
/// basis.
SVec psi(const LieAlgebra& L, const SMat& J);
Scalar psi_value(const SVec& psi_covector, const SVec& x);

enum class VerdictKind { InvariantTrivial, NoInvariantSection, NotIntegrable };
enum class ObstructionStatus { PsiVanishesOnCommutator, Obstructed };

struct TrivialityVerdict {
  VerdictKind kind;
  SVec psi_covector;
  // NoInvariantSection: basis vector with ψ ≠ 0.
  std::optional<int> witness_index;
  // NotIntegrable: basis pair with N_J ≠ 0.
  std::optional<std::pair<int, int>> witness_pair;
  // InvariantTrivial: the closed invariant (n,0)-form.
  std::optional<Form> sigma;
};

/// Decides existence of a nonzero closed invariant (n,0)-form. On the
/// positive verdict σ is emitted and dσ = 0 re-checked; the negative verdict
/// carries a re-verifiable witness.
TrivialityVerdict decide_invariant_trivial(const LieAlgebra& L, const SMat& J);

/// The (0,1)-form β = ¼ Σ_j (−ψ(v_j) + i ψ(u_j)) γ̄_j with dσ = β∧σ.
/// Requires J integrable; the identity β∧σ = dσ is re-checked exactly.
Form dsigma_beta(const LieAlgebra& L, const SMat& J);

/// Invariant triviality of the k-th power of the canonical bundle; equal to
/// invariant triviality of the bundle itself (β = 0). k ≥ 1.
bool power_invariant_trivial(const LieAlgebra& L, const SMat& J, long long k);

/// Unimodularity of g^{1,0}: Tr(J ad x) = 0 for all x. Requires L unimodular
/// and J integrable; agreement with decide_invariant_trivial is enforced.
bool g10_unimodular(const LieAlgebra& L, const SMat& J);

/// Chern–Ricci form ρ(x,y) = ½(Tr(J ad[x,y]) − Tr ad(J[x,y])) as an
/// antisymmetric matrix on basis pairs. Metric-free.
SMat chern_ricci(const LieAlgebra& L, const SMat& J);

struct ObstructionReport {
  ObstructionStatus status;
  // For Obstructed: basis pair whose bracket has ψ ≠ 0, and that bracket.
  std::optional<std::pair<int, int>> witness_pair;
  SVec witness_bracket;
};

/// ψ([g,g]) = 0 test: failure means no compact quotient has holomorphically
/// torsion canonical bundle.
ObstructionReport obstruction_check(const LieAlgebra& L, const SMat& J);

struct AlmostAbelianReport {
  Scalar a;       // rate of ad e_2n on the line R·(−J e_2n)
  Scalar tr_A;    // trace of ad e_2n on u ∩ Ju
  Scalar tr_J1A;  // trace of J₁·A
  bool invariant_trivial;  // a + ½TrA = 0 and Tr(J₁A) = 0
  bool unimodular_conditions;  // a = 0, TrA = 0, Tr(J₁A) = 0
  int e2n_index;  // basis vector used as the complement generator
};

/// Almost-abelian diagnostics for a declared codimension-one abelian ideal u.
/// Throws DomainError when u is not an abelian codim-1 ideal or J does not
/// preserve the block structure.
AlmostAbelianReport almost_abelian_report(const LieAlgebra& L, const SMat& J,
                                          const SubspaceBasis& u);

}  // namespace ckit
