#pragma once

#include "ckit/cstruct.hpp"

namespace ckit {

/// Basis of (1,0)-forms from the splitting g = (g'∩Jg') ⊕ u ⊕ Ju ⊕ v:
/// the first s real parts u^j are closed, the remaining pairs lie in
/// g' ∩ Jg'.
struct NiceBasis {
  int s;  // number of closed coordinates
  Coframe coframe;
  SubspaceBasis g_cap_Jg;  // g' ∩ Jg'
  SubspaceBasis u_space;   // complement of g'∩Jg' in g'
  SubspaceBasis v_space;   // J-invariant complement of g' ⊕ Ju
};

/// Requires L solvable and J integrable.
NiceBasis nice_basis(const LieAlgebra& L, const SMat& J);

/// Rank-one exponent data: τ = e^{iλt}σ along the coordinate e₀.
struct RankOneData {
  SVec e0;
  Scalar lambda;  // −½ Tr(J ad e₀)
};

/// Descriptor of the closed form τ = e^{−f}σ with df = α.
struct SectionDescriptor {
  Form sigma;  // invariant (n,0)-form from the nice basis
  std::vector<Form> sigma_factors;  // the γ_j with σ = γ_1 ∧ … ∧ γ_n
  Form alpha;  // closed 1-form with dσ = α∧σ; zero in the invariant case
  std::vector<Scalar> C;  // C_j = −ψ(v_j) + iψ(u_j), one per coframe pair
  int s = 0;
  std::vector<SVec> closed_coords;  // u_j for j ≤ s
  std::optional<RankOneData> rank_one;
};

/// Builds the trivializing-section descriptor; degenerates to α = 0 when
/// ψ ≡ 0. Requires L solvable and J integrable.
SectionDescriptor build_section(const LieAlgebra& L, const SMat& J);

/// λ = −½ Tr(J ad e₀) for the explicit exponential section. Requires
/// ψ([g,g]) = 0, ψ(e₀) ≠ 0 and J e₀ ∈ Ker ψ.
Scalar explicit_rank_one(const LieAlgebra& L, const SMat& J, const SVec& e0);

struct SectionCheck {
  bool pass = true;
  std::string failing_identity;  // "dalpha != 0" or "alpha^sigma != dsigma"
};

/// dα = 0 and α∧σ = dσ, both exact.
SectionCheck verify_section(const LieAlgebra& L, const SMat& J,
                            const SectionDescriptor& S);

/// Lattice period of a closed coordinate: p = q·π or plain rational q.
struct Period {
  bool pi_multiple = true;
  mpq_class q = 1;

  static Period pi(mpq_class mult) { return {true, std::move(mult)}; }
  static Period rational(mpq_class val) { return {false, std::move(val)}; }
  std::string str() const;
  static Period parse(std::string_view text);  // "2pi", "pi", "pi/2", "3/2pi", "1"
};

enum class InvarianceKind { Invariant, TorsionOrder, NotPeriodic };

struct InvarianceResult {
  InvarianceKind kind;
  long long order = 1;  // least k with kλp ∈ 2πZ, for TorsionOrder
};

/// Invariance of τ = e^{iλt}σ under translation of the closed coordinate by
/// the period. Requires a rank-one descriptor (the multi-coordinate case is
/// reported unsupported by throwing DomainError), except that α = 0 is
/// invariant for any period.
InvarianceResult lattice_invariance(const SectionDescriptor& S,
                                    const Period& p);
InvarianceResult lattice_invariance(const Scalar& lambda, const Period& p);

}  // namespace ckit
