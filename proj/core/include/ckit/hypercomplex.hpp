#pragma once

#include "ckit/cstruct.hpp"

namespace ckit {

struct HypercomplexTriple {
  SMat J1, J2, J3;
};

struct TripleReport {
  bool pass = true;
  std::string detail;
};

/// Quaternion relations J₁J₂ = J₃ = −J₂J₁, J_α² = −I, and integrability of
/// all three structures. Throws DomainError when dim is not a multiple of 4.
TripleReport validate_triple(const LieAlgebra& L, const HypercomplexTriple& T);

/// Rational point of the sphere of complex structures.
struct SpherePoint {
  mpq_class a1, a2, a3;

  SpherePoint(mpq_class x, mpq_class y, mpq_class z);  // validates unit norm
};

/// J_a = a₁J₁ + a₂J₂ + a₃J₃; J_a² = −I is re-checked.
SMat sphere_cs(const HypercomplexTriple& T, const SpherePoint& a);

/// Table of Obata covariant derivatives ∇_{e_i} e_j.
struct ObataTable {
  std::vector<std::vector<SVec>> nabla;  // nabla[i][j] = ∇_{e_i} e_j
  bool torsion_free = true;
  bool parallel[3] = {true, true, true};  // ∇J_α = 0
  std::string witness;                    // first failing identity, if any
};

/// ∇_x y = ½([x,y] + J₁[J₁x,y] − J₂[x,J₂y] + J₃[J₁x,J₂y]); both defining
/// invariants (torsion-free, ∇J_α = 0) are checked on all basis pairs.
ObataTable obata(const LieAlgebra& L, const HypercomplexTriple& T);

struct SphereCheckReport {
  std::vector<SVec> psi_alpha;      // ψ for J₁, J₂, J₃
  bool some_pole_trivial = false;   // ψ_α ≡ 0 for some α
  bool all_samples_trivial = true;  // ψ_a ≡ 0 on every sampled a
  bool linear_in_a = true;          // ψ_a = a₁ψ₁ + a₂ψ₂ + a₃ψ₃ on samples
};

/// Evaluates ψ over sampled sphere points; when some pole has ψ ≡ 0 every
/// sample must too (enforced: Error on violation).
SphereCheckReport psi_sphere_check(const LieAlgebra& L,
                                   const HypercomplexTriple& T,
                                   const std::vector<SpherePoint>& samples);

/// Default rational sample set (poles plus Pythagorean-style points).
std::vector<SpherePoint> default_sphere_samples();

/// Realification of the complexification: for g = g₊ ⊕ Jg₊ with both
/// summands subalgebras, builds ĝ = (g_C)_R of twice the dimension with its
/// hypercomplex triple (J₁ = multiplication by i on g₊ ⊕ ig₊ and −i on the
/// conjugate part, J₂ the complexified J). Output passes validate_triple.
std::pair<LieAlgebra, HypercomplexTriple> realification_double(
    const LieAlgebra& L, const SMat& J, const SubspaceBasis& g_plus);

}  // namespace ckit
