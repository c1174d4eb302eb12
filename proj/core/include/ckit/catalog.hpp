#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ckit/hypercomplex.hpp"
#include "ckit/lattices.hpp"
#include "ckit/sections.hpp"

namespace ckit {

/// Data for the almost-nilpotent constructor with J[n,n] orthogonal to n:
/// the nilradical is the central extension [Y,Z] = −η(Y,Z)e₁ of an abelian
/// k₁, ad e_{2n} acts as a on e₁ and as A on k₁. η is stored as the
/// antisymmetric matrix η(κ_i, κ_j).
struct FP1Data {
  int half = 0;  // algebra dimension is 2·half
  Scalar a;
  SMat A;    // on k₁ (2·half − 2)
  SMat eta;  // antisymmetric, on k₁
  SMat J1;   // complex structure on k₁
};

/// Validates A J₁ = J₁ A, η(J·,J·) = η, A*η = aη and returns the algebra
/// with its complex structure (Je₁ = e_{2n}); violations throw DomainError
/// naming the failed equation.
std::pair<LieAlgebra, SMat> fp1_construct(const FP1Data& d);

/// Data for the constructor with J[n,n] ⊂ n. J is the standard pairing
/// Je_{2j−1} = e_{2j}; covectors α, γ and the 2-form ξ live on k₂.
struct FP2Data {
  int half = 0;
  Scalar a, a1, a2, v1, v2;
  SMat A;               // on k₂ (2·half − 4)
  SVec alpha_cov, gamma_cov;  // covectors on k₂
  SVec v;               // vector in k₂
  SMat xi;              // antisymmetric, on k₂
};

/// Validates [A, J|k₂] = 0 and the three structure equations; violations
/// throw DomainError naming the failed equation.
std::pair<LieAlgebra, SMat> fp2_construct(const FP2Data& d);

struct ExpectedStructure {
  std::string name;
  SMat J;
  bool integrable = true;
  bool abelian = false;
  SVec psi;
  VerdictKind verdict = VerdictKind::InvariantTrivial;
  int witness = -1;  // basis index for NoInvariantSection
  ObstructionStatus obstruction = ObstructionStatus::PsiVanishesOnCommutator;
  std::optional<Scalar> lambda;
  std::optional<SVec> e0;  // expected rank-one coordinate
  std::vector<std::pair<Period, InvarianceResult>> invariance;
};

struct NamedCertificate {
  std::string name;
  LatticeCertificate cert;
  std::vector<std::optional<SMat>> expected_conjugates;  // per generator
};

struct CatalogEntry {
  std::string name;
  std::string note;
  LieAlgebra algebra;
  std::vector<ExpectedStructure> structures;
  std::optional<HypercomplexTriple> triple;
  std::vector<NamedCertificate> certificates;

  /// Companion presentation with a structure-intertwining isomorphism
  /// φ: source → algebra (φ∘J_src = J_dst∘φ and φ[x,y] = [φx, φy]).
  struct Companion {
    LieAlgebra source;
    SMat source_J;
    SMat phi;
    std::string dst_structure;
    Companion() : source(1) {}
  };
  std::optional<Companion> companion;

  CatalogEntry() : algebra(1) {}
};

struct CatalogParams {
  long long m = 3;  // lattice parameter, m ≥ 3
  long long n = 1;  // family size
  std::map<std::string, Scalar> scalars;  // b, alpha, r, s, v1, v2, p
  std::vector<mpq_class> angles;          // rotation rates (units of π)
};

/// Builds a catalog entry; throws DomainError on invalid parameters.
CatalogEntry catalog_build(const std::string& name,
                           const CatalogParams& params = {});

/// Entry names in stable order.
const std::vector<std::string>& catalog_list();

}  // namespace ckit
