#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ckit/matrix.hpp"
#include "ckit/subspace.hpp"

namespace ckit {

/// Real Lie algebra given by its structure constants [e_j,e_k] = Σ c_jk^l e_l.
/// Only pairs j < k are stored; antisymmetry is forced by construction.
/// Structure constants must be real scalars.
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim, std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  const std::string& label(int j) const { return labels_[j]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Basis index for a label; -1 when unknown.
  int index_of(const std::string& label) const;

  /// Adds c·e_l to [e_j, e_k] (0-based indices, j ≠ k, any order).
  void add_bracket(int j, int k, int l, const Scalar& c);

  /// Coefficient of e_l in [e_j, e_k].
  Scalar c(int j, int k, int l) const;
  /// Sparse [e_j, e_k] as (l, coefficient) pairs, j < k.
  const std::vector<std::pair<int, Scalar>>& bracket_jk(int j, int k) const;

  SVec bracket(const SVec& x, const SVec& y) const;
  SVec bracket_basis(int j, int k) const;

  /// Matrix of ad(e_j) (columns: image of each basis vector).
  SMat ad(int j) const;
  SMat ad(const SVec& x) const;

  bool is_abelian() const;

  bool operator==(const LieAlgebra& o) const;

 private:
  int dim_;
  std::vector<std::string> labels_;
  // key = j*dim + k with j < k
  std::map<int, std::vector<std::pair<int, Scalar>>> brackets_;
};

struct JacobiReport {
  bool pass = true;
  // First failing triple (i < j < k) and the defect Σ cyclic [[e_i,e_j],e_k].
  int i = -1, j = -1, k = -1;
  SVec defect;
};
JacobiReport validate_jacobi(const LieAlgebra& L);

/// Tr(ad x) = 0 for every basis vector.
bool is_unimodular(const LieAlgebra& L);

struct StructureSubspaces {
  SubspaceBasis commutator;                 // [g, g]
  std::vector<SubspaceBasis> derived_series;   // g ⊇ g' ⊇ g'' ⊇ …
  std::vector<SubspaceBasis> lower_central;    // g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …
  SubspaceBasis center;
  bool is_solvable = false;
  bool is_nilpotent = false;
};
StructureSubspaces structure_subspaces(const LieAlgebra& L);

/// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
bool is_derivation(const LieAlgebra& L, const SMat& D);

/// Semidirect product R^k ⋉ n for commuting derivations B_1..B_k of n:
/// basis (t_1..t_k, n-basis), [t_j, x] = B_j x, abelian R^k factor.
/// Throws DomainError when some B_j is not a derivation or they fail to
/// commute.
LieAlgebra semidirect(int k, const LieAlgebra& n, const std::vector<SMat>& B,
                      std::vector<std::string> labels = {});

enum class NilradicalVerdict { Verified, NecessaryOnly, Rejected };

struct NilradicalReport {
  NilradicalVerdict verdict;
  std::string reason;
};

/// Checks a candidate nilradical W of a solvable algebra: Rejected unless W
/// is a nilpotent ideal containing [g,g]; Verified when maximality is decided
/// exactly (quotient codimension ≤ 2); NecessaryOnly otherwise.
NilradicalReport verify_nilradical(const LieAlgebra& L, const SubspaceBasis& W);

/// Structure constants of a subalgebra in the given basis; nullopt when the
/// span is not closed under the bracket.
std::optional<LieAlgebra> restrict_to(const LieAlgebra& L,
                                      const SubspaceBasis& W,
                                      std::vector<std::string> labels = {});

/// Re-expresses L in a new basis: new_basis[j] are coordinates of the new
/// basis vectors in the old one.
LieAlgebra change_basis(const LieAlgebra& L, const SMat& new_basis,
                        std::vector<std::string> labels = {});

}  // namespace ckit
