#pragma once

#include <vector>

#include "ckit/matrix.hpp"

namespace ckit {

/// List of linearly independent coordinate vectors spanning a subspace.
struct SubspaceBasis {
  int dim = 0;                // ambient dimension
  std::vector<SVec> vectors;  // independent, in insertion order

  int rank() const { return static_cast<int>(vectors.size()); }
  bool empty() const { return vectors.empty(); }
};

/// Reduces an arbitrary generating set to an independent basis (keeps the
/// earliest generators, exact rank test).
SubspaceBasis span_of(int dim, const std::vector<SVec>& generators);

bool contains(const SubspaceBasis& space, const SVec& v);
bool contains_all(const SubspaceBasis& space, const SubspaceBasis& other);
bool same_space(const SubspaceBasis& a, const SubspaceBasis& b);

/// Adds v to the basis if independent; returns true when added.
bool try_extend(SubspaceBasis& space, const SVec& v);

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

/// Image of a subspace under a linear map.
SubspaceBasis image(const SMat& m, const SubspaceBasis& space);

/// Coordinates of v in the given basis; nullopt if v is outside the span.
std::optional<SVec> coordinates_in(const SubspaceBasis& space, const SVec& v);

}  // namespace ckit
