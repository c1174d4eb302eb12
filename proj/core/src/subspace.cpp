#include "ckit/subspace.hpp"

namespace ckit {

SubspaceBasis span_of(int dim, const std::vector<SVec>& generators) {
  SubspaceBasis s;
  s.dim = dim;
  for (const auto& g : generators) try_extend(s, g);
  return s;
}

bool try_extend(SubspaceBasis& space, const SVec& v) {
  if (static_cast<int>(v.size()) != space.dim)
    throw DomainError("subspace: vector dimension mismatch");
  if (vec_is_zero(v)) return false;
  auto cols = space.vectors;
  cols.push_back(v);
  SMat m = from_cols(cols, space.dim);
  if (m.rank() == static_cast<int>(cols.size())) {
    space.vectors.push_back(v);
    return true;
  }
  return false;
}

bool contains(const SubspaceBasis& space, const SVec& v) {
  if (vec_is_zero(v)) return true;
  auto cols = space.vectors;
  cols.push_back(v);
  return from_cols(cols, space.dim).rank() == space.rank();
}

bool contains_all(const SubspaceBasis& space, const SubspaceBasis& other) {
  for (const auto& v : other.vectors)
    if (!contains(space, v)) return false;
  return true;
}

bool same_space(const SubspaceBasis& a, const SubspaceBasis& b) {
  return a.rank() == b.rank() && contains_all(a, b);
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  SubspaceBasis out;
  out.dim = a.dim;
  if (a.empty() || b.empty()) return out;
  // Solutions of A x = B y give the intersection as {A x}.
  SMat m(a.dim, a.rank() + b.rank());
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.rank(); ++j) m.at(i, j) = a.vectors[j][i];
    for (int j = 0; j < b.rank(); ++j)
      m.at(i, a.rank() + j) = -b.vectors[j][i];
  }
  for (const auto& k : m.kernel()) {
    SVec v = svec(a.dim);
    for (int j = 0; j < a.rank(); ++j) v = v + k[j] * a.vectors[j];
    // Canonical representative: leading coefficient one.
    for (const auto& x : v)
      if (!x.is_zero()) {
        v = x.inverse() * v;
        break;
      }
    try_extend(out, v);
  }
  return out;
}

SubspaceBasis image(const SMat& m, const SubspaceBasis& space) {
  SubspaceBasis out;
  out.dim = m.rows();
  for (const auto& v : space.vectors) try_extend(out, m.apply(v));
  return out;
}

std::optional<SVec> coordinates_in(const SubspaceBasis& space, const SVec& v) {
  if (space.empty()) {
    if (vec_is_zero(v)) return svec(0);
    return std::nullopt;
  }
  return from_cols(space.vectors, space.dim).solve(v);
}

}  // namespace ckit
