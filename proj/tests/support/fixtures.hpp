#pragma once

#include <random>

#include "ckit/catalog.hpp"

namespace ckit::fixtures {

// J e_a = e_b on an otherwise zero matrix.
inline void pair(SMat& J, int a, int b) {
  J.at(b, a) = Scalar(1);
  J.at(a, b) = Scalar(-1);
}

// Example algebra R ⋉ H3 with the rotation action (labels e0..e3).
inline LieAlgebra kodaira_algebra() {
  LieAlgebra g(4, {"e0", "e1", "e2", "e3"});
  g.add_bracket(1, 2, 3, Scalar(1));
  g.add_bracket(0, 1, 2, Scalar(1));
  g.add_bracket(0, 2, 1, Scalar(-1));
  return g;
}

inline SMat kodaira_J() {
  SMat J(4, 4);
  pair(J, 0, 3);
  pair(J, 1, 2);
  return J;
}

inline LieAlgebra heisenberg3() {
  LieAlgebra g(3);
  g.add_bracket(0, 1, 2, Scalar(1));
  return g;
}

inline LieAlgebra abelian(int n) { return LieAlgebra(n); }

// [e1, e2] = e2.
inline LieAlgebra aff_r() {
  LieAlgebra g(2);
  g.add_bracket(0, 1, 1, Scalar(1));
  return g;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  long long integer(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(gen);
  }
  mpq_class rational(long long max_num = 9, long long max_den = 9) {
    mpq_class q(static_cast<long>(integer(-max_num, max_num)),
                static_cast<long>(integer(1, max_den)));
    q.canonicalize();
    return q;
  }
  // Random element of the declared tower (d = 0 means Gaussian rational).
  Scalar scalar(long long d = 0, bool allow_imag = true) {
    mpq_class a = rational(), b = allow_imag ? rational() : 0,
              c = d ? rational() : 0, e = (d && allow_imag) ? rational() : 0;
    return Scalar::make(a, b, c, e, (c == 0 && e == 0) ? 0 : d);
  }
  SMat int_matrix(int n, long long lo = -2, long long hi = 2) {
    SMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = Scalar(integer(lo, hi));
    return m;
  }
  SMat invertible(int n) {
    for (;;) {
      SMat m = int_matrix(n);
      if (!m.det().is_zero()) return m;
    }
  }
};

// Random almost abelian algebra R ⋉ R^{2d−1} (always a Lie algebra).
inline LieAlgebra random_almost_abelian(Rng& rng, int half_dim) {
  int n = 2 * half_dim;
  LieAlgebra g(n);
  for (int j = 1; j < n; ++j)
    for (int l = 1; l < n; ++l) {
      Scalar c = Scalar(rng.integer(-2, 2));
      if (!c.is_zero()) g.add_bracket(0, j, l, c);
    }
  return g;
}

// Random almost complex structure: a conjugate of the standard pairing.
inline SMat random_acs(Rng& rng, int n) {
  SMat J0(n, n);
  for (int k = 0; k + 1 < n; k += 2) pair(J0, k, k + 1);
  SMat P = rng.invertible(n);
  return P * J0 * *P.inverse();
}

// Samples for the theorem-equivalence sweeps: catalog pairs, their rational
// basis changes, and random almost abelian algebras with random J.
struct Sample {
  LieAlgebra L;
  SMat J;
  std::string origin;
  Sample() : L(1) {}
};

inline std::vector<Sample> equivalence_samples(int random_count,
                                               unsigned seed = 20240811) {
  std::vector<Sample> out;
  Rng rng(seed);
  for (const auto& name : catalog_list()) {
    CatalogEntry e = catalog_build(name);
    if (e.algebra.dim() > 8) continue;
    for (const auto& s : e.structures) {
      Sample smp;
      smp.L = e.algebra;
      smp.J = s.J;
      smp.origin = name + "/" + s.name;
      out.push_back(smp);
      for (int r = 0; r < 4; ++r) {
        SMat P = rng.invertible(e.algebra.dim());
        Sample conj;
        conj.L = change_basis(e.algebra, P);
        conj.J = *P.inverse() * s.J * P;
        conj.origin = name + "/" + s.name + "/basis_change";
        out.push_back(conj);
      }
    }
  }
  for (int r = 0; r < random_count; ++r) {
    int half = static_cast<int>(rng.integer(2, 4));  // dim 4, 6 or 8
    Sample smp;
    smp.L = random_almost_abelian(rng, half);
    smp.J = random_acs(rng, 2 * half);
    smp.origin = "random_almost_abelian";
    out.push_back(smp);
  }
  return out;
}

inline Form random_form(Rng& rng, int dim, int degree, int terms = 4) {
  Form f(dim, degree);
  for (int t = 0; t < terms; ++t) {
    std::uint32_t mask = 0;
    while (std::popcount(mask) < degree)
      mask |= 1u << rng.integer(0, dim - 1);
    f.add(mask, rng.scalar());
  }
  return f;
}

}  // namespace ckit::fixtures
