#include "ckit/hypercomplex.hpp"

namespace ckit {

TripleReport validate_triple(const LieAlgebra& L, const HypercomplexTriple& T) {
  if (L.dim() % 4 != 0)
    throw DomainError("hypercomplex: dimension must be a multiple of 4");
  TripleReport rep;
  const SMat* Js[3] = {&T.J1, &T.J2, &T.J3};
  for (int a = 0; a < 3; ++a) {
    try {
      require_almost_complex(L, *Js[a]);
    } catch (const DomainError& e) {
      return {false, "J" + std::to_string(a + 1) + ": " + e.what()};
    }
  }
  if (T.J1 * T.J2 != T.J3) return {false, "J1·J2 ≠ J3"};
  if (T.J2 * T.J1 != -T.J3) return {false, "J2·J1 ≠ −J3"};
  for (int a = 0; a < 3; ++a)
    if (!is_integrable(L, *Js[a]))
      return {false, "J" + std::to_string(a + 1) + " is not integrable"};
  return rep;
}

SpherePoint::SpherePoint(mpq_class x, mpq_class y, mpq_class z)
    : a1(std::move(x)), a2(std::move(y)), a3(std::move(z)) {
  a1.canonicalize();
  a2.canonicalize();
  a3.canonicalize();
  if (a1 * a1 + a2 * a2 + a3 * a3 != 1)
    throw DomainError("SpherePoint: a₁² + a₂² + a₃² ≠ 1");
}

SMat sphere_cs(const HypercomplexTriple& T, const SpherePoint& a) {
  SMat J = T.J1 * Scalar(mpq_class(a.a1)) + T.J2 * Scalar(mpq_class(a.a2)) +
           T.J3 * Scalar(mpq_class(a.a3));
  if (J * J != -SMat::identity(J.rows()))
    throw Error("sphere_cs: J_a² ≠ −I (quaternion relations violated)");
  return J;
}

ObataTable obata(const LieAlgebra& L, const HypercomplexTriple& T) {
  auto rep = validate_triple(L, T);
  if (!rep.pass) throw DomainError("obata: invalid triple: " + rep.detail);
  int n = L.dim();
  Scalar half = Scalar::rational(1, 2);
  ObataTable table;
  table.nabla.assign(n, std::vector<SVec>(n));
  auto nabla = [&](const SVec& x, const SVec& y) {
    SVec j1x = T.J1.apply(x);
    return half * (L.bracket(x, y) + T.J1.apply(L.bracket(j1x, y)) -
                   T.J2.apply(L.bracket(x, T.J2.apply(y))) +
                   T.J3.apply(L.bracket(j1x, T.J2.apply(y))));
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table.nabla[i][j] = nabla(unit_vec(n, i), unit_vec(n, j));
  for (int i = 0; i < n && table.torsion_free; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!vec_is_zero(table.nabla[i][j] - table.nabla[j][i] -
                       L.bracket_basis(i, j))) {
        table.torsion_free = false;
        table.witness = "torsion at (e" + std::to_string(i + 1) + ",e" +
                        std::to_string(j + 1) + ")";
        break;
      }
  const SMat* Js[3] = {&T.J1, &T.J2, &T.J3};
  for (int a = 0; a < 3; ++a) {
    for (int i = 0; i < n && table.parallel[a]; ++i)
      for (int j = 0; j < n; ++j) {
        // ∇_{e_i}(J e_j) = J ∇_{e_i} e_j
        SVec lhs = svec(n);
        for (int l = 0; l < n; ++l)
          if (!Js[a]->at(l, j).is_zero())
            lhs = lhs + Js[a]->at(l, j) * table.nabla[i][l];
        if (!vec_is_zero(lhs - Js[a]->apply(table.nabla[i][j]))) {
          table.parallel[a] = false;
          table.witness = "∇J" + std::to_string(a + 1) + " ≠ 0 at (e" +
                          std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                          ")";
          break;
        }
      }
  }
  return table;
}

SphereCheckReport psi_sphere_check(const LieAlgebra& L,
                                   const HypercomplexTriple& T,
                                   const std::vector<SpherePoint>& samples) {
  SphereCheckReport rep;
  rep.psi_alpha = {psi(L, T.J1), psi(L, T.J2), psi(L, T.J3)};
  for (const auto& pa : rep.psi_alpha)
    if (vec_is_zero(pa)) rep.some_pole_trivial = true;
  for (const auto& a : samples) {
    SMat Ja = sphere_cs(T, a);
    SVec pa = psi(L, Ja);
    if (!vec_is_zero(pa)) rep.all_samples_trivial = false;
    SVec lin = Scalar(mpq_class(a.a1)) * rep.psi_alpha[0] +
               Scalar(mpq_class(a.a2)) * rep.psi_alpha[1] +
               Scalar(mpq_class(a.a3)) * rep.psi_alpha[2];
    if (!vec_is_zero(pa - lin)) rep.linear_in_a = false;
  }
  if (rep.some_pole_trivial && !rep.all_samples_trivial)
    throw Error("psi_sphere_check: a pole has ψ ≡ 0 but a sample does not");
  return rep;
}

std::vector<SpherePoint> default_sphere_samples() {
  using Q = mpq_class;
  return {
      {1, 0, 0},
      {0, 1, 0},
      {0, 0, 1},
      {-1, 0, 0},
      {Q(3, 5), Q(4, 5), 0},
      {Q(3, 5), 0, Q(-4, 5)},
      {0, Q(-3, 5), Q(4, 5)},
      {Q(2, 3), Q(2, 3), Q(1, 3)},
      {Q(1, 3), Q(-2, 3), Q(2, 3)},
      {Q(2, 7), Q(3, 7), Q(6, 7)},
      {Q(6, 7), Q(-2, 7), Q(-3, 7)},
      {Q(3, 13), Q(4, 13), Q(12, 13)},
      {Q(12, 13), Q(-3, 13), Q(4, 13)},
  };
}

std::pair<LieAlgebra, HypercomplexTriple> realification_double(
    const LieAlgebra& L, const SMat& J, const SubspaceBasis& g_plus) {
  require_almost_complex(L, J);
  int d = L.dim();
  if (2 * g_plus.rank() != d)
    throw DomainError("realification_double: g₊ must have half dimension");
  SubspaceBasis g_minus = image(J, g_plus);
  SubspaceBasis sum = g_plus;
  for (const auto& v : g_minus.vectors)
    if (!try_extend(sum, v))
      throw DomainError("realification_double: g ≠ g₊ ⊕ Jg₊");
  for (const auto& x : g_plus.vectors)
    for (const auto& y : g_plus.vectors)
      if (!contains(g_plus, L.bracket(x, y)))
        throw DomainError("realification_double: g₊ is not a subalgebra");
  for (const auto& x : g_minus.vectors)
    for (const auto& y : g_minus.vectors)
      if (!contains(g_minus, L.bracket(x, y)))
        throw DomainError("realification_double: Jg₊ is not a subalgebra");

  // ĝ = g ⊕ ig with complex-bilinear brackets.
  int n = 2 * d;
  LieAlgebra ghat(n);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k)
      for (const auto& [l, c] : L.bracket_jk(j, k)) {
        ghat.add_bracket(j, k, l, c);              // [x, y]
        ghat.add_bracket(j, d + k, d + l, c);      // [x, iy] = i[x,y]
        ghat.add_bracket(d + j, k, d + l, c);      // [ix, y] = i[x,y]
        ghat.add_bracket(d + j, d + k, l, -c);     // [ix, iy] = −[x,y]
      }

  // J₁: multiplication by i on g₊ ⊕ ig₊, by −i on g₋ ⊕ ig₋.
  SMat basis_pm(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      basis_pm.at(i, j) = j < g_plus.rank() ? g_plus.vectors[j][i]
                                            : g_minus.vectors[j - g_plus.rank()][i];
    }
  }
  auto inv = basis_pm.inverse();
  if (!inv) throw Error("realification_double: g₊ ⊕ g₋ basis singular");
  HypercomplexTriple T{SMat(n, n), SMat(n, n), SMat(n, n)};
  for (int j = 0; j < d; ++j) {
    // e_j = p + q; w = p − q determines J₁ e_j = i·w, J₁(i e_j) = −w.
    SVec coords = inv->apply(unit_vec(d, j));
    SVec w = svec(d);
    for (int c = 0; c < d; ++c) {
      SVec base = c < g_plus.rank() ? g_plus.vectors[c]
                                    : g_minus.vectors[c - g_plus.rank()];
      Scalar sign = c < g_plus.rank() ? Scalar(1) : Scalar(-1);
      w = w + (sign * coords[c]) * base;
    }
    for (int i = 0; i < d; ++i) {
      T.J1.at(d + i, j) = w[i];        // J₁ e_j = i·w
      T.J1.at(i, d + j) = -w[i];       // J₁ (i e_j) = −w
    }
    for (int i = 0; i < d; ++i) {
      T.J2.at(i, j) = J.at(i, j);          // J₂(x + iy) = Jx + iJy
      T.J2.at(d + i, d + j) = J.at(i, j);
    }
  }
  T.J3 = T.J1 * T.J2;
  auto rep = validate_triple(ghat, T);
  if (!rep.pass)
    throw Error("realification_double: constructed triple invalid: " +
                rep.detail);
  return {ghat, T};
}

}  // namespace ckit
