#include "ckit/lattices.hpp"

namespace ckit {

void QuadUnit::validate() const {
  if (minus) {
    if (m < 1) throw DomainError("QuadUnit: minus family needs m ≥ 1");
  } else {
    if (m < 3) throw DomainError("QuadUnit: plus family needs m ≥ 3 (m = 2 is degenerate)");
  }
}

Scalar QuadUnit::alpha() const {
  validate();
  return (Scalar(m) + Scalar::sqrt_int(disc())) * Scalar::rational(1, 2);
}

Scalar QuadUnit::alpha_inv() const { return alpha().inverse(); }

TimeValue unit_time(long long m) {
  if (m < 3) throw DomainError("unit_time: m must be ≥ 3");
  return TimeValue::log_unit(QuadUnit{m, false});
}

Transcendental Transcendental::merged(const Transcendental& o) const {
  if (!compatible_with(o))
    throw NotExactlyEvaluable("mixed transcendentals: " + str() + " vs " +
                              o.str());
  return kind == Kind::None ? o : *this;
}

std::string Transcendental::str() const {
  switch (kind) {
    case Kind::None:
      return "none";
    case Kind::Pi:
      return "pi";
    case Kind::UnitLog:
      return "log_unit(m=" + std::to_string(unit.m) +
             (unit.minus ? ",minus)" : ")");
  }
  return "?";
}

StructuredDerivation StructuredDerivation::zero(int n) {
  StructuredDerivation d;
  d.n = n;
  return d;
}

SMat StructuredDerivation::nilpotent_or_zero() const {
  if (nilpotent.rows() == n && nilpotent.cols() == n) return nilpotent;
  return SMat::zero(n, n);
}

namespace {

// Completes the listed vectors to a basis and conjugates the block-diagonal
// data back to standard coordinates.
SMat assemble(int n, const std::vector<SVec>& vectors,
              const SMat& block_data) {
  SubspaceBasis span;
  span.dim = n;
  std::vector<SVec> cols = vectors;
  for (const auto& v : cols)
    if (!try_extend(span, v))
      throw DomainError("StructuredDerivation: dependent block vectors");
  for (int j = 0; j < n && span.rank() < n; ++j)
    if (try_extend(span, unit_vec(n, j))) cols.push_back(unit_vec(n, j));
  SMat V = from_cols(cols, n);
  auto Vinv = V.inverse();
  if (!Vinv) throw DomainError("StructuredDerivation: block basis singular");
  SMat D(n, n);
  for (int i = 0; i < block_data.rows(); ++i)
    for (int j = 0; j < block_data.cols(); ++j) D.at(i, j) = block_data.at(i, j);
  return V * D * *Vinv;
}

}  // namespace

SMat StructuredDerivation::real_matrix() const {
  std::vector<SVec> vecs;
  std::vector<Scalar> rates;
  for (const auto& b : real_blocks)
    for (const auto& v : b.vectors) {
      vecs.push_back(v);
      rates.push_back(Scalar(mpq_class(b.rate)));
    }
  SMat block(n, n);
  for (std::size_t j = 0; j < rates.size(); ++j)
    block.at(static_cast<int>(j), static_cast<int>(j)) = rates[j];
  return assemble(n, vecs, block);
}

SMat StructuredDerivation::rot_matrix() const {
  std::vector<SVec> vecs;
  for (const auto& b : rot_blocks) {
    vecs.push_back(b.x);
    vecs.push_back(b.y);
  }
  SMat block(n, n);
  for (std::size_t p = 0; p < rot_blocks.size(); ++p) {
    Scalar r{mpq_class(rot_blocks[p].rate)};
    int i = static_cast<int>(2 * p);
    block.at(i + 1, i) = r;   // x ↦ rate·y
    block.at(i, i + 1) = -r;  // y ↦ −rate·x
  }
  return assemble(n, vecs, block);
}

void StructuredDerivation::validate(const LieAlgebra* algebra) const {
  SMat N = nilpotent_or_zero();
  SMat power = N;
  for (int k = 1; k < n && !power.is_zero(); ++k) power = power * N;
  if (!power.is_zero())
    throw DomainError("StructuredDerivation: N is not nilpotent");
  SMat R = real_matrix(), G = rot_matrix();
  if (N * R != R * N || N * G != G * N || R * G != G * R)
    throw DomainError("StructuredDerivation: parts do not commute");
  if (algebra) {
    if (algebra->dim() != n)
      throw DomainError("StructuredDerivation: dimension mismatch");
    if (!is_derivation(*algebra, N) || !is_derivation(*algebra, R) ||
        !is_derivation(*algebra, G))
      throw DomainError("StructuredDerivation: a part is not a derivation");
  }
}

namespace {

struct ExactFactor {
  Scalar value;
  Transcendental transcendental;  // None for pure scalars
};

// e^{t·rate·scale} for a real block.
Scalar real_factor(const TimeValue& t, const mpq_class& rate,
                   const StructuredDerivation::RealScale& scale) {
  if (rate == 0) return Scalar(1);
  mpq_class exponent = t.q * rate;
  if (exponent == 0) return Scalar(1);
  switch (t.kind) {
    case TimeValue::Kind::Rational:
      if (scale.unit_over_pi)
        throw NotExactlyEvaluable(
            "real block: log-unit/π scale at a rational time");
      throw NotExactlyEvaluable("real block: e^q with rational q ≠ 0");
    case TimeValue::Kind::PiMultiple: {
      if (!scale.unit_over_pi)
        throw NotExactlyEvaluable("real block: e^{qπ} has no exact value");
      if (exponent.get_den() != 1)
        throw NotExactlyEvaluable(
            "real block: non-integer power of the unit");
      return scale.unit.alpha().pow(mpz_get_si(exponent.get_num().get_mpz_t()));
    }
    case TimeValue::Kind::UnitLog: {
      if (scale.unit_over_pi)
        throw NotExactlyEvaluable("real block: log²-type exponent");
      if (exponent.get_den() != 1)
        throw NotExactlyEvaluable(
            "real block: non-integer power of the unit");
      return t.unit.alpha().pow(mpz_get_si(exponent.get_num().get_mpz_t()));
    }
  }
  throw NotExactlyEvaluable("real block: unreachable");
}

// (cos, sin) at angle q·π; q must be a multiple of 1/2 or 1/3.
std::pair<Scalar, Scalar> cos_sin_pi(const mpq_class& q) {
  mpq_class r = q;
  r.canonicalize();
  long long den = mpz_get_si(r.get_den().get_mpz_t());
  // reduce modulo 2 (period 2π)
  mpz_class num_mod = r.get_num();
  mpz_class period = 2 * r.get_den();
  num_mod %= period;
  if (num_mod < 0) num_mod += period;
  long long p = mpz_get_si(num_mod.get_mpz_t());
  if (den == 1) return {Scalar(p % 2 == 0 ? 1 : -1), Scalar(0)};
  if (den == 2) return {Scalar(0), Scalar(p % 4 == 1 ? 1 : -1)};
  if (den == 3) {
    Scalar half = Scalar::rational(1, 2);
    Scalar s3 = Scalar::sqrt_int(3) * half;
    switch (p % 6) {
      case 1: return {half, s3};
      case 2: return {-half, s3};
      case 4: return {-half, -s3};
      case 5: return {half, -s3};
    }
  }
  throw NotExactlyEvaluable("rotation block: angle " + rat_str(q) +
                            "π outside the supported π/2, π/3 grid");
}

// Rotation angle of a block as a rational multiple of π.
mpq_class rot_angle(const TimeValue& t, const mpq_class& rate,
                    bool scale_pi) {
  if (rate == 0) return 0;
  mpq_class product = t.q * rate;
  if (product == 0) return 0;
  switch (t.kind) {
    case TimeValue::Kind::Rational:
      if (!scale_pi)
        throw NotExactlyEvaluable("rotation block: angle not a multiple of π");
      return product;
    case TimeValue::Kind::PiMultiple:
      if (scale_pi)
        throw NotExactlyEvaluable("rotation block: π²-type angle");
      return product;
    case TimeValue::Kind::UnitLog:
      throw NotExactlyEvaluable("rotation block: log-unit angle");
  }
  throw NotExactlyEvaluable("rotation block: unreachable");
}

Mat<TScalar> to_t(const SMat& m) {
  Mat<TScalar> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.at(i, j) = TScalar(m.at(i, j));
  return out;
}

}  // namespace

Mat<TScalar> lift(const SMat& m) { return to_t(m); }

ExactExp exp_exact(const StructuredDerivation& D, const TimeValue& t) {
  D.validate();
  int n = D.n;
  Transcendental needed;

  // Real-semisimple factor.
  std::vector<SVec> rvecs;
  std::vector<Scalar> rvals;
  for (const auto& b : D.real_blocks) {
    Scalar f = real_factor(t, b.rate, D.real_scale);
    for (const auto& v : b.vectors) {
      rvecs.push_back(v);
      rvals.push_back(f);
    }
  }
  SMat rblock = SMat::identity(n);
  for (std::size_t j = 0; j < rvals.size(); ++j)
    rblock.at(static_cast<int>(j), static_cast<int>(j)) = rvals[j];
  SMat Er = assemble(n, rvecs, rblock);

  // Rotation factor.
  std::vector<SVec> tvecs;
  SMat tblock = SMat::identity(n);
  int slot = 0;
  for (const auto& b : D.rot_blocks) {
    auto [c, s] = cos_sin_pi(rot_angle(t, b.rate, D.rot_scale_pi));
    tvecs.push_back(b.x);
    tvecs.push_back(b.y);
    tblock.at(slot, slot) = c;
    tblock.at(slot + 1, slot + 1) = c;
    tblock.at(slot + 1, slot) = s;   // x ↦ cos·x + sin·y
    tblock.at(slot, slot + 1) = -s;  // y ↦ −sin·x + cos·y
    slot += 2;
  }
  SMat Et = assemble(n, tvecs, tblock);

  // Nilpotent factor, with t as a T-coefficient when t is irrational.
  SMat N = D.nilpotent_or_zero();
  Mat<TScalar> En = Mat<TScalar>::identity(n);
  if (!N.is_zero()) {
    TScalar coeff;
    switch (t.kind) {
      case TimeValue::Kind::Rational:
        coeff = TScalar(Scalar(mpq_class(t.q)));
        break;
      case TimeValue::Kind::PiMultiple:
        coeff = TScalar(Poly::monomial(1, Scalar(mpq_class(t.q))));
        needed = needed.merged({Transcendental::Kind::Pi, {}});
        break;
      case TimeValue::Kind::UnitLog:
        coeff = TScalar(Poly::monomial(1, Scalar(mpq_class(t.q))));
        needed = needed.merged({Transcendental::Kind::UnitLog, t.unit});
        break;
    }
    Mat<TScalar> Np = to_t(N);
    Mat<TScalar> term = Mat<TScalar>::identity(n);
    TScalar factor(1);
    for (int k = 1; k < n; ++k) {
      factor = factor * coeff / TScalar(k);
      term = term * Np;
      if (term.is_zero()) break;
      En = En + term * factor;
    }
  }

  ExactExp out;
  out.matrix = to_t(Er) * to_t(Et) * En;
  out.transcendental = needed;

  // det(exp(tD)) = e^{t·Tr D}; the trace lives in the real part only.
  mpq_class trace_rate = 0;
  for (const auto& b : D.real_blocks)
    trace_rate += b.rate * static_cast<long>(b.vectors.size());
  Scalar expected_det =
      real_factor(t, trace_rate, trace_rate == 0
                                     ? StructuredDerivation::RealScale{}
                                     : D.real_scale);
  TScalar det = out.matrix.det();
  if (!det.is_constant() || det.constant() != expected_det)
    throw Error("exp_exact: det(exp) ≠ e^{t·Tr D}");
  return out;
}

CertificateCheck verify_certificate(const LatticeCertificate& cert) {
  if (cert.k <= 0 || static_cast<int>(cert.B.size()) != cert.k ||
      static_cast<int>(cert.times.size()) != cert.k)
    throw DomainError("certificate: need one (B_j, t_j) per generator");
  int n = cert.n.dim();
  for (const auto& b : cert.B) b.validate(&cert.n);
  // Pairwise commutation across generators (part-wise, rational matrices).
  for (int a = 0; a < cert.k; ++a)
    for (int b = a + 1; b < cert.k; ++b) {
      SMat pa[3] = {cert.B[a].nilpotent_or_zero(), cert.B[a].real_matrix(),
                    cert.B[a].rot_matrix()};
      SMat pb[3] = {cert.B[b].nilpotent_or_zero(), cert.B[b].real_matrix(),
                    cert.B[b].rot_matrix()};
      for (const auto& x : pa)
        for (const auto& y : pb)
          if (x * y != y * x)
            throw DomainError("certificate: B_" + std::to_string(a + 1) +
                              " and B_" + std::to_string(b + 1) +
                              " do not commute");
    }
  if (cert.P.rows() != n || cert.P.cols() != n)
    throw DomainError("certificate: P size mismatch");
  auto Pinv = cert.P.inverse();
  if (!Pinv) throw DomainError("certificate: P is singular");

  CertificateCheck out;
  for (int j = 0; j < cert.k; ++j) {
    ExactExp e = exp_exact(cert.B[j], cert.times[j]);
    if (!e.transcendental.compatible_with(cert.transcendental))
      throw NotExactlyEvaluable(
          "certificate: exp(t_" + std::to_string(j + 1) +
          " B) uses transcendental " + e.transcendental.str() +
          " but P is over " + cert.transcendental.str());
    Mat<TScalar> E = *Pinv * e.matrix * cert.P;
    SMat Ei(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        const TScalar& v = E.at(r, c);
        if (!v.is_constant() || !v.constant().is_integer()) {
          out.pass = false;
          out.detail = "entry (" + std::to_string(r + 1) + "," +
                       std::to_string(c + 1) + ") of P⁻¹exp(t_" +
                       std::to_string(j + 1) + "B)P is not an integer: " +
                       v.str();
          return out;
        }
        Ei.at(r, c) = v.constant();
      }
    Scalar det = Ei.det();
    if (det != Scalar(1) && det != Scalar(-1)) {
      out.pass = false;
      out.detail = "conjugate of exp(t_" + std::to_string(j + 1) +
                   "B) has determinant " + det.str() + " ≠ ±1";
      return out;
    }
    out.conjugates.push_back(Ei);
  }

  // Structure constants of n in the basis {P e_i} must be rational.
  Mat<TScalar> Pt = cert.P;
  LieAlgebra renamed(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // [P e_i, P e_j] via bilinearity over T-scalars.
      std::vector<TScalar> br(n, TScalar(0));
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          TScalar f = Pt.at(a, i) * Pt.at(b, j) - Pt.at(b, i) * Pt.at(a, j);
          if (f.is_zero()) continue;
          for (const auto& [l, c] : cert.n.bracket_jk(a, b))
            br[l] += f * TScalar(c);
        }
      auto coords = Pt.solve(br);
      if (!coords) throw Error("certificate: solve against P failed");
      for (int l = 0; l < n; ++l) {
        const TScalar& v = (*coords)[l];
        if (v.is_zero()) continue;
        if (!v.is_constant() || !v.constant().is_rational()) {
          out.pass = false;
          out.detail = "structure constant c(" + std::to_string(i + 1) + "," +
                       std::to_string(j + 1) + ")^" + std::to_string(l + 1) +
                       " in the P-basis is not rational: " + v.str();
          return out;
        }
        renamed.add_bracket(i, j, l, v.constant());
      }
    }
  out.basis_algebra = renamed;
  return out;
}

Mat<TScalar> hyperbolic_conjugator(const HyperbolicPattern& pat) {
  int n = pat.n;
  Mat<TScalar> P(n, n);
  std::vector<bool> used(n, false);
  auto mark = [&](int i) {
    if (i < 0 || i >= n || used[i])
      throw DomainError("hyperbolic_conjugator: bad or repeated index");
    used[i] = true;
  };
  for (int f : pat.fixed) {
    mark(f);
    P.at(f, f) = TScalar(1);
  }
  if (!pat.pairs.empty()) pat.unit.validate();
  for (const auto& pr : pat.pairs) {
    mark(pr.pos1);
    mark(pr.pos2);
    Scalar big = pat.unit.alpha();
    Scalar small = pat.unit.minus ? -pat.unit.alpha_inv() : pat.unit.alpha_inv();
    Scalar l1 = pr.pos1_small ? small : big;
    Scalar l2 = pr.pos1_small ? big : small;
    // P-block [[1, λ₁],[1/(λ₂−λ₁), λ₂/(λ₂−λ₁)]] conjugates diag(λ₁,λ₂) to
    // the companion [[0,−λ₁λ₂],[1, λ₁+λ₂]].
    Scalar s = (l2 - l1).inverse();
    P.at(pr.pos1, pr.pos1) = TScalar(Scalar(1));
    P.at(pr.pos1, pr.pos2) = TScalar(l1);
    P.at(pr.pos2, pr.pos1) = TScalar(s);
    P.at(pr.pos2, pr.pos2) = TScalar(l2 * s);
  }
  if (pat.shear) {
    const auto& sh = *pat.shear;
    mark(sh.e1);
    mark(sh.e2);
    mark(sh.last);
    if (sh.v1.is_zero() || !sh.v1.is_rational() || !sh.v2.is_rational())
      throw DomainError("hyperbolic_conjugator: shear needs rational v1 ≠ 0, v2");
    TScalar tau = sh.time_scaled ? TScalar::t() : TScalar(1);
    // The shear source is rescaled by 1/(v₁τ) so its conjugate column is
    // e_last + e1 + (v2/v1)·e2; rescaling e2 by the denominator of v2/v1
    // keeps that column integral while e1, e2 stay rational directions.
    mpq_class ratio = (sh.v2 / sh.v1).rat();
    P.at(sh.e1, sh.e1) = TScalar(1);
    P.at(sh.e2, sh.e2) = TScalar(Scalar(mpq_class(1) / mpq_class(ratio.get_den())));
    P.at(sh.last, sh.last) = TScalar(1) / (TScalar(sh.v1) * tau);
  }
  for (int i = 0; i < n; ++i)
    if (!used[i])
      throw DomainError("hyperbolic_conjugator: pattern does not cover index " +
                        std::to_string(i + 1));
  return P;
}

}  // namespace ckit
