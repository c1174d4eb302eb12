#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckit/lie_algebra.hpp"
#include "ckit/tscalar.hpp"

namespace ckit {

/// Quadratic unit α = (m + √(m²∓4))/2: the "plus" family satisfies
/// α + α⁻¹ = m (m ≥ 3), the "minus" family α − α⁻¹ = m (m ≥ 1).
struct QuadUnit {
  long long m = 0;
  bool minus = false;

  Scalar alpha() const;
  Scalar alpha_inv() const;
  long long disc() const { return minus ? m * m + 4 : m * m - 4; }
  void validate() const;
  bool operator==(const QuadUnit& o) const {
    return m == o.m && minus == o.minus;
  }
};

/// Exact time: q·π, q·log α for a quadratic unit α, or plain rational q.
struct TimeValue {
  enum class Kind { PiMultiple, UnitLog, Rational };
  Kind kind = Kind::Rational;
  mpq_class q = 1;
  QuadUnit unit;  // for UnitLog

  static TimeValue pi(mpq_class mult = 1) {
    mult.canonicalize();
    return {Kind::PiMultiple, std::move(mult), {}};
  }
  static TimeValue log_unit(QuadUnit u, mpq_class mult = 1) {
    u.validate();
    mult.canonicalize();
    return {Kind::UnitLog, std::move(mult), u};
  }
  static TimeValue rational(mpq_class v) {
    v.canonicalize();
    return {Kind::Rational, std::move(v), {}};
  }
};

/// t_m = log((m + √(m²−4))/2); m ≥ 3.
TimeValue unit_time(long long m);

/// What the formal transcendental T stands for in a certificate.
struct Transcendental {
  enum class Kind { None, Pi, UnitLog };
  Kind kind = Kind::None;
  QuadUnit unit;

  bool compatible_with(const Transcendental& o) const {
    if (kind == Kind::None || o.kind == Kind::None) return true;
    return kind == o.kind && (kind != Kind::UnitLog || unit == o.unit);
  }
  /// Merge; throws NotExactlyEvaluable on a clash.
  Transcendental merged(const Transcendental& o) const;
  std::string str() const;
};

/// Commuting decomposition D = N + S_r + S_θ of a structured derivation:
/// nilpotent N; real-semisimple part with rational rates against a common
/// scale (1 or log(α)/π); rotation generators with rational rates against a
/// common scale (1 or π). Unlisted directions carry rate zero.
struct StructuredDerivation {
  struct RealScale {
    bool unit_over_pi = false;  // scale = log(α)/π instead of 1
    QuadUnit unit;
  };
  struct RealBlock {
    mpq_class rate;
    std::vector<SVec> vectors;
  };
  struct RotBlock {
    mpq_class rate;  // generator: x ↦ rate·y, y ↦ −rate·x (times the scale)
    SVec x, y;
  };

  int n = 0;
  SMat nilpotent;  // n×n; empty means zero
  RealScale real_scale;
  std::vector<RealBlock> real_blocks;
  bool rot_scale_pi = false;  // rotation rates measured in units of π
  std::vector<RotBlock> rot_blocks;

  static StructuredDerivation zero(int n);

  SMat nilpotent_or_zero() const;
  /// Rational matrix of the real part with the scale factored out.
  SMat real_matrix() const;
  /// Rational matrix of the rotation generator with the scale factored out.
  SMat rot_matrix() const;

  /// N nilpotent, parts pairwise commuting, rotation planes independent.
  /// With an algebra supplied, each part must additionally be a derivation.
  void validate(const LieAlgebra* algebra = nullptr) const;
};

struct ExactExp {
  Mat<TScalar> matrix;
  Transcendental transcendental;
};

/// Exact matrix exponential exp(t·D). Throws NotExactlyEvaluable (naming the
/// offending block) when a factor has no exact value; the determinant is
/// re-derived from Tr D and compared symbolically.
ExactExp exp_exact(const StructuredDerivation& D, const TimeValue& t);

/// Splittable-lattice certificate: times t_j, derivations B_j of the
/// nilradical n, and a conjugator P whose columns form the claimed rational
/// basis.
struct LatticeCertificate {
  int k = 0;
  LieAlgebra n;
  std::vector<StructuredDerivation> B;
  std::vector<TimeValue> times;
  Mat<TScalar> P;
  Transcendental transcendental;

  LatticeCertificate() : n(1) {}
};

struct CertificateCheck {
  bool pass = true;
  std::string detail;            // first failure, empty on pass
  std::vector<SMat> conjugates;  // E_j = P⁻¹ exp(t_j B_j) P when integral
  LieAlgebra basis_algebra;      // n in the basis {P e_i} (when rational)

  CertificateCheck() : basis_algebra(1) {}
};

/// (a) P invertible, (b) every P⁻¹·exp(t_j B_j)·P is an integer matrix of
/// determinant ±1, (c) the structure constants of n in the basis {P e_i}
/// are rational.
CertificateCheck verify_certificate(const LatticeCertificate& cert);

/// Conjugation patterns for hyperbolic eigenvalue data.
struct HyperbolicPattern {
  struct EigenPair {
    int pos1 = 0, pos2 = 0;  // coordinates carrying (λ₁, λ₂)
    bool pos1_small = false;  // λ₁ = α⁻¹ (plus) instead of α
  };
  struct Shear {
    Scalar v1, v2;
    int e1 = 0, e2 = 0, last = 0;
    bool time_scaled = true;  // columns carry the factor T
  };

  int n = 0;
  QuadUnit unit;
  std::vector<int> fixed;
  std::vector<EigenPair> pairs;
  std::optional<Shear> shear;
};

/// P with P⁻¹·diag(λ₁,λ₂)·P the integer companion block [[0,−λ₁λ₂],[1,m]]
/// on every declared pair; the identity pattern gives P = I. Shear data
/// reproduces the almost-nilpotent block conjugators.
Mat<TScalar> hyperbolic_conjugator(const HyperbolicPattern& pat);

/// Lifts of Scalar matrices into the certificate field.
Mat<TScalar> lift(const SMat& m);

}  // namespace ckit
