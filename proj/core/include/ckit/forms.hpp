#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ckit/lie_algebra.hpp"

namespace ckit {

/// Exterior form over the complexified dual of a 2n-dimensional algebra.
/// Homogeneous of fixed degree; terms are stored sparsely against strictly
/// increasing multi-indices encoded as bitmasks over the basis covectors.
class Form {
 public:
  Form() : dim_(0), degree_(0) {}
  Form(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 0 || dim > 31) throw DomainError("Form: dimension out of range");
    if (degree < 0 || degree > dim) throw DomainError("Form: bad degree");
  }

  static Form covector(int dim, int j) {
    Form f(dim, 1);
    f.add(1u << j, Scalar(1));
    return f;
  }
  static Form covector(int dim, const SVec& coeffs);
  static Form constant(int dim, const Scalar& c) {
    Form f(dim, 0);
    f.add(0, c);
    return f;
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }
  Scalar coeff(std::uint32_t mask) const;

  void add(std::uint32_t mask, const Scalar& c);

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator-() const;
  Form operator*(const Scalar& s) const;
  bool operator==(const Form& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && terms_ == o.terms_;
  }
  bool operator!=(const Form& o) const { return !(*this == o); }

  /// Coefficient-wise complex conjugate.
  Form conj() const;

  /// Evaluation on vectors (degree many of them).
  Scalar eval(const std::vector<SVec>& args) const;

 private:
  int dim_, degree_;
  std::map<std::uint32_t, Scalar> terms_;
};

/// Sign of merging two disjoint increasing multi-indices.
int wedge_sign(std::uint32_t a, std::uint32_t b);

Form wedge(const Form& a, const Form& b);

/// Chevalley–Eilenberg differential with dα(x,y) = −α([x,y]) on 1-forms,
/// extended as an antiderivation.
Form ce_d(const LieAlgebra& L, const Form& a);

/// J-adapted coframe: real basis pairs (u_j, v_j) with J u_j = v_j, chosen
/// deterministically (first basis vector independent of the pairs so far is
/// paired with its J-image), and γ_j = u^j + i v^j.
struct Coframe {
  std::vector<SVec> u, v;        // vectors, n pairs
  std::vector<Form> u_dual, v_dual;  // dual covectors as 1-forms
  std::vector<Form> gamma;       // γ_j = u^j + i v^j
  std::vector<Form> gamma_bar;
};

Coframe adapted_coframe(const LieAlgebra& L, const SMat& J);

/// σ = γ_1 ∧ … ∧ γ_n for a coframe.
Form sigma_form(const Coframe& cf);

/// Decomposition into (p,q)-components relative to J; re-summing the
/// components reproduces the input exactly.
std::map<std::pair<int, int>, Form> bigrade(const LieAlgebra& L, const SMat& J,
                                            const Form& a);

/// Printing in the usual shorthand ("-i*e{023} - e{013}"); labels such as
/// "e0" supply the digits. parse_form reads the same notation back.
std::string form_str(const Form& f, const std::vector<std::string>& labels);
Form parse_form(int dim, int degree, const std::vector<std::string>& labels,
                std::string_view text);

}  // namespace ckit
