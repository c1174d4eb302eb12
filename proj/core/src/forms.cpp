#include "ckit/forms.hpp"

#include <bit>
#include <cctype>
#include <sstream>

namespace ckit {

Form Form::covector(int dim, const SVec& coeffs) {
  if (static_cast<int>(coeffs.size()) != dim)
    throw DomainError("Form: covector size mismatch");
  Form f(dim, 1);
  for (int j = 0; j < dim; ++j) f.add(1u << j, coeffs[j]);
  return f;
}

Scalar Form::coeff(std::uint32_t mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Form::add(std::uint32_t mask, const Scalar& c) {
  if (c.is_zero()) return;
  if (std::popcount(mask) != degree_)
    throw DomainError("Form: multi-index degree mismatch");
  auto [it, inserted] = terms_.emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator+(const Form& o) const {
  if (dim_ != o.dim_ || degree_ != o.degree_)
    throw DomainError("Form: mixed degrees or dimensions in sum");
  Form f = *this;
  for (const auto& [m, c] : o.terms_) f.add(m, c);
  return f;
}

Form Form::operator-(const Form& o) const { return *this + (-o); }

Form Form::operator-() const {
  Form f(dim_, degree_);
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
  return f;
}

Form Form::operator*(const Scalar& s) const {
  Form f(dim_, degree_);
  if (s.is_zero()) return f;
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, c * s);
  return f;
}

Form Form::conj() const {
  Form f(dim_, degree_);
  for (const auto& [m, c] : terms_) f.terms_.emplace(m, c.conj());
  return f;
}

Scalar Form::eval(const std::vector<SVec>& args) const {
  if (static_cast<int>(args.size()) != degree_)
    throw DomainError("Form: wrong number of arguments");
  Scalar total(0);
  for (const auto& [mask, c] : terms_) {
    Mat<Scalar> m(degree_, degree_);
    int row = 0;
    for (int j = 0; j < dim_; ++j) {
      if (!(mask & (1u << j))) continue;
      for (int col = 0; col < degree_; ++col) m.at(row, col) = args[col][j];
      ++row;
    }
    total += c * m.det();
  }
  return total;
}

int wedge_sign(std::uint32_t a, std::uint32_t b) {
  int inversions = 0;
  for (std::uint32_t rest = b; rest;) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 ? -1 : 1;
}

Form wedge(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) throw DomainError("wedge: dimension mismatch");
  Form f(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      Scalar c = ca * cb;
      if (wedge_sign(ma, mb) < 0) c = -c;
      f.add(ma | mb, c);
    }
  return f;
}

Form ce_d(const LieAlgebra& L, const Form& a) {
  int n = L.dim();
  if (a.dim() != n) throw DomainError("ce_d: dimension mismatch");
  if (a.degree() >= n) return Form(n, n);  // top degree: d is zero
  // d e^l = −Σ_{j<k} c_jk^l e^{jk}
  std::vector<Form> d1(n, Form(n, 2));
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k)
      for (const auto& [l, c] : L.bracket_jk(j, k))
        d1[l].add((1u << j) | (1u << k), -c);

  Form out(n, a.degree() + 1);
  for (const auto& [mask, c] : a.terms()) {
    int pos = 0;
    for (std::uint32_t rest = mask; rest; ++pos) {
      int r = std::countr_zero(rest);
      rest &= rest - 1;
      Form partial(n, a.degree() - 1);
      partial.add(mask & ~(1u << r), pos % 2 ? -c : c);
      out = out + wedge(d1[r], partial);
    }
  }
  return out;
}

Coframe adapted_coframe(const LieAlgebra& L, const SMat& J) {
  int n = L.dim();
  if (n % 2 != 0) throw DomainError("adapted_coframe: odd dimension");
  if (J.rows() != n || J.cols() != n)
    throw DomainError("adapted_coframe: J size mismatch");
  if (J * J != -SMat::identity(n))
    throw DomainError("adapted_coframe: J² ≠ −I");
  Coframe cf;
  SubspaceBasis chosen;
  chosen.dim = n;
  for (int j = 0; j < n && chosen.rank() < n; ++j) {
    SVec u = unit_vec(n, j);
    if (!try_extend(chosen, u)) continue;
    SVec v = J.apply(u);
    if (!try_extend(chosen, v))
      throw DomainError("adapted_coframe: J-image dependent on chosen pairs");
    cf.u.push_back(u);
    cf.v.push_back(v);
  }
  int half = n / 2;
  SMat U(n, n);
  for (int j = 0; j < half; ++j) {
    U.set_col(j, cf.u[j]);
    U.set_col(half + j, cf.v[j]);
  }
  auto Uinv = U.inverse();
  if (!Uinv) throw DomainError("adapted_coframe: degenerate pairing");
  for (int j = 0; j < half; ++j) {
    SVec urow(n), vrow(n);
    for (int l = 0; l < n; ++l) {
      urow[l] = Uinv->at(j, l);
      vrow[l] = Uinv->at(half + j, l);
    }
    cf.u_dual.push_back(Form::covector(n, urow));
    cf.v_dual.push_back(Form::covector(n, vrow));
    cf.gamma.push_back(cf.u_dual.back() + cf.v_dual.back() * Scalar::i());
    cf.gamma_bar.push_back(cf.u_dual.back() -
                           cf.v_dual.back() * Scalar::i());
  }
  return cf;
}

Form sigma_form(const Coframe& cf) {
  if (cf.gamma.empty()) throw DomainError("sigma_form: empty coframe");
  Form s = Form::constant(cf.gamma[0].dim(), Scalar(1));
  for (const auto& g : cf.gamma) s = wedge(s, g);
  return s;
}

namespace {

// Substitutes a 1-form image for every covector slot and expands.
Form substitute(const Form& a, const std::vector<Form>& img, int out_dim) {
  Form out(out_dim, a.degree());
  for (const auto& [mask, c] : a.terms()) {
    Form prod = Form::constant(out_dim, c);
    for (std::uint32_t rest = mask; rest;) {
      int j = std::countr_zero(rest);
      rest &= rest - 1;
      prod = wedge(prod, img[j]);
      if (prod.is_zero()) break;
    }
    out = out + prod;
  }
  return out;
}

}  // namespace

std::map<std::pair<int, int>, Form> bigrade(const LieAlgebra& L, const SMat& J,
                                            const Form& a) {
  int n = L.dim(), half = n / 2;
  Coframe cf = adapted_coframe(L, J);
  // Expansion of e^l in γ-coordinates (slots 0..half-1 = γ_j, rest = γ̄_j).
  SMat U(n, n);
  for (int j = 0; j < half; ++j) {
    U.set_col(j, cf.u[j]);
    U.set_col(half + j, cf.v[j]);
  }
  Scalar ihalf = Scalar::i() * Scalar::rational(1, 2);
  std::vector<Form> to_gamma(n, Form(n, 1));
  for (int l = 0; l < n; ++l) {
    Form f(n, 1);
    for (int j = 0; j < half; ++j) {
      Scalar cu = U.at(l, j) * Scalar::rational(1, 2);
      Scalar cv = U.at(l, half + j);
      f.add(1u << j, cu - ihalf * cv);
      f.add(1u << (half + j), cu + ihalf * cv);
    }
    to_gamma[l] = f;
  }
  Form in_gamma = substitute(a, to_gamma, n);

  // Group γ-monomials by bidegree, then map each group back to e-coordinates.
  std::vector<Form> back(n, Form(n, 1));
  for (int j = 0; j < half; ++j) {
    back[j] = cf.gamma[j];
    back[half + j] = cf.gamma_bar[j];
  }
  std::uint32_t lower = (1u << half) - 1;
  std::map<std::pair<int, int>, Form> grouped;
  for (const auto& [mask, c] : in_gamma.terms()) {
    int p = std::popcount(mask & lower);
    int q = std::popcount(mask) - p;
    auto [it, _] = grouped.try_emplace({p, q}, Form(n, a.degree()));
    it->second.add(mask, c);
  }
  std::map<std::pair<int, int>, Form> out;
  for (const auto& [pq, g] : grouped) {
    Form comp = substitute(g, back, n);
    if (!comp.is_zero()) out.emplace(pq, comp);
  }
  return out;
}

namespace {

struct LabelScheme {
  char prefix = 0;        // single shared prefix, or 0
  bool single_digits = true;
};

LabelScheme scheme_of(const std::vector<std::string>& labels) {
  LabelScheme s;
  s.prefix = labels.empty() ? 0 : labels[0][0];
  for (const auto& l : labels) {
    if (l.empty() || l[0] != s.prefix) {
      s.prefix = 0;
      break;
    }
    if (l.size() != 2) s.single_digits = false;
  }
  return s;
}

}  // namespace

std::string form_str(const Form& f, const std::vector<std::string>& labels) {
  if (f.is_zero()) return "0";
  LabelScheme sch = scheme_of(labels);
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : f.terms()) {
    std::string cs = c.str();
    bool neg = cs[0] == '-';
    if (neg) cs = (-c).str();
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (cs != "1") {
      bool composite = cs.find('+') != std::string::npos ||
                       cs.find('-') != std::string::npos;
      os << (composite ? "(" + cs + ")" : cs) << "*";
    }
    if (f.degree() == 0) {
      if (cs == "1") os << "1";
      continue;
    }
    if (sch.prefix) {
      os << sch.prefix << "{";
      bool first_idx = true;
      for (std::uint32_t rest = mask; rest;) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        if (!first_idx && !sch.single_digits) os << ",";
        os << labels[j].substr(1);
        first_idx = false;
      }
      os << "}";
    } else {
      bool first_idx = true;
      for (std::uint32_t rest = mask; rest;) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        if (!first_idx) os << "^";
        os << labels[j];
        first_idx = false;
      }
    }
  }
  return os.str();
}

namespace {

struct FCursor {
  std::string_view s;
  std::size_t p = 0;
  void skip_ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool done() {
    skip_ws();
    return p >= s.size();
  }
};

int label_index(const std::vector<std::string>& labels, const std::string& l,
                std::size_t at) {
  for (std::size_t j = 0; j < labels.size(); ++j)
    if (labels[j] == l) return static_cast<int>(j);
  throw ParseError("unknown basis label '" + l + "'", at);
}

}  // namespace

Form parse_form(int dim, int degree, const std::vector<std::string>& labels,
                std::string_view text) {
  Form out(dim, degree);
  FCursor c{text};
  c.skip_ws();
  if (text == "0") return out;
  bool first = true;
  while (!c.done()) {
    int sign = 1;
    c.skip_ws();
    if (c.s[c.p] == '+') {
      ++c.p;
    } else if (c.s[c.p] == '-') {
      sign = -1;
      ++c.p;
    } else if (c.s.substr(c.p, 3) == "\xe2\x88\x92") {
      sign = -1;
      c.p += 3;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", c.p);
    }
    first = false;
    c.skip_ws();
    // Optional coefficient terminated by '*'.
    Scalar coeff(1);
    std::size_t star = c.s.find('*', c.p);
    std::size_t brace = c.s.find('{', c.p);
    if (star != std::string_view::npos &&
        (brace == std::string_view::npos || star < brace)) {
      coeff = Scalar::parse(c.s.substr(c.p, star - c.p));
      c.p = star + 1;
      c.skip_ws();
    }
    // Atom: prefix{digits} or prefix^{digits} or label(^label)*.
    if (c.p >= c.s.size() || !std::isalpha(static_cast<unsigned char>(c.s[c.p])))
      throw ParseError("expected basis atom", c.p);
    char prefix = c.s[c.p];
    ++c.p;
    if (c.p < c.s.size() && c.s[c.p] == '^' && c.p + 1 < c.s.size() &&
        c.s[c.p + 1] == '{')
      ++c.p;
    std::uint32_t mask = 0;
    int sgn_perm = 1;
    if (c.p < c.s.size() && c.s[c.p] == '{') {
      ++c.p;
      std::string idx;
      bool commas = c.s.substr(c.p, c.s.find('}', c.p) - c.p)
                        .find(',') != std::string_view::npos;
      while (c.p < c.s.size() && c.s[c.p] != '}') {
        if (c.s[c.p] == ',') {
          ++c.p;
          continue;
        }
        if (commas) {
          std::size_t start = c.p;
          while (c.p < c.s.size() && c.s[c.p] != ',' && c.s[c.p] != '}') ++c.p;
          idx = std::string(c.s.substr(start, c.p - start));
        } else {
          idx = std::string(1, c.s[c.p]);
          ++c.p;
        }
        int j = label_index(labels, std::string(1, prefix) + idx, c.p);
        std::uint32_t bit = 1u << j;
        if (mask & bit) throw ParseError("repeated index", c.p);
        sgn_perm *= wedge_sign(mask, bit);
        mask |= bit;
      }
      if (c.p >= c.s.size()) throw ParseError("expected '}'", c.p);
      ++c.p;
    } else {
      // label(^label)* form, first label already started.
      --c.p;
      for (;;) {
        std::size_t start = c.p;
        while (c.p < c.s.size() &&
               std::isalnum(static_cast<unsigned char>(c.s[c.p])))
          ++c.p;
        int j = label_index(labels, std::string(c.s.substr(start, c.p - start)),
                            start);
        std::uint32_t bit = 1u << j;
        if (mask & bit) throw ParseError("repeated index", c.p);
        sgn_perm *= wedge_sign(mask, bit);
        mask |= bit;
        if (c.p < c.s.size() && c.s[c.p] == '^') {
          ++c.p;
          continue;
        }
        break;
      }
    }
    if (std::popcount(mask) != degree)
      throw ParseError("term degree mismatch", c.p);
    Scalar v = coeff * Scalar(sign) * Scalar(sgn_perm);
    out.add(mask, v);
    c.skip_ws();
  }
  return out;
}

}  // namespace ckit
