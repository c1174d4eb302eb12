#include "ckit/salamon.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace ckit {

namespace {

std::string normalize_minus(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, 3) == "\xe2\x88\x92") {
      out += '-';
      i += 3;
    } else {
      out += text[i];
      ++i;
    }
  }
  return out;
}

struct SalCursor {
  const std::string& s;
  std::size_t p = 0;

  void skip_ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  char peek() {
    skip_ws();
    return p < s.size() ? s[p] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(p), p);
  }
};

struct Term {
  Scalar coeff;
  int j, k;  // 0-based
};

int read_index(SalCursor& c) {
  c.skip_ws();
  if (c.p >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.p])))
    c.fail("expected index digit");
  int v = 0;
  while (c.p < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.p]))) {
    v = v * 10 + (c.s[c.p] - '0');
    ++c.p;
  }
  return v;
}

// Atom spellings: e^{jk}, e{jk}, ejk (single-digit), e^{j,k}.
std::pair<int, int> read_atom(SalCursor& c) {
  c.skip_ws();
  if (c.peek() != 'e') c.fail("expected 'e'");
  ++c.p;
  if (c.eat('^') || c.peek() == '{') {
    if (!c.eat('{')) c.fail("expected '{'");
    std::size_t close = c.s.find('}', c.p);
    if (close == std::string::npos) c.fail("expected '}'");
    bool commas = c.s.substr(c.p, close - c.p).find(',') != std::string::npos;
    int j, k;
    if (commas) {
      j = read_index(c);
      if (!c.eat(',')) c.fail("expected ','");
      k = read_index(c);
    } else {
      if (c.p + 1 >= close) c.fail("expected two indices");
      j = c.s[c.p] - '0';
      k = c.s[c.p + 1] - '0';
      if (!std::isdigit(static_cast<unsigned char>(c.s[c.p])) ||
          !std::isdigit(static_cast<unsigned char>(c.s[c.p + 1])))
        c.fail("expected index digits");
      c.p += 2;
    }
    if (!c.eat('}')) c.fail("expected '}'");
    return {j - 1, k - 1};
  }
  // ejk with single digits
  if (c.p + 1 >= c.s.size() ||
      !std::isdigit(static_cast<unsigned char>(c.s[c.p])) ||
      !std::isdigit(static_cast<unsigned char>(c.s[c.p + 1])))
    c.fail("expected two index digits");
  int j = c.s[c.p] - '0', k = c.s[c.p + 1] - '0';
  c.p += 2;
  return {j - 1, k - 1};
}

// Coefficient: scalar literal or parameter name, possibly followed by '*'.
Scalar read_coeff(SalCursor& c, const std::map<std::string, Scalar>& params) {
  c.skip_ws();
  std::size_t start = c.p;
  if (std::isalpha(static_cast<unsigned char>(c.peek())) && c.peek() != 'e') {
    while (c.p < c.s.size() &&
           (std::isalnum(static_cast<unsigned char>(c.s[c.p])) || c.s[c.p] == '_'))
      ++c.p;
    std::string name = c.s.substr(start, c.p - start);
    auto it = params.find(name);
    if (it == params.end())
      throw ParseError("unbound parameter '" + name + "'", start);
    c.eat('*');
    return it->second;
  }
  // Numeric / radical literal up to the atom start.
  while (c.p < c.s.size()) {
    char ch = c.s[c.p];
    if (ch == 'e' || ch == ',' || ch == ')' || ch == '+' || ch == '-' ||
        std::isspace(static_cast<unsigned char>(ch)))
      break;
    if (ch == '*') break;
    ++c.p;
  }
  std::string lit = c.s.substr(start, c.p - start);
  c.eat('*');
  if (lit.empty()) return Scalar(1);
  Scalar v = Scalar::parse(lit);
  if (!v.is_real()) throw ParseError("coefficient must be real", start);
  return v;
}

std::vector<Term> read_expr(SalCursor& c,
                            const std::map<std::string, Scalar>& params) {
  std::vector<Term> terms;
  c.skip_ws();
  if (c.peek() == '0') {
    ++c.p;
    c.skip_ws();
    if (c.peek() == ',' || c.peek() == ')') return terms;
    c.fail("unexpected input after '0'");
  }
  bool first = true;
  for (;;) {
    c.skip_ws();
    int sign = 1;
    if (c.peek() == '+') {
      ++c.p;
    } else if (c.peek() == '-') {
      sign = -1;
      ++c.p;
    } else if (!first) {
      break;
    }
    first = false;
    Scalar coeff = read_coeff(c, params);
    auto [j, k] = read_atom(c);
    terms.push_back({Scalar(sign) * coeff, j, k});
    c.skip_ws();
    if (c.peek() != '+' && c.peek() != '-') break;
  }
  return terms;
}

}  // namespace

LieAlgebra parse_salamon(std::string_view text,
                         const std::map<std::string, Scalar>& params) {
  std::string norm = normalize_minus(text);
  SalCursor c{norm};
  if (!c.eat('(')) c.fail("expected '('");
  std::vector<std::vector<Term>> entries;
  for (;;) {
    entries.push_back(read_expr(c, params));
    if (c.eat(',')) continue;
    if (c.eat(')')) break;
    c.fail("expected ',' or ')'");
  }
  c.skip_ws();
  if (c.p != norm.size()) c.fail("trailing input");
  int n = static_cast<int>(entries.size());
  LieAlgebra L(n);
  for (int l = 0; l < n; ++l)
    for (const auto& t : entries[l]) {
      if (t.j < 0 || t.k < 0 || t.j >= n || t.k >= n || t.j == t.k)
        throw ParseError("index out of range in de^" + std::to_string(l + 1),
                         0);
      // de^l(e_j, e_k) = q and dα(x,y) = −α([x,y]) give c_jk^l = −q.
      L.add_bracket(t.j, t.k, l, -t.coeff);
    }
  auto jac = validate_jacobi(L);
  if (!jac.pass)
    throw DomainError("salamon: Jacobi identity fails at triple (" +
                      std::to_string(jac.i + 1) + "," +
                      std::to_string(jac.j + 1) + "," +
                      std::to_string(jac.k + 1) + ")");
  return L;
}

std::string print_salamon(const LieAlgebra& L) {
  int n = L.dim();
  bool wide = n > 9;
  std::ostringstream os;
  os << "(";
  for (int l = 0; l < n; ++l) {
    if (l) os << ",";
    bool any = false;
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Scalar q = -L.c(j, k, l);  // de^l = Σ q e^{jk}
        if (q.is_zero()) continue;
        std::string cs = q.str();
        if (cs == "1")
          cs = any ? "+" : "";
        else if (cs == "-1")
          cs = "-";
        else if (any && cs[0] != '-')
          cs = "+" + cs;
        os << cs << "e^{" << (j + 1) << (wide ? "," : "") << (k + 1) << "}";
        any = true;
      }
    if (!any) os << "0";
  }
  os << ")";
  return os.str();
}

}  // namespace ckit
