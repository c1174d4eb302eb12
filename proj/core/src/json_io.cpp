#include "ckit/json_io.hpp"

namespace ckit {

json algebra_to_json(const LieAlgebra& L) {
  json j;
  j["dim"] = L.dim();
  j["labels"] = L.labels();
  json brackets = json::array();
  for (int a = 0; a < L.dim(); ++a)
    for (int b = a + 1; b < L.dim(); ++b) {
      const auto& terms = L.bracket_jk(a, b);
      if (terms.empty()) continue;
      json coeffs = json::object();
      for (const auto& [l, c] : terms)
        coeffs[std::to_string(l + 1)] = c.str();
      brackets.push_back({{"j", a + 1}, {"k", b + 1}, {"coeffs", coeffs}});
    }
  j["brackets"] = brackets;
  return j;
}

LieAlgebra algebra_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  LieAlgebra L(dim, labels);
  for (const auto& b : j.at("brackets")) {
    int a = b.at("j").get<int>() - 1;
    int k = b.at("k").get<int>() - 1;
    for (const auto& [key, val] : b.at("coeffs").items())
      L.add_bracket(a, k, std::stoi(key) - 1,
                    Scalar::parse(val.get<std::string>()));
  }
  auto jac = validate_jacobi(L);
  if (!jac.pass)
    throw DomainError("algebra_from_json: Jacobi fails at (" +
                      std::to_string(jac.i + 1) + "," +
                      std::to_string(jac.j + 1) + "," +
                      std::to_string(jac.k + 1) + ")");
  return L;
}

json matrix_to_json(const SMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

SMat matrix_from_json(const json& j) {
  int r = static_cast<int>(j.size());
  int c = r ? static_cast<int>(j[0].size()) : 0;
  SMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k)
      m.at(i, k) = Scalar::parse(j[i][k].get<std::string>());
  return m;
}

json tmatrix_to_json(const Mat<TScalar>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

Mat<TScalar> tmatrix_from_json(const json& j) {
  int r = static_cast<int>(j.size());
  int c = r ? static_cast<int>(j[0].size()) : 0;
  Mat<TScalar> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k)
      m.at(i, k) = TScalar::parse(j[i][k].get<std::string>());
  return m;
}

json time_to_json(const TimeValue& t) {
  switch (t.kind) {
    case TimeValue::Kind::PiMultiple:
      return {{"type", "pi"}, {"q", rat_str(t.q)}};
    case TimeValue::Kind::UnitLog:
      return {{"type", "log_unit"},
              {"m", t.unit.m},
              {"family", t.unit.minus ? "minus" : "plus"},
              {"q", rat_str(t.q)}};
    case TimeValue::Kind::Rational:
      return {{"type", "rational"}, {"q", rat_str(t.q)}};
  }
  return {};
}

TimeValue time_from_json(const json& j) {
  std::string type = j.at("type").get<std::string>();
  mpq_class q = j.contains("q") ? parse_rat(j["q"].get<std::string>())
                                : mpq_class(1);
  if (type == "pi") return TimeValue::pi(q);
  if (type == "rational") return TimeValue::rational(q);
  if (type == "log_unit") {
    QuadUnit u{j.at("m").get<long long>(),
               j.value("family", std::string("plus")) == "minus"};
    return TimeValue::log_unit(u, q);
  }
  throw DomainError("time_from_json: unknown type '" + type + "'");
}

namespace {

json vectors_to_json(const std::vector<SVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) {
    json row = json::array();
    for (const auto& x : v) row.push_back(x.str());
    out.push_back(row);
  }
  return out;
}

std::vector<SVec> vectors_from_json(const json& j) {
  std::vector<SVec> out;
  for (const auto& row : j) {
    SVec v;
    for (const auto& x : row) v.push_back(Scalar::parse(x.get<std::string>()));
    out.push_back(v);
  }
  return out;
}

}  // namespace

json derivation_to_json(const StructuredDerivation& d) {
  json j;
  j["n"] = d.n;
  if (!d.nilpotent_or_zero().is_zero())
    j["nilpotent"] = matrix_to_json(d.nilpotent);
  json real;
  if (d.real_scale.unit_over_pi)
    real["scale"] = {{"log_unit_over_pi",
                      {{"m", d.real_scale.unit.m},
                       {"family", d.real_scale.unit.minus ? "minus" : "plus"}}}};
  else
    real["scale"] = "plain";
  json rblocks = json::array();
  for (const auto& b : d.real_blocks)
    rblocks.push_back(
        {{"rate", rat_str(b.rate)}, {"vectors", vectors_to_json(b.vectors)}});
  real["blocks"] = rblocks;
  j["real"] = real;
  json rot;
  rot["scale"] = d.rot_scale_pi ? "pi" : "plain";
  json tblocks = json::array();
  for (const auto& b : d.rot_blocks)
    tblocks.push_back({{"rate", rat_str(b.rate)},
                       {"x", vectors_to_json({b.x})[0]},
                       {"y", vectors_to_json({b.y})[0]}});
  rot["blocks"] = tblocks;
  j["rotation"] = rot;
  return j;
}

StructuredDerivation derivation_from_json(const json& j) {
  StructuredDerivation d;
  d.n = j.at("n").get<int>();
  if (j.contains("nilpotent")) d.nilpotent = matrix_from_json(j["nilpotent"]);
  if (j.contains("real")) {
    const auto& real = j["real"];
    if (real.contains("scale") && real["scale"].is_object()) {
      const auto& sc = real["scale"]["log_unit_over_pi"];
      d.real_scale = {true,
                      {sc.at("m").get<long long>(),
                       sc.value("family", std::string("plus")) == "minus"}};
    }
    for (const auto& b : real.value("blocks", json::array()))
      d.real_blocks.push_back({parse_rat(b.at("rate").get<std::string>()),
                               vectors_from_json(b.at("vectors"))});
  }
  if (j.contains("rotation")) {
    const auto& rot = j["rotation"];
    d.rot_scale_pi = rot.value("scale", std::string("plain")) == "pi";
    for (const auto& b : rot.value("blocks", json::array()))
      d.rot_blocks.push_back({parse_rat(b.at("rate").get<std::string>()),
                              vectors_from_json(json::array({b.at("x")}))[0],
                              vectors_from_json(json::array({b.at("y")}))[0]});
  }
  return d;
}

json certificate_to_json(const LatticeCertificate& c) {
  json j;
  j["k"] = c.k;
  j["n"] = algebra_to_json(c.n);
  json b = json::array(), t = json::array();
  for (const auto& d : c.B) b.push_back(derivation_to_json(d));
  for (const auto& tv : c.times) t.push_back(time_to_json(tv));
  j["derivations"] = b;
  j["times"] = t;
  j["P"] = tmatrix_to_json(c.P);
  switch (c.transcendental.kind) {
    case Transcendental::Kind::None:
      j["transcendental"] = "none";
      break;
    case Transcendental::Kind::Pi:
      j["transcendental"] = "pi";
      break;
    case Transcendental::Kind::UnitLog:
      j["transcendental"] = {
          {"log_unit",
           {{"m", c.transcendental.unit.m},
            {"family", c.transcendental.unit.minus ? "minus" : "plus"}}}};
      break;
  }
  return j;
}

LatticeCertificate certificate_from_json(const json& j) {
  LatticeCertificate c;
  c.k = j.at("k").get<int>();
  c.n = algebra_from_json(j.at("n"));
  for (const auto& d : j.at("derivations"))
    c.B.push_back(derivation_from_json(d));
  for (const auto& t : j.at("times")) c.times.push_back(time_from_json(t));
  c.P = tmatrix_from_json(j.at("P"));
  if (j.contains("transcendental")) {
    const auto& t = j["transcendental"];
    if (t.is_string()) {
      std::string s = t.get<std::string>();
      if (s == "pi") c.transcendental = {Transcendental::Kind::Pi, {}};
    } else if (t.is_object() && t.contains("log_unit")) {
      c.transcendental = {
          Transcendental::Kind::UnitLog,
          {t["log_unit"].at("m").get<long long>(),
           t["log_unit"].value("family", std::string("plus")) == "minus"}};
    }
  }
  return c;
}

json covector_to_json(const LieAlgebra& L, const SVec& v) {
  json out = json::object();
  for (int j = 0; j < L.dim(); ++j)
    if (!v[j].is_zero()) out[L.label(j)] = v[j].str();
  return out;
}

std::string vector_str(const LieAlgebra& L, const SVec& v) {
  std::string out;
  for (int j = 0; j < L.dim(); ++j) {
    if (v[j].is_zero()) continue;
    std::string c = v[j].str();
    bool neg = c[0] == '-';
    if (neg) c = (-v[j]).str();
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (c != "1") out += c + "*";
    out += L.label(j);
  }
  return out.empty() ? "0" : out;
}

std::string verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::InvariantTrivial: return "InvariantTrivial";
    case VerdictKind::NoInvariantSection: return "NoInvariantSection";
    case VerdictKind::NotIntegrable: return "NotIntegrable";
  }
  return "?";
}

std::string obstruction_name(ObstructionStatus s) {
  return s == ObstructionStatus::PsiVanishesOnCommutator
             ? "PsiVanishesOnCommutator"
             : "Obstructed";
}

json verdict_to_json(const LieAlgebra& L, const TrivialityVerdict& v,
                     const ObstructionReport& o) {
  json j;
  j["integrable"] = v.kind != VerdictKind::NotIntegrable;
  j["psi"] = covector_to_json(L, v.psi_covector);
  j["verdict"] = verdict_name(v.kind);
  if (v.witness_index) j["witness"] = L.label(*v.witness_index);
  if (v.witness_pair)
    j["witness_pair"] = {L.label(v.witness_pair->first),
                         L.label(v.witness_pair->second)};
  j["obstruction"] = obstruction_name(o.status);
  if (o.witness_pair)
    j["obstruction_witness"] = {L.label(o.witness_pair->first),
                                L.label(o.witness_pair->second)};
  return j;
}

namespace {

// (n,0)-form as a product of its coframe factors, e.g. "(e0+ie3)^(e1+ie2)".
std::string factor_str(const LieAlgebra& L, const Form& one_form) {
  std::string out;
  for (const auto& [mask, c] : one_form.terms()) {
    int j = 0;
    while (!((mask >> j) & 1u)) ++j;
    for (int part = 0; part < 2; ++part) {
      Scalar comp = part == 0 ? c.real() : c.imag();
      if (comp.is_zero()) continue;
      std::string cs = comp.str();
      bool neg = cs[0] == '-';
      if (neg) cs = (-comp).str();
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? "-" : "+";
      }
      if (part == 1) out += "i";
      if (cs != "1") out += cs + "*";
      out += L.label(j);
    }
  }
  return out;
}

}  // namespace

json descriptor_to_json(const LieAlgebra& L, const SectionDescriptor& S) {
  json j;
  if (!S.sigma_factors.empty()) {
    std::string sig;
    for (const auto& g : S.sigma_factors) {
      if (!sig.empty()) sig += "^";
      sig += "(" + factor_str(L, g) + ")";
    }
    j["sigma"] = sig;
  } else {
    j["sigma"] = form_str(S.sigma, L.labels());
  }
  j["alpha"] = json::object();
  for (const auto& [mask, c] : S.alpha.terms()) {
    int b = 0;
    while (!((mask >> b) & 1u)) ++b;
    j["alpha"][L.label(b)] = c.str();
  }
  j["s"] = S.s;
  json cc = json::array();
  for (const auto& u : S.closed_coords) cc.push_back(vector_str(L, u));
  j["closed_coords"] = cc;
  if (S.rank_one) {
    j["lambda"] = S.rank_one->lambda.str();
    j["e0"] = vector_str(L, S.rank_one->e0);
  }
  return j;
}

json triple_to_json(const HypercomplexTriple& t) {
  return {{"J1", matrix_to_json(t.J1)},
          {"J2", matrix_to_json(t.J2)},
          {"J3", matrix_to_json(t.J3)}};
}

HypercomplexTriple triple_from_json(const json& j) {
  return {matrix_from_json(j.at("J1")), matrix_from_json(j.at("J2")),
          matrix_from_json(j.at("J3"))};
}

json entry_to_json(const CatalogEntry& e) {
  json j;
  j["name"] = e.name;
  j["note"] = e.note;
  j["algebra"] = algebra_to_json(e.algebra);
  json expected = json::array();
  for (const auto& s : e.structures) {
    json js;
    js["name"] = s.name;
    js["J"] = matrix_to_json(s.J);
    js["abelian"] = s.abelian;
    js["psi"] = covector_to_json(e.algebra, s.psi);
    js["verdict"] = verdict_name(s.verdict);
    if (s.witness >= 0) js["witness"] = e.algebra.label(s.witness);
    js["obstruction"] = obstruction_name(s.obstruction);
    if (s.lambda) js["lambda"] = s.lambda->str();
    json inv = json::array();
    for (const auto& [p, r] : s.invariance)
      inv.push_back({{"period", p.str()},
                     {"result", r.kind == InvarianceKind::Invariant
                                    ? "Invariant"
                                    : r.kind == InvarianceKind::TorsionOrder
                                          ? "TorsionOrder " +
                                                std::to_string(r.order)
                                          : "NotPeriodic"}});
    js["invariance"] = inv;
    expected.push_back(js);
  }
  j["expected"] = expected;
  if (e.triple) j["triple"] = triple_to_json(*e.triple);
  json certs = json::array();
  for (const auto& c : e.certificates) {
    json jc = certificate_to_json(c.cert);
    jc["name"] = c.name;
    certs.push_back(jc);
  }
  j["certificates"] = certs;
  return j;
}

}  // namespace ckit
