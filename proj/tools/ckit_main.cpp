// ckit — exact diagnostics for canonical bundles of Lie groups with
// invariant complex structures: structural checks, the canonical 1-form,
// triviality verdicts, explicit sections, and lattice certificates.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "ckit/report.hpp"
#include "ckit/salamon.hpp"

namespace {

using namespace ckit;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, Scalar> bind_params(const std::vector<std::string>& kv) {
  std::map<std::string, Scalar> out;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw DomainError("parameter must be name=value: " + s);
    out[s.substr(0, eq)] = Scalar::parse(s.substr(eq + 1));
  }
  return out;
}

// Accepts either the tuple notation directly or a JSON algebra document.
LieAlgebra load_algebra(const std::string& path,
                        const std::map<std::string, Scalar>& params) {
  std::string text = read_file(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return algebra_from_json(json::parse(text));
  return parse_salamon(text, params);
}

SMat load_j(const std::string& path) {
  json j = json::parse(read_file(path));
  if (j.contains("J")) return matrix_from_json(j["J"]);
  return matrix_from_json(j);
}

void print_text_summary(const json& rep) {
  const auto& st = rep["structure"];
  std::cout << "structure: jacobi=" << st["jacobi"] << " unimodular="
            << st["unimodular"] << " solvable=" << st["solvable"]
            << " nilpotent=" << st["nilpotent"] << "\n";
  if (rep.contains("complex")) {
    const auto& cx = rep["complex"];
    if (cx.contains("error")) {
      std::cout << "complex: error: " << cx["error"].get<std::string>() << "\n";
    } else {
      std::cout << "complex: integrable=" << cx["integrable"]
                << " verdict=" << cx["verdict"].get<std::string>()
                << " obstruction=" << cx["obstruction"].get<std::string>()
                << "\n";
      std::cout << "psi: " << cx["psi"].dump() << "\n";
    }
  }
  if (rep.contains("section")) {
    const auto& sec = rep["section"];
    if (sec.contains("error")) {
      std::cout << "section: error: " << sec["error"].get<std::string>() << "\n";
    } else {
      std::cout << "section: sigma=" << sec["sigma"].get<std::string>()
                << " alpha=" << sec["alpha"].dump();
      if (sec.contains("lambda"))
        std::cout << " lambda=" << sec["lambda"].get<std::string>();
      std::cout << " verified=" << sec["verified"] << "\n";
      if (sec.contains("invariance"))
        for (const auto& one : sec["invariance"])
          std::cout << "  period " << one["period"].get<std::string>() << ": "
                    << (one.contains("result")
                            ? one["result"].get<std::string>()
                            : "error: " + one["error"].get<std::string>())
                    << "\n";
    }
  }
  if (rep.contains("lattice"))
    std::cout << "lattice: " << rep["lattice"].dump() << "\n";
  if (rep.contains("hypercomplex"))
    std::cout << "hypercomplex: " << rep["hypercomplex"].dump() << "\n";
}

int report_and_exit(const json& rep, bool as_json) {
  if (as_json)
    std::cout << rep.dump(2) << "\n";
  else
    print_text_summary(rep);
  return exit_code_for(rep);
}

int cmd_parse(const std::string& file,
              const std::vector<std::string>& params) {
  LieAlgebra L = load_algebra(file, bind_params(params));
  json out;
  out["algebra"] = algebra_to_json(L);
  out["shorthand"] = print_salamon(L);
  auto jac = validate_jacobi(L);
  out["jacobi"] = jac.pass;
  std::cout << out.dump(2) << "\n";
  return jac.pass ? 0 : 1;
}

int cmd_check(const std::string& file, const std::string& jfile,
              const std::vector<std::string>& params, bool as_json) {
  PipelineInput in(load_algebra(file, bind_params(params)));
  if (!jfile.empty()) in.J = load_j(jfile);
  return report_and_exit(run_pipeline(in), as_json);
}

int cmd_section(const std::string& file, const std::string& jfile,
                const std::vector<std::string>& params,
                const std::vector<std::string>& periods) {
  PipelineInput in(load_algebra(file, bind_params(params)));
  in.J = load_j(jfile);
  for (const auto& p : periods) in.periods.push_back(Period::parse(p));
  return report_and_exit(run_pipeline(in), true);
}

int cmd_lattice_verify(const std::string& certfile) {
  LatticeCertificate cert = certificate_from_json(json::parse(read_file(certfile)));
  auto check = verify_certificate(cert);
  json out;
  out["pass"] = check.pass;
  if (!check.pass) out["detail"] = check.detail;
  json es = json::array();
  for (const auto& E : check.conjugates) es.push_back(matrix_to_json(E));
  out["conjugates"] = es;
  std::cout << out.dump(2) << "\n";
  return check.pass ? 0 : 1;
}

int cmd_catalog_list() {
  for (const auto& name : catalog_list()) std::cout << name << "\n";
  return 0;
}

// "3" or "3..10".
std::pair<long long, long long> parse_m_range(const std::string& spec) {
  auto dots = spec.find("..");
  if (dots == std::string::npos) {
    long long v = std::stoll(spec);
    return {v, v};
  }
  return {std::stoll(spec.substr(0, dots)), std::stoll(spec.substr(dots + 2))};
}

int cmd_catalog_run(const std::string& name, long long m_lo, long long m_hi,
                    long long n, const std::vector<std::string>& params) {
  std::vector<std::string> names;
  if (name.empty())
    names = catalog_list();
  else
    names.push_back(name);
  bool all = true;
  json out = json::array();
  for (const auto& nm : names) {
    for (long long m = m_lo; m <= m_hi; ++m) {
      CatalogParams cp;
      cp.m = m;
      cp.n = n;
      cp.scalars = bind_params(params);
      json rep = catalog_report(catalog_build(nm, cp));
      rep["m"] = m;
      all &= rep["pass"].get<bool>();
      out.push_back(rep);
      std::cout << (rep["pass"].get<bool>() ? "pass  " : "FAIL  ") << nm
                << " (m=" << m << ")\n";
    }
  }
  return all ? 0 : 1;
}

int cmd_catalog_export(const std::string& name, long long m, long long n) {
  CatalogParams cp;
  cp.m = m;
  cp.n = n;
  std::cout << entry_to_json(catalog_build(name, cp)).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ckit: exact canonical-bundle diagnostics for Lie algebras with "
      "invariant complex structures"};
  app.require_subcommand(1);

  std::string file, jfile, certfile, name;
  std::string m_spec = "3";
  std::vector<std::string> params, periods;
  bool as_json = false;
  long long m = 3, n = 1;

  auto* parse = app.add_subcommand("parse", "parse a tuple-notation algebra");
  parse->add_option("file", file)->required();
  parse->add_option("--param", params, "bind name=value");

  auto* check = app.add_subcommand("check", "run the diagnostic pipeline");
  check->add_option("file", file)->required();
  check->add_option("--j", jfile, "complex structure (JSON matrix)");
  check->add_option("--param", params);
  check->add_flag("--json", as_json, "emit the JSON report");

  auto* section = app.add_subcommand("section", "build and verify a section");
  section->add_option("file", file)->required();
  section->add_option("--j", jfile)->required();
  section->add_option("--param", params);
  section->add_option("--period", periods, "lattice period (e.g. 2pi, pi)");

  auto* lat = app.add_subcommand("lattice-verify", "verify a certificate");
  lat->add_option("cert", certfile)->required();

  auto* cat = app.add_subcommand("catalog", "catalog operations");
  auto* cat_list = cat->add_subcommand("list", "list entries");
  auto* cat_run = cat->add_subcommand("run", "run entries against expectations");
  cat_run->add_option("name", name, "entry (default: all)");
  cat_run->add_option("--m", m_spec, "lattice parameter, single or range (3..10)");
  cat_run->add_option("--n", n, "family size parameter");
  cat_run->add_option("--param", params);
  auto* cat_export = cat->add_subcommand("export", "emit an entry as JSON");
  cat_export->add_option("name", name)->required();
  cat_export->add_option("--m", m);
  cat_export->add_option("--n", n);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*parse) return cmd_parse(file, params);
    if (*check) return cmd_check(file, jfile, params, as_json);
    if (*section) return cmd_section(file, jfile, params, periods);
    if (*lat) return cmd_lattice_verify(certfile);
    if (*cat) {
      if (*cat_list) return cmd_catalog_list();
      if (*cat_run) {
        auto [lo, hi] = parse_m_range(m_spec);
        return cmd_catalog_run(name, lo, hi, n, params);
      }
      if (*cat_export) return cmd_catalog_export(name, m, n);
      std::cerr << "catalog: need a subcommand (list|run|export)\n";
      return 2;
    }
  } catch (const ckit::ParseError& e) {
    std::cerr << "parse error at offset " << e.pos << ": " << e.what() << "\n";
    return 2;
  } catch (const ckit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
