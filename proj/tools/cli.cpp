// Copyright 2026 The OrbiDR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "orbidr/bernoulli.hpp"
#include "orbidr/dr_engine.hpp"
#include "orbidr/psi_oracle.hpp"
#include "orbidr/stable_graph.hpp"

namespace orbidr::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
  if (!obj.is_object()) throw Error("problem file: " + where + " must be an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key))
      throw Error("problem file: unknown key '" + key + "' in " + where);
}

struct Options {
  std::string branch = "both";
  std::vector<long> r_samples;
  int degree = -1;  // -1 means "use genus"
};

struct ParsedProblem {
  DRProblem p;
  Options opt;
  json echo;
};

ParsedProblem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open problem file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(std::string("problem file is not valid JSON: ") + e.what());
  }
  check_keys(j, {"target", "genus", "absolute", "relative_zero", "relative_infinity", "options"},
             "top level");
  ParsedProblem out;
  out.echo = j;
  if (!j.contains("target") || !j.contains("genus"))
    throw Error("problem file: 'target' and 'genus' are required");
  check_keys(j["target"], {"m", "s"}, "target");
  out.p.rep = BundleRep(j["target"].value("m", 1), j["target"].value("s", 0));
  out.p.g = j["genus"].get<int>();

  auto read_sector = [&](const json& e, bool with_contact, const std::string& where) {
    check_keys(e, with_contact ? std::set<std::string>{"sector", "contact"}
                               : std::set<std::string>{"sector"},
               where);
    Sector s(e.at("sector").get<int>());
    Rational mu(0);
    if (with_contact) {
      const json& c = e.at("contact");
      mu = c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long>());
    }
    return std::make_pair(s, mu);
  };

  if (j.contains("absolute"))
    for (const auto& e : j["absolute"])
      out.p.absolute.push_back(read_sector(e, false, "absolute entry").first);
  if (j.contains("relative_zero"))
    for (const auto& e : j["relative_zero"])
      out.p.mu_zero.push_back(read_sector(e, true, "relative_zero entry"));
  if (j.contains("relative_infinity"))
    for (const auto& e : j["relative_infinity"])
      out.p.mu_infinity.push_back(read_sector(e, true, "relative_infinity entry"));

  if (j.contains("options")) {
    check_keys(j["options"], {"branch", "r_samples", "degree"}, "options");
    out.opt.branch = j["options"].value("branch", "both");
    if (out.opt.branch != "zero" && out.opt.branch != "infinity" && out.opt.branch != "both")
      throw Error("problem file: options.branch must be zero, infinity or both");
    if (j["options"].contains("r_samples"))
      for (const auto& r : j["options"]["r_samples"]) out.opt.r_samples.push_back(r.get<long>());
    out.opt.degree = j["options"].value("degree", -1);
  }
  return out;
}

json term_json(const GraphTerm& t, const std::string& coeff) {
  json j;
  j["graph"] = t.graph.encode();
  j["chi"] = t.chi;
  json psi = json::object();
  for (size_t h = 0; h < t.psi.size(); ++h)
    if (t.psi[h] != 0) psi[std::to_string(h)] = t.psi[h];
  j["psi"] = psi;
  json kappa = json::object();
  for (size_t v = 0; v < t.kappa.size(); ++v)
    if (!t.kappa[v].empty()) kappa[std::to_string(v)] = t.kappa[v];
  j["kappa"] = kappa;
  j["coeff"] = coeff;
  return j;
}

json class_json(const TautClass& c) {
  json arr = json::array();
  for (const auto& [key, tc] : c.terms()) arr.push_back(term_json(tc.first, tc.second.str()));
  return arr;
}

json rpoly_json(const RPolyClass& rp) {
  json arr = json::array();
  for (const auto& [key, tp] : rp.terms) {
    json coeffs = json::array();
    for (int d = 0; d <= tp.second.degree(); ++d) coeffs.push_back(tp.second.coeff(d).str());
    json j = term_json(tp.first, "0");
    j.erase("coeff");
    j["coeffs"] = coeffs;
    arr.push_back(j);
  }
  return arr;
}

void write_out(const json& doc, const std::string& out_path, std::ostream& out) {
  std::string payload = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << payload;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + out_path);
    f << payload;
  }
}

int cmd_dr(const std::string& path, const std::string& branch_flag, bool emit_rpoly,
           const std::string& out_path, std::ostream& out, std::ostream& err) {
  ParsedProblem pp = load_problem(path);
  ValidationReport report = validate_dr_problem(pp.p);
  if (!report.all_pass()) {
    err << "problem validation failed:\n";
    for (const auto& [name, ok] : report.items)
      err << "  " << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    return kExitValidation;
  }
  std::string branch = branch_flag.empty() ? pp.opt.branch : branch_flag;
  std::vector<std::string> branches;
  if (branch == "both") branches = {"zero", "infinity"};
  else if (branch == "zero" || branch == "infinity") branches = {branch};
  else throw Error("--branch must be zero, infinity or both");

  json payload;
  payload["branch"] = branch;
  payload["classes"] = json::object();
  if (emit_rpoly) payload["rpoly"] = json::object();
  json used_samples = json::object();
  std::vector<TautClass> classes;
  for (const std::string& b : branches) {
    Branch br = b == "zero" ? Branch::zero : Branch::infinity;
    RPolyClass rp;
    TautClass cls = dr_cycle_with(pp.p, br, pp.opt.r_samples, &rp);
    payload["classes"][b] = class_json(cls);
    if (emit_rpoly) payload["rpoly"][b] = rpoly_json(rp);
    TopData top = branch_top_data(pp.p, br);
    std::vector<long> samples =
        pp.opt.r_samples.empty() ? default_r_samples(top, pp.p.g) : pp.opt.r_samples;
    used_samples[b] = samples;
    classes.push_back(std::move(cls));
  }
  if (branches.size() == 2) payload["agreement"] = (classes[0] == classes[1]);

  json doc;
  doc["problem"] = pp.echo;
  doc["payload"] = payload;
  doc["provenance"] = {{"version", kVersion},
                       {"formula", "graph-sum with polynomial interpolation"},
                       {"r_samples", used_samples}};
  write_out(doc, out_path, out);
  return kExitOk;
}

int cmd_poly(const std::string& path, int degree_flag, const std::string& out_path,
             std::ostream& out, std::ostream& err) {
  ParsedProblem pp = load_problem(path);
  ValidationReport report = validate_dr_problem(pp.p);
  if (!report.all_pass()) {
    err << "problem validation failed\n";
    return kExitValidation;
  }
  std::string b = pp.opt.branch == "infinity" ? "infinity" : "zero";
  Branch br = b == "zero" ? Branch::zero : Branch::infinity;
  int d = degree_flag >= 0 ? degree_flag : (pp.opt.degree >= 0 ? pp.opt.degree : pp.p.g);
  TopData top = branch_top_data(pp.p, br);
  std::vector<long> samples =
      pp.opt.r_samples.empty() ? default_r_samples(top, d) : pp.opt.r_samples;
  RPolyClass rp = polynomial_class(top, d, samples);
  json doc;
  doc["problem"] = pp.echo;
  doc["payload"] = {{"branch", b}, {"degree", d}, {"rpoly", rpoly_json(rp)}};
  doc["provenance"] = {{"version", kVersion}, {"r_samples", samples}};
  write_out(doc, out_path, out);
  return kExitOk;
}

int cmd_graphs(int g, int n, std::ostream& out) {
  const auto& graphs = enumerate_graphs(g, n);
  out << "count " << graphs.size() << "\n";
  for (const auto& gr : graphs)
    out << gr.encode() << "  h1=" << gr.h1() << " aut=" << automorphism_order(gr) << "\n";
  return kExitOk;
}

int cmd_weights(const std::string& path, long r, std::ostream& out, std::ostream& err) {
  ParsedProblem pp = load_problem(path);
  ValidationReport report = validate_dr_problem(pp.p);
  if (!report.all_pass()) {
    err << "problem validation failed\n";
    return kExitValidation;
  }
  if (r < 1) throw Error("--r must be >= 1");
  TopData top = branch_top_data(pp.p, Branch::zero);
  long total = 0;
  for (const auto& graph : enumerate_graphs(top.g, top.n())) {
    for (const auto& dec : enumerate_decorations(graph, top.rep, top.leg_sectors)) {
      long count = weight_count(graph, dec, top.rep, top.lifts, r);
      out << "graph=" << graph.encode() << " chi=[";
      for (size_t i = 0; i < dec.chi.size(); ++i) out << (i ? "," : "") << dec.chi[i];
      out << "] count=" << count << "\n";
      total += count;
    }
  }
  out << "total " << total << "\n";
  return kExitOk;
}

int cmd_psi(int g, const std::string& exps, std::ostream& out) {
  std::vector<int> ks;
  std::stringstream ss(exps);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) ks.push_back(std::stoi(tok));
  out << psi_integral(g, ks).str() << "\n";
  return kExitOk;
}

int cmd_selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    out << (ok ? "ok  " : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };
  check("bernoulli B1(x) = x - 1/2",
        bernoulli_polynomial(1) == UniPoly(std::vector<Rational>{Rational(-1, 2), Rational(1)}));
  check("bernoulli B2(x) = x^2 - x + 1/6",
        bernoulli_polynomial(2) ==
            UniPoly(std::vector<Rational>{Rational(1, 6), Rational(-1), Rational(1)}));
  check("psi <tau_1>_1 = 1/24", psi_integral(1, {1}) == Rational(1, 24));
  DRProblem p0;
  p0.g = 0;
  p0.rep = BundleRep(1, 0);
  p0.mu_zero = {{Sector(0), Rational(2)}};
  p0.mu_infinity = {{Sector(0), Rational(1)}, {Sector(0), Rational(1)}};
  TautClass z = dr_cycle(p0, Branch::zero);
  TautClass i = dr_cycle(p0, Branch::infinity);
  check("genus-0 fundamental class, both branches",
        z == i && z.terms().size() == 1 && z.terms().begin()->second.second == Rational(1));
  DRProblem p1;
  p1.g = 1;
  p1.rep = BundleRep(1, 0);
  p1.mu_zero = {{Sector(0), Rational(1)}};
  p1.mu_infinity = {{Sector(0), Rational(1)}};
  TautClass d1 = dr_cycle(p1, Branch::zero);
  bool found_loop = false;
  for (const auto& [key, tc] : d1.terms())
    if (tc.first.graph.num_edges() == 1 && tc.second == Rational(-1, 24)) found_loop = true;
  check("genus-1 self-edge coefficient -1/24", found_loop);
  check("genus-1 branch equality", d1 == dr_cycle(p1, Branch::infinity));
  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact double ramification cycles for cyclic gerbe targets"};
  app.require_subcommand(1);

  std::string problem_path, branch_flag, out_path, exps;
  bool emit_rpoly = false;
  int degree_flag = -1, g = 0, n = 0;
  long r = 0;

  auto* dr = app.add_subcommand("dr", "compute the DR cycle from a problem file");
  dr->add_option("problem", problem_path, "problem JSON file")->required();
  dr->add_option("--branch", branch_flag, "zero|infinity|both");
  dr->add_flag("--emit-rpoly", emit_rpoly, "include per-term r-polynomials");
  dr->add_option("--out", out_path, "write result JSON here instead of stdout");

  auto* poly = app.add_subcommand("poly", "interpolated per-term polynomials in r");
  poly->add_option("problem", problem_path, "problem JSON file")->required();
  poly->add_option("--degree", degree_flag, "truncation degree (default: genus)");
  poly->add_option("--out", out_path, "write result JSON here instead of stdout");

  auto* graphs = app.add_subcommand("graphs", "list canonical stable graphs");
  graphs->add_option("g", g, "genus")->required();
  graphs->add_option("n", n, "number of legs")->required();

  auto* weights = app.add_subcommand("weights", "weight-function counts per decoration");
  weights->add_option("problem", problem_path, "problem JSON file")->required();
  weights->add_option("--r", r, "modulus r")->required();

  auto* psi = app.add_subcommand("psi", "psi intersection number");
  psi->add_option("g", g, "genus")->required();
  psi->add_option("exponents", exps, "comma-separated exponents, e.g. 1,0,2")->required();

  app.add_subcommand("selftest", "run the built-in quick checks");

  std::vector<std::string> full = {"orbidr"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<char*> argv;
  argv.reserve(full.size());
  for (auto& s : full) argv.push_back(s.data());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << e.what() << "\n";
      return kExitValidation;
    }
    if (app.got_subcommand("dr"))
      return cmd_dr(problem_path, branch_flag, emit_rpoly, out_path, out, err);
    if (app.got_subcommand("poly")) return cmd_poly(problem_path, degree_flag, out_path, out, err);
    if (app.got_subcommand("graphs")) return cmd_graphs(g, n, out);
    if (app.got_subcommand("weights")) return cmd_weights(problem_path, r, out, err);
    if (app.got_subcommand("psi")) return cmd_psi(g, exps, out);
    if (app.got_subcommand("selftest")) return cmd_selftest(out);
    err << "no command\n";
    return kExitValidation;
  } catch (const NotPolynomial& e) {
    err << "polynomiality guard: " << e.what()
        << "\nhint: raise the r range (ORBIDR_RBOUND_FACTOR or options.r_samples)\n";
    return kExitNotPolynomial;
  } catch (const Unstable& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NotAdmissible& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UnbalancedContacts& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DegreeOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace orbidr::cli
