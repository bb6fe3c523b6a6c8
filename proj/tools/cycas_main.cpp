// Command-line front end: run blow-downs, verify golden data, solve weights,
// translate superpotentials, and check matrix factorizations.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cycas/cases.hpp"
#include "cycas/format.hpp"
#include "cycas/matfact.hpp"

namespace {

using namespace cycas;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

std::optional<std::array<long, 6>> parse_weight_pick(const std::string& name,
                                                     const std::string& pick) {
  if (pick.empty()) return std::nullopt;
  long d = 0, e = 0;
  bool have_d = false, have_e = false;
  std::stringstream ss(pick);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw RingError("--weight-pick expects d=<int>[,e=<int>]");
    std::string key = part.substr(0, eq);
    long val = std::stol(part.substr(eq + 1));
    if (key == "d") {
      d = val;
      have_d = true;
    } else if (key == "e") {
      e = val;
      have_e = true;
    } else {
      throw RingError("--weight-pick: unknown key " + key);
    }
  }
  if (!have_d) throw RingError("--weight-pick needs d=<int>");
  if (name == "Ohat" && !have_e) throw RingError("Ohat pick needs d=<int>,e=<int>");
  return hat_weights(name, d, e);
}

void apply_config(const std::string& path, std::string& case_name, int& k, long& max_degree,
                  std::string& format, std::string& pick) {
  std::ifstream in(path);
  if (!in) throw RingError("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    if (key == "case")
      case_name = val;
    else if (key == "k")
      k = std::stoi(val);
    else if (key == "max-degree")
      max_degree = std::stol(val);
    else if (key == "format")
      format = val;
    else if (key == "weight-pick")
      pick = val;
  }
}

int cmd_run(const std::string& case_name, int k, long max_degree, const std::string& format,
            const std::string& pick, bool serial) {
  CaseSpec spec = make_case(case_name, k);
  auto weights = parse_weight_pick(spec.name, pick);
  RunReport rep = run_registered_case(spec, max_degree, weights, !serial);
  if (format == "json")
    std::cout << report_json(rep) << "\n";
  else
    std::cout << report_text(rep);
  return 0;
}

int cmd_verify(const std::string& case_name, int k) {
  CaseSpec spec = make_case(case_name, k);
  if (spec.name == "Ak" && (k < 1 || k > 4))
    throw RingError("builtin verification covers Ak with k in 1..4");
  if (spec.name == "Dk" && (k < 2 || k > 4))
    throw RingError("builtin verification covers Dk with k in 2..4");
  VerifyReport rep = verify_case(spec);
  for (const auto& c : rep.checks)
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << spec.display_name() << ": " << c.label
              << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_weights(const std::string& case_name, int k) {
  CaseSpec spec = make_case(case_name, k);
  auto basis = solve_weights(spec.pterm);
  std::cout << "case: " << spec.display_name() << "\n";
  std::cout << "lattice rank: " << basis.size() << "\n";
  static const char* names[6] = {"b", "v1", "v2", "g", "w1", "w2"};
  for (const auto& v : basis) {
    std::cout << "basis:";
    for (int i = 0; i < 6; ++i) std::cout << " " << names[i] << "=" << v[i];
    std::cout << "\n";
  }
  std::cout << "documented:";
  for (int i = 0; i < 6; ++i) std::cout << " " << names[i] << "=" << spec.weights[i];
  std::cout << "\n";
  return 0;
}

int cmd_superpotential(const std::string& expr, int fields) {
  auto dict = dictionary_ring();
  Polynomial p = parse_poly(dict, expr);
  auto support = p.support_vars();
  bool is_w = support.count(dict->require("x")) || support.count(dict->require("y"));
  bool is_pterm = support.count(dict->require("g")) || support.count(dict->require("w1"));
  if (is_w && is_pterm) return usage_error("expression mixes superpotential and pterm variables");
  if (is_pterm || (!is_w && !is_pterm)) {
    // pterm -> W
    Polynomial E = geometric_from_perturbation(p);
    Polynomial W = superpotential_from_geometric(E, fields);
    std::cout << "pterm: " << poly_to_string(p) << "\n";
    std::cout << "E: " << poly_to_string(E) << "\n";
    std::cout << "W: " << poly_to_string(W) << "\n";
    return 0;
  }
  Polynomial pterm = perturbation_from_superpotential(p, fields);
  std::cout << "W: " << poly_to_string(p) << "\n";
  std::cout << "pterm: " << poly_to_string(pterm) << "\n";
  std::cout << "pterm (x<->y): " << poly_to_string(xy_swap(pterm)) << "\n";
  std::cout << "E: " << poly_to_string(geometric_from_perturbation(pterm)) << "\n";
  return 0;
}

int cmd_matfact(const std::string& family, int n, int m, bool deformed) {
  auto line = [&](const std::string& label, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << label << "\n";
    return ok;
  };
  bool all = true;
  if (family == "A") {
    AFactorization f = build_A_factorization(n, m, deformed);
    all &= line("A factorization product", verify_factorization(f.R, f.S, f.f).ok);
  } else if (family == "D") {
    DRelations rel = build_D_relations(n, m, deformed);
    if (!deformed) {
      all &= line("D relations/syzygies product",
                  verify_factorization(rel.R, *rel.S, rel.eqn).ok);
    } else {
      all &= line("det R equals the factored equation squared",
                  det(rel.R) == rel.factored_eqn * rel.factored_eqn);
      PolyMatrix cof = cofactor_matrix(rel.R);
      bool cof_ok = true;
      std::vector<int> vars;
      for (std::size_t i = 0; i < rel.eqn.table()->size(); ++i)
        vars.push_back(static_cast<int>(i));
      TermOrder ord = TermOrder::grevlex(vars);
      for (const auto& entry : cof.entries)
        if (!normal_form(entry, {rel.factored_eqn}, ord).is_zero()) cof_ok = false;
      all &= line("cofactor matrix vanishes modulo the factored equation", cof_ok);
    }
    PolyMatrix top(2, 4, rel.R.entries[0].table());
    for (int j = 0; j < 4; ++j) {
      top.at(0, j) = rel.R.at(0, j);
      top.at(1, j) = rel.R.at(1, j);
    }
    all &= line("Pluecker relations (top rows)",
                verify_plucker_relations(plucker(top), {n, m, deformed, false}));
  } else if (family == "length3") {
    Length3Factorization f = build_length3_factorization();
    Polynomial f3 = f.f - Polynomial::variable(f.f.table(), "x").pow(2);
    all &= line("3x3 product", verify_factorization(f.phi, f.psi, f3).ok);
    all &= line("6x6 product", verify_factorization(f.A, f.B, f.f).ok);
  } else if (family == "distinguished") {
    try {
      distinguished(n, m);
      all &= line("distinguished polynomial identities", true);
    } catch (const RingError& e) {
      all &= line(std::string("distinguished polynomial identities (") + e.what() + ")", false);
    }
  } else if (family == "tyurina") {
    all &= line("Tyurina factorization and proper transform", tyurina_check(n));
  } else if (family == "charts") {
    all &= line("A-case residual charts", residual_chart_checks(ChartFamily::ACase, n, m));
    all &= line("D-case residual charts (plain)",
                residual_chart_checks(ChartFamily::DPlain, n, m));
    all &= line("D-case residual charts (deformed)",
                residual_chart_checks(ChartFamily::DDeformed, n, m));
  } else {
    return usage_error("unknown matfact family " + family);
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact blow-downs of resolved ADE geometries"};
  app.require_subcommand(1);

  std::string case_name, format = "text", pick, config, expr, family;
  int k = 0, n = 3, m = 1, fields = 2;
  long max_degree = 0;
  bool serial = false, deformed = false;

  auto add_case_opts = [&](CLI::App* cmd, bool with_run_opts) {
    cmd->add_option("--case", case_name, "case name (Ohat/Ahat/Dhat/Ehat/Ak/Dk/E6/E7/E8)");
    cmd->add_option("--k", k, "parameter for Ak/Dk");
    cmd->add_option("--config", config, "key=value file mirroring the flags");
    if (with_run_opts) {
      cmd->add_option("--max-degree", max_degree, "weighted-degree search bound");
      cmd->add_option("--format", format, "text or json");
      cmd->add_option("--weight-pick", pick, "hat-case weight parameter, d=<int>[,e=<int>]");
      cmd->add_flag("--serial", serial, "disable the parallel slice reduction");
    }
  };

  CLI::App* run = app.add_subcommand("run", "search for global holomorphic functions");
  add_case_opts(run, true);
  CLI::App* verify = app.add_subcommand("verify", "check a case against its golden data");
  add_case_opts(verify, false);
  CLI::App* weights = app.add_subcommand("weights", "solve the quasi-homogeneity lattice");
  add_case_opts(weights, false);

  CLI::App* superpot = app.add_subcommand("superpotential", "translate W <-> perturbation");
  superpot->add_option("expression", expr, "polynomial in x,y or in g,w1")->required();
  superpot->add_option("--fields", fields, "number of matrix-model fields (1 or 2)");

  CLI::App* matfact = app.add_subcommand("matfact", "matrix factorization checks");
  matfact->add_option("--family", family, "A, D, length3, distinguished, tyurina, charts")
      ->required();
  matfact->add_option("--n", n, "n parameter");
  matfact->add_option("--m", m, "m parameter");
  matfact->add_flag("--deformed", deformed, "use the deformed variant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (!config.empty()) apply_config(config, case_name, k, max_degree, format, pick);
    if (run->parsed()) {
      if (case_name.empty()) return usage_error("run: --case is required");
      if (format != "text" && format != "json") return usage_error("--format must be text or json");
      return cmd_run(case_name, k, max_degree, format, pick, serial);
    }
    if (verify->parsed()) {
      if (case_name.empty()) return usage_error("verify: --case is required");
      return cmd_verify(case_name, k);
    }
    if (weights->parsed()) {
      if (case_name.empty()) return usage_error("weights: --case is required");
      return cmd_weights(case_name, k);
    }
    if (superpot->parsed()) return cmd_superpotential(expr, fields);
    if (matfact->parsed()) return cmd_matfact(family, n, m, deformed);
  } catch (const ParseError& e) {
    return usage_error(e.what());
  } catch (const RingError& e) {
    return usage_error(e.what());
  }
  return 2;
}
