#pragma once

#include "cycas/blowdown.hpp"
#include "cycas/dictionary.hpp"

namespace cycas {

struct GoldenData {
  std::vector<std::string> ghf_sources;       // beta-chart expressions
  std::vector<std::string> relation_sources;  // over y1..yN
  std::string ak_alt_y4;                      // A_k alternative fourth generator
};

struct CaseSpec {
  std::string name;  // Ohat, Ahat, Dhat, Ehat, Ak, Dk, E6, E7, E8
  int k = 0;
  std::string pterm_source;
  Polynomial pterm;  // over the transition ring
  std::array<long, 6> weights;
  long default_max_degree = 0;
  bool complete = false;
  GoldenData golden;

  std::string display_name() const {
    return k > 0 ? name + "(k=" + std::to_string(k) + ")" : name;
  }
};

const std::vector<std::string>& case_names();
bool case_needs_k(const std::string& name);
// Accepts aliases like "A_k"/"D_k" and the verification bounds on k.
CaseSpec make_case(const std::string& name, int k = 0);

// Documented hat-case weight formulas for a --weight-pick parameter.
std::array<long, 6> hat_weights(const std::string& name, long d, long e);

std::vector<Polynomial> golden_ghfs(const CaseSpec& spec);
std::vector<Polynomial> golden_relations(const CaseSpec& spec);

// Substitute y_i -> ghf_i into a y-ring polynomial and reduce modulo the
// transition ideal.
Polynomial relation_defect(const TransitionIdeal& ideal, const Polynomial& relation,
                           const std::vector<Polynomial>& ghfs);

// Brute-force kernel oracle for the degree-3 Veronese embedding: all
// quadratic binomials among the given monomial ghfs.
std::vector<Polynomial> veronese_binomials(const std::vector<Polynomial>& ghfs);

struct CheckLine {
  std::string label;
  bool pass = false;
};

struct VerifyReport {
  std::vector<CheckLine> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

VerifyReport verify_case(const CaseSpec& spec, bool parallel = true);

struct RunReport {
  CaseSpec spec;
  long max_degree = 0;
  std::array<long, 6> weights{};
  BlowdownResult result;
};

RunReport run_registered_case(const CaseSpec& spec, long max_degree,
                              std::optional<std::array<long, 6>> pick, bool parallel = true);

// Run the search and compare against the golden data: generator match up to
// scalar (with the A_k fourth-generator alternative), relation match up to
// unit after alignment, Veronese oracle for Ohat, substitution checks for
// Ehat.
struct GoldenMatch {
  RunReport run;
  bool generators = false;
  bool relations = false;
};
GoldenMatch match_against_golden(const CaseSpec& spec, long max_degree, bool parallel = true);

std::string report_text(const RunReport& report);
std::string report_json(const RunReport& report);

}  // namespace cycas
