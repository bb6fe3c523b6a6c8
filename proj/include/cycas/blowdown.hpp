#pragma once

#include <array>
#include <optional>

#include "cycas/groebner.hpp"

namespace cycas {

// The transition ring b, v1, v2, g, w1, w2 (true polynomials: beta stands for
// gamma^{-1} after the rewrite).
VarTablePtr transition_ring();

// Ideal of the glued charts: <bg-1, v1 - b w1, v2 - g^3 w2 - pterm>, with its
// Groebner basis under the elimination order [v2] > [w2, v1, w1, b, g] and the
// pole order TP used to rank mixed terms.
struct TransitionIdeal {
  VarTablePtr ring;
  std::vector<Polynomial> gens;
  GroebnerBasis basis;
  TermOrder pole_order;  // weighted (1,1,1,-1,0,0), lex tiebreak; never fed to division
  std::set<int> beta_vars, gamma_vars;

  Polynomial nf(const Polynomial& f) const;
  // Mixed part of the normal form (terms touching both charts).
  Polynomial mixed(const Polynomial& f) const;
  // f minus the pure-(b,v1,v2) part of its normal form.
  Polynomial shift(const Polynomial& f) const;
  // A global holomorphic function reduces to a pure gamma-chart polynomial.
  bool certifies(const Polynomial& f) const;
};

TransitionIdeal build_ideal(const Polynomial& pterm6);

struct GhfEntry {
  Polynomial poly;  // in b, v1, v2
  std::optional<Monomial> mixed_lead;
  GaussianRational mixed_lead_coeff;
};

// Reduction loop: cancel the leading mixed term against same-degree
// table entries while possible, skipping to the next-lower mixed term when no
// entry matches.
Polynomial xreduce(const TransitionIdeal& ideal, const Polynomial& f,
                   const std::vector<GhfEntry>& table);

// All b^i v1^j v2^k of the given weighted degree, ascending lexicographically
// by exponent vector. Exponents of zero-weight variables are capped by
// zero_weight_cap (the search's degree bound).
std::vector<Monomial> monomials_of_weight(const VarTablePtr& ring,
                                          const std::array<long, 3>& weights, long degree,
                                          long zero_weight_cap);

// One weighted-degree slice: xreduce every monomial against the growing
// same-degree table; returns the certified candidates in discovery order.
struct SliceResult {
  std::vector<Polynomial> candidates;
  std::vector<GhfEntry> table;
};
SliceResult reduce_slice(const TransitionIdeal& ideal, const std::vector<Monomial>& slice);

// Independence test: eliminate the chart variables from <y_i - ghf_i, y_N - f>
// and accept f when no elimination generator is linear in y_N at the origin.
bool is_new(const Polynomial& f, const std::vector<Polynomial>& ghfs);

// polysearch over one slice: reduce, then certify candidates against the
// running list via is_new. Returns the updated list.
std::vector<Polynomial> polysearch(const TransitionIdeal& ideal,
                                   const std::vector<Monomial>& slice,
                                   std::vector<Polynomial> ghfs);

// y1..yN ring for relation output.
VarTablePtr y_ring(std::size_t n);

// Groebner basis of the relation ideal among the global holomorphic
// functions (chart variables eliminated).
std::vector<Polynomial> find_relations(const TransitionIdeal& ideal,
                                       const std::vector<Polynomial>& ghfs);

enum class ChartSide { Beta, Gamma };

struct ChartSolution {
  // Coordinate name -> (numerator, denominator) over the y-ring; unsolved
  // coordinates are absent.
  std::vector<std::string> names;
  std::vector<std::optional<std::pair<Polynomial, Polynomial>>> fractions;
  bool solved_all() const {
    for (const auto& f : fractions)
      if (!f) return false;
    return true;
  }
};

ChartSolution invert_chart(const TransitionIdeal& ideal, const std::vector<Polynomial>& ghfs,
                           ChartSide side);

struct BlowdownResult {
  std::vector<Polynomial> ghfs;        // beta-chart expressions, discovery order, monic
  std::vector<Polynomial> ghfs_gamma;  // matching gamma-chart expressions
  std::vector<long> degrees;
  std::vector<Polynomial> relations;  // over y_ring(ghfs.size())
  ChartSolution beta_chart, gamma_chart;
};

struct RunOptions {
  std::optional<std::array<long, 6>> weight_pick;
  bool parallel_slices = true;
  bool with_relations = true;
  bool with_charts = true;
  // Cosmetic substitution y4 -> y4 + y2 y1^{k-1} when it shortens the A_k
  // relation; 0 disables.
  long ak_tilde_k = 0;
};

BlowdownResult run_case(const Polynomial& pterm6, const std::array<long, 6>& weights,
                        long max_degree, const RunOptions& opts = {});

// Re-substitute solved chart fractions through the transition functions and
// check the identities modulo the relation ideal (the blow-back-up check).
bool charts_round_trip(const TransitionIdeal& ideal, const BlowdownResult& result);

}  // namespace cycas
