#include "cycas/blowdown.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cycas {

VarTablePtr transition_ring() {
  static VarTablePtr ring = VarTable::make({"b", "v1", "v2", "g", "w1", "w2"});
  return ring;
}

namespace {

// Elimination order [v2] > [w2, v1, w1, b, g], lex inside the blocks, so the
// normal form rewrites v2 and v1 away and bg to 1.
TermOrder transition_order(const VarTablePtr& ring) {
  std::vector<TermOrder> blocks;
  blocks.push_back(TermOrder::lex({ring->require("v2")}));
  blocks.push_back(TermOrder::lex({ring->require("w2"), ring->require("v1"),
                                   ring->require("w1"), ring->require("b"),
                                   ring->require("g")}));
  return TermOrder::block(std::move(blocks));
}

TermOrder pole_order(const VarTablePtr& ring) {
  std::vector<long> w(ring->size(), 0);
  w[ring->require("b")] = 1;
  w[ring->require("v1")] = 1;
  w[ring->require("v2")] = 1;
  w[ring->require("g")] = -1;
  std::vector<int> all;
  for (std::size_t i = 0; i < ring->size(); ++i) all.push_back(static_cast<int>(i));
  return TermOrder::weighted(std::move(w), TermOrder::lex(std::move(all)));
}

}  // namespace

Polynomial TransitionIdeal::nf(const Polynomial& f) const {
  return normal_form(f, basis.generators, basis.order);
}

Polynomial TransitionIdeal::mixed(const Polynomial& f) const {
  return split_pure_mixed(nf(f), beta_vars, gamma_vars).mixed;
}

Polynomial TransitionIdeal::shift(const Polynomial& f) const {
  return f - split_pure_mixed(nf(f), beta_vars, gamma_vars).pure_a;
}

bool TransitionIdeal::certifies(const Polynomial& f) const {
  auto split = split_pure_mixed(nf(f), beta_vars, gamma_vars);
  return split.mixed.is_zero() && split.pure_a.is_zero();
}

TransitionIdeal build_ideal(const Polynomial& pterm6) {
  const auto ring = transition_ring();
  Polynomial pterm = embed(pterm6, ring);
  if (pterm.support_vars().count(ring->require("w2")) ||
      pterm.support_vars().count(ring->require("v1")) ||
      pterm.support_vars().count(ring->require("v2")))
    throw RingError("build_ideal: perturbation must involve only b, g, w1");

  auto var = [&](const char* n) { return Polynomial::variable(ring, n); };
  Polynomial one = Polynomial::constant(ring, GaussianRational(1));
  std::vector<Polynomial> gens;
  gens.push_back(var("b") * var("g") - one);
  gens.push_back(var("v1") - var("b") * var("w1"));
  gens.push_back(var("v2") - var("g").pow(3) * var("w2") - pterm);

  TransitionIdeal ideal;
  ideal.ring = ring;
  ideal.gens = gens;
  ideal.basis = buchberger(gens, transition_order(ring));
  ideal.pole_order = pole_order(ring);
  ideal.beta_vars = {ring->require("b"), ring->require("v1"), ring->require("v2")};
  ideal.gamma_vars = {ring->require("g"), ring->require("w1"), ring->require("w2")};
  return ideal;
}

Polynomial xreduce(const TransitionIdeal& ideal, const Polynomial& f0,
                   const std::vector<GhfEntry>& table) {
  Polynomial f = ideal.shift(f0);
  if (f.is_zero()) return f;
  Polynomial h = ideal.mixed(f);
  while (!h.is_zero()) {
    Term lead = leading_term(h, ideal.pole_order);
    bool subtracted = false;
    for (auto it = table.rbegin(); it != table.rend(); ++it) {
      if (!it->mixed_lead || !(*it->mixed_lead == lead.mono)) continue;
      f = f - it->poly.scaled(lead.coeff / it->mixed_lead_coeff);
      h = ideal.mixed(f);
      subtracted = true;
      break;
    }
    if (!subtracted)  // skip this mixed term; look at the next-lower one
      h = h - Polynomial::monomial(h.table(), lead.mono, lead.coeff);
  }
  return f;
}

std::vector<Monomial> monomials_of_weight(const VarTablePtr& ring,
                                          const std::array<long, 3>& weights, long degree,
                                          long zero_weight_cap) {
  int idx[3] = {ring->require("b"), ring->require("v1"), ring->require("v2")};
  std::vector<Monomial> out;
  for (long w : weights)
    if (w < 0) throw RingError("monomials_of_weight: negative chart weight");
  auto bound = [&](int which) {
    if (weights[which] > 0) return degree / weights[which];
    return zero_weight_cap;
  };
  if (degree < 0) return out;
  for (long i = 0; i <= bound(0); ++i) {
    long rem_i = degree - i * weights[0];
    if (weights[0] > 0 && rem_i < 0) break;
    for (long j = 0; j <= bound(1); ++j) {
      long rem_j = rem_i - j * weights[1];
      if (weights[1] > 0 && rem_j < 0) break;
      if (weights[2] > 0) {
        if (rem_j < 0 || rem_j % weights[2] != 0) continue;
        long k = rem_j / weights[2];
        Monomial m(ring->size());
        m.e[idx[0]] = static_cast<int>(i);
        m.e[idx[1]] = static_cast<int>(j);
        m.e[idx[2]] = static_cast<int>(k);
        out.push_back(std::move(m));
      } else {
        if (rem_j != 0) continue;
        for (long k = 0; k <= zero_weight_cap; ++k) {
          Monomial m(ring->size());
          m.e[idx[0]] = static_cast<int>(i);
          m.e[idx[1]] = static_cast<int>(j);
          m.e[idx[2]] = static_cast<int>(k);
          out.push_back(std::move(m));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    for (int v : idx) {
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
    }
    return false;
  });
  return out;
}

SliceResult reduce_slice(const TransitionIdeal& ideal, const std::vector<Monomial>& slice) {
  SliceResult res;
  for (const auto& mono : slice) {
    Polynomial f = xreduce(ideal, Polynomial::monomial(ideal.ring, mono), res.table);
    if (f.is_zero()) continue;
    Polynomial mixed = ideal.mixed(f);
    GhfEntry entry;
    entry.poly = f;
    if (mixed.is_zero()) {
      res.candidates.push_back(f);
    } else {
      Term lead = leading_term(mixed, ideal.pole_order);
      entry.mixed_lead = lead.mono;
      entry.mixed_lead_coeff = lead.coeff;
    }
    res.table.push_back(std::move(entry));
  }
  return res;
}

VarTablePtr y_ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return VarTable::make(std::move(names));
}

namespace {

struct ExtendedRing {
  VarTablePtr ring;
  std::vector<int> chart;  // chart variable indices, elimination-first order
  std::vector<int> ys;
};

ExtendedRing make_extended(const std::vector<std::string>& chart_names, std::size_t n_y) {
  std::vector<std::string> names = chart_names;
  for (std::size_t i = 1; i <= n_y; ++i) names.push_back("y" + std::to_string(i));
  ExtendedRing ext;
  ext.ring = VarTable::make(names);
  for (const auto& c : chart_names) ext.chart.push_back(ext.ring->require(c));
  for (std::size_t i = 1; i <= n_y; ++i)
    ext.ys.push_back(ext.ring->require("y" + std::to_string(i)));
  return ext;
}

TermOrder elimination_order(const ExtendedRing& ext) {
  std::vector<TermOrder> blocks;
  blocks.push_back(TermOrder::grevlex(ext.chart));
  blocks.push_back(TermOrder::grevlex(ext.ys));
  return TermOrder::block(std::move(blocks));
}

Polynomial project_to_y(const Polynomial& p, const VarTablePtr& yring) {
  return embed(p, yring);
}

}  // namespace

bool is_new(const Polynomial& f, const std::vector<Polynomial>& ghfs) {
  std::size_t n = ghfs.size() + 1;
  ExtendedRing ext = make_extended({"v2", "v1", "b"}, n);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& a = i < ghfs.size() ? ghfs[i] : f;
    Polynomial yi = Polynomial::variable(ext.ring, "y" + std::to_string(i + 1));
    gens.push_back(yi - embed(a, ext.ring));
  }
  GroebnerBasis G = buchberger(gens, elimination_order(ext));
  std::set<int> keep(ext.ys.begin(), ext.ys.end());
  auto elim = eliminate(G, keep);
  int yn = ext.ys.back();
  for (const auto& g : elim) {
    // Coefficient of the bare y_n monomial: nonzero means the candidate can
    // be solved for in terms of the previous functions.
    for (const auto& t : g.terms()) {
      if (t.mono.e[yn] != 1) continue;
      if (t.mono.total_degree() == 1) return false;
    }
  }
  return true;
}

std::vector<Polynomial> polysearch(const TransitionIdeal& ideal,
                                   const std::vector<Monomial>& slice,
                                   std::vector<Polynomial> ghfs) {
  SliceResult res = reduce_slice(ideal, slice);
  for (const auto& cand : res.candidates) {
    Polynomial normalized = monic(cand, ideal.basis.order);
    if (is_new(normalized, ghfs)) ghfs.push_back(normalized);
  }
  return ghfs;
}

std::vector<Polynomial> find_relations(const TransitionIdeal& ideal,
                                       const std::vector<Polynomial>& ghfs) {
  if (ghfs.size() < 2) return {};
  ExtendedRing ext = make_extended({"v2", "w2", "v1", "w1", "b", "g"}, ghfs.size());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.gens) gens.push_back(embed(g, ext.ring));
  for (std::size_t i = 0; i < ghfs.size(); ++i)
    gens.push_back(Polynomial::variable(ext.ring, "y" + std::to_string(i + 1)) -
                   embed(ghfs[i], ext.ring));
  GroebnerBasis G = buchberger(gens, elimination_order(ext));
  std::set<int> keep(ext.ys.begin(), ext.ys.end());
  auto elim = eliminate(G, keep);
  VarTablePtr yr = y_ring(ghfs.size());
  std::vector<Polynomial> out;
  for (const auto& g : elim) out.push_back(project_to_y(g, yr));
  return out;
}

ChartSolution invert_chart(const TransitionIdeal& ideal, const std::vector<Polynomial>& ghfs,
                           ChartSide side) {
  ChartSolution sol;
  sol.names = side == ChartSide::Beta ? std::vector<std::string>{"b", "v1", "v2"}
                                      : std::vector<std::string>{"g", "w1", "w2"};
  VarTablePtr yr = y_ring(ghfs.size());

  // Solve one coordinate at a time: eliminate the other two chart variables
  // and look for a basis element linear in the coordinate.
  for (const auto& name : sol.names) {
    std::vector<std::string> others;
    for (const auto& o : sol.names)
      if (o != name) others.push_back(o);
    std::vector<std::string> ring_names = {others[0], others[1], name};
    ExtendedRing ext = make_extended(ring_names, ghfs.size());
    int c = ext.ring->require(name);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ghfs.size(); ++i) {
      Polynomial a = side == ChartSide::Beta ? ghfs[i] : ideal.nf(ghfs[i]);
      gens.push_back(Polynomial::variable(ext.ring, "y" + std::to_string(i + 1)) -
                     embed(a, ext.ring));
    }
    std::vector<TermOrder> blocks;
    blocks.push_back(TermOrder::grevlex({ext.chart[0], ext.chart[1]}));
    std::vector<int> last = {c};
    last.insert(last.end(), ext.ys.begin(), ext.ys.end());
    blocks.push_back(TermOrder::grevlex(last));
    GroebnerBasis G = buchberger(gens, TermOrder::block(std::move(blocks)));

    std::optional<std::pair<Polynomial, Polynomial>> found;
    for (const auto& g : G.generators) {
      bool eligible = true;
      int max_c = 0;
      for (const auto& t : g.terms()) {
        if (t.mono.e[ext.chart[0]] != 0 || t.mono.e[ext.chart[1]] != 0) eligible = false;
        max_c = std::max(max_c, t.mono.e[c]);
      }
      if (!eligible || max_c != 1) continue;
      // g = c*p(y) + r(y)  ->  c = -r/p
      std::vector<Term> pterms, rterms;
      for (const auto& t : g.terms()) {
        Term nt = t;
        if (t.mono.e[c] == 1) {
          nt.mono.e[c] = 0;
          pterms.push_back(nt);
        } else {
          nt.coeff = -nt.coeff;
          rterms.push_back(nt);
        }
      }
      Polynomial p = project_to_y(Polynomial::from_terms(ext.ring, pterms), yr);
      Polynomial r = project_to_y(Polynomial::from_terms(ext.ring, rterms), yr);
      GaussianRational lead = p.terms()[0].coeff;
      found = {r.scaled(lead.inverse()), p.scaled(lead.inverse())};
      break;
    }
    sol.fractions.push_back(found);
  }
  return sol;
}

BlowdownResult run_case(const Polynomial& pterm6, const std::array<long, 6>& weights,
                        long max_degree, const RunOptions& opts) {
  TransitionIdeal ideal = build_ideal(pterm6);
  std::array<long, 3> beta_weights = {weights[0], weights[1], weights[2]};
  std::vector<long> wvec(weights.begin(), weights.end());

  // Per-degree reduction tables are independent (the same-weight shortcut),
  // so the reduction phase can run in parallel; discovery then serializes in
  // ascending degree so the output matches the sequential run exactly.
  std::vector<std::vector<Polynomial>> slice_candidates(max_degree + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel_slices)
#endif
  for (long d = 1; d <= max_degree; ++d) {
    auto slice = monomials_of_weight(ideal.ring, beta_weights, d, max_degree);
    slice_candidates[d] = reduce_slice(ideal, slice).candidates;
  }

  BlowdownResult res;
  for (long d = 1; d <= max_degree; ++d) {
    for (const auto& cand : slice_candidates[d]) {
      Polynomial normalized = monic(cand, ideal.basis.order);
      if (is_new(normalized, res.ghfs)) {
        res.ghfs.push_back(normalized);
        res.degrees.push_back(d);
      }
    }
  }
  for (const auto& g : res.ghfs) res.ghfs_gamma.push_back(ideal.nf(g));

  if (opts.with_relations) res.relations = find_relations(ideal, res.ghfs);

  // A_k cosmetic change of variables y4 -> y4 + y2 y1^{k-1}, adopted only
  // when it shortens the relation (either sign, since the monic convention
  // may have flipped the discovered generator).
  if (opts.ak_tilde_k > 0 && res.ghfs.size() == 4 && res.relations.size() == 1) {
    VarTablePtr yr = y_ring(4);
    Polynomial y4 = Polynomial::variable(yr, "y4");
    Polynomial corr = Polynomial::variable(yr, "y2") *
                      Polynomial::variable(yr, "y1").pow(opts.ak_tilde_k - 1);
    for (int sign : {1, -1}) {
      Polynomial c = sign > 0 ? corr : -corr;
      Polynomial substituted = substitute(res.relations[0], {{yr->require("y4"), y4 + c, false}});
      if (substituted.term_count() >= res.relations[0].term_count()) continue;
      Polynomial gen = res.ghfs[3] -
                       (res.ghfs[1] * res.ghfs[0].pow(opts.ak_tilde_k - 1))
                           .scaled(GaussianRational(sign));
      GaussianRational lead = leading_term(gen, ideal.basis.order).coeff;
      res.relations[0] =
          substitute(substituted, {{yr->require("y4"), y4.scaled(lead), false}});
      res.ghfs[3] = gen.scaled(lead.inverse());
      res.ghfs_gamma[3] = ideal.nf(res.ghfs[3]);
      break;
    }
  }

  if (opts.with_charts) {
    res.beta_chart = invert_chart(ideal, res.ghfs, ChartSide::Beta);
    res.gamma_chart = invert_chart(ideal, res.ghfs, ChartSide::Gamma);
  }
  return res;
}

namespace {

struct Fraction {
  Polynomial num, den;
  Fraction operator*(const Fraction& o) const { return {num * o.num, den * o.den}; }
  Fraction operator+(const Fraction& o) const {
    return {num * o.den + o.num * den, den * o.den};
  }
  Fraction operator-(const Fraction& o) const {
    return {num * o.den - o.num * den, den * o.den};
  }
  Fraction pow(long e) const {
    Fraction r = *this;
    Fraction acc{Polynomial::constant(num.table(), GaussianRational(1)),
                 Polynomial::constant(num.table(), GaussianRational(1))};
    for (long i = 0; i < e; ++i) acc = acc * r;
    return acc;
  }
};

}  // namespace

bool charts_round_trip(const TransitionIdeal& ideal, const BlowdownResult& result) {
  if (!result.beta_chart.solved_all() || !result.gamma_chart.solved_all()) return false;
  VarTablePtr yr = y_ring(result.ghfs.size());
  auto frac = [&](const ChartSolution& sol, int i) {
    return Fraction{sol.fractions[i]->first, sol.fractions[i]->second};
  };
  Fraction b = frac(result.beta_chart, 0), v1 = frac(result.beta_chart, 1),
           v2 = frac(result.beta_chart, 2);
  Fraction g = frac(result.gamma_chart, 0), w1 = frac(result.gamma_chart, 1),
           w2 = frac(result.gamma_chart, 2);

  TermOrder yorder = TermOrder::grevlex([&] {
    std::vector<int> v;
    for (std::size_t i = 0; i < yr->size(); ++i) v.push_back(static_cast<int>(i));
    return v;
  }());
  std::vector<Polynomial> rel_basis = result.relations;
  auto reduces_to_zero = [&](const Polynomial& p) {
    if (p.is_zero()) return true;
    if (rel_basis.empty()) return false;
    return normal_form(p, rel_basis, yorder).is_zero();
  };
  if (!rel_basis.empty()) rel_basis = buchberger(rel_basis, yorder).generators;

  Fraction one{Polynomial::constant(yr, GaussianRational(1)),
               Polynomial::constant(yr, GaussianRational(1))};

  // beta*gamma = 1
  Fraction id1 = b * g - one;
  if (!reduces_to_zero(id1.num)) return false;
  // gamma*v1 = w1
  Fraction id2 = g * v1 - w1;
  if (!reduces_to_zero(id2.num)) return false;
  // v2 = g^3 w2 + pterm(b, g, w1)
  Fraction rhs = g.pow(3) * w2;
  const auto& ring6 = ideal.ring;
  int ib = ring6->require("b"), ig = ring6->require("g"), iw1 = ring6->require("w1");
  const Polynomial& pterm = ideal.gens[2];  // v2 - g^3 w2 - pterm
  // Rebuild the perturbation from the stored generator.
  Polynomial ptail = Polynomial::variable(ring6, "v2") -
                     Polynomial::variable(ring6, "g").pow(3) * Polynomial::variable(ring6, "w2") -
                     pterm;
  for (const auto& t : ptail.terms()) {
    Fraction term{Polynomial::constant(yr, t.coeff), Polynomial::constant(yr, GaussianRational(1))};
    term = term * b.pow(t.mono.e[ib]) * g.pow(t.mono.e[ig]) * w1.pow(t.mono.e[iw1]);
    rhs = rhs + term;
  }
  Fraction id3 = v2 - rhs;
  return reduces_to_zero(id3.num);
}

}  // namespace cycas
