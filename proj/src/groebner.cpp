#include "cycas/groebner.hpp"

#include <algorithm>
#include <map>

namespace cycas {

namespace {

struct OrderCmp {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) < 0; }
};

using WorkPoly = std::map<Monomial, GaussianRational, OrderCmp>;

WorkPoly to_work(const Polynomial& p, const TermOrder& order) {
  WorkPoly w{OrderCmp{&order}};
  for (const auto& t : p.terms()) w.emplace(t.mono, t.coeff);
  return w;
}

void work_axpy(WorkPoly& w, const GaussianRational& c, const Monomial& m, const Polynomial& g) {
  // w -= c * m * g
  for (const auto& t : g.terms()) {
    Monomial mm = t.mono * m;
    auto it = w.find(mm);
    GaussianRational delta = c * t.coeff;
    if (it == w.end()) {
      delta = -delta;
      if (!delta.is_zero()) w.emplace(std::move(mm), std::move(delta));
    } else {
      it->second -= delta;
      if (it->second.is_zero()) w.erase(it);
    }
  }
}

// Strip the rational content so coefficients are Gaussian integers with
// trivial common integer factor; keeps Buchberger's intermediate
// coefficients small. The scalar change is irrelevant for basis membership.
Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero()) return p;
  mpz_class num_gcd = 0, den_lcm = 1;
  auto fold = [&](const Rational& r) {
    if (r == 0) return;
    num_gcd = gcd(num_gcd, mpz_class(r.get_num()));
    den_lcm = lcm(den_lcm, mpz_class(r.get_den()));
  };
  for (const auto& t : p.terms()) {
    fold(t.coeff.re);
    fold(t.coeff.im);
  }
  if (num_gcd == 0) return p;
  GaussianRational scale{Rational(den_lcm) / Rational(num_gcd)};
  return p.scaled(scale);
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G,
                      const TermOrder& order) {
  if (!order.admissible()) throw RingError("division requires an admissible term order");
  if (G.empty()) throw RingError("division by empty list");
  const auto& table = f.table();
  for (const auto& g : G) {
    require_same_table(f, g);
    if (g.is_zero()) throw RingError("division by zero polynomial");
  }
  std::vector<Term> lts;
  lts.reserve(G.size());
  for (const auto& g : G) lts.push_back(leading_term(g, order));

  WorkPoly p = to_work(f, order);
  std::vector<WorkPoly> quot(G.size(), WorkPoly{OrderCmp{&order}});
  std::vector<Term> rem;
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (!lts[i].mono.divides(lead->first)) continue;
      Monomial q = lead->first / lts[i].mono;
      GaussianRational c = lead->second / lts[i].coeff;
      auto it = quot[i].find(q);
      if (it == quot[i].end())
        quot[i].emplace(q, c);
      else
        it->second += c;
      work_axpy(p, c, q, G[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back({lead->first, lead->second});
      p.erase(lead);
    }
  }
  DivisionResult res;
  res.remainder = Polynomial::from_terms(table, std::move(rem));
  for (auto& q : quot) {
    std::vector<Term> terms;
    for (auto& [m, c] : q) terms.push_back({m, c});
    res.quotients.push_back(Polynomial::from_terms(table, std::move(terms)));
  }
  return res;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& order) {
  if (!order.admissible()) throw RingError("normal_form requires an admissible term order");
  if (G.empty()) throw RingError("normal_form with empty basis");
  const auto& table = f.table();
  for (const auto& g : G) require_same_table(f, g);
  std::vector<Term> lts;
  lts.reserve(G.size());
  for (const auto& g : G) lts.push_back(leading_term(g, order));

  WorkPoly p = to_work(f, order);
  std::vector<Term> rem;
  while (!p.empty()) {
    auto lead = std::prev(p.end());
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (!lts[i].mono.divides(lead->first)) continue;
      work_axpy(p, lead->second / lts[i].coeff, lead->first / lts[i].mono, G[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back({lead->first, lead->second});
      p.erase(lead);
    }
  }
  return Polynomial::from_terms(table, std::move(rem));
}

GroebnerBasis buchberger(std::vector<Polynomial> gens, const TermOrder& order) {
  if (!order.admissible()) throw RingError("buchberger requires an admissible term order");
  std::vector<Polynomial> basis;
  for (auto& g : gens) {
    if (g.is_zero()) throw RingError("buchberger: zero generator");
    basis.push_back(primitive_part(g));
  }
  std::vector<Monomial> lt;
  for (const auto& g : basis) lt.push_back(leading_term(g, order).mono);

  struct PairKey {
    long deg;
    Monomial lcm;
    std::size_t i, j;
    bool operator<(const PairKey& o) const {
      if (deg != o.deg) return deg < o.deg;
      if (!(lcm == o.lcm)) return lcm < o.lcm;
      if (i != o.i) return i < o.i;
      return j < o.j;
    }
  };
  std::set<PairKey> pending;
  std::set<std::pair<std::size_t, std::size_t>> handled;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    if (lt[i].coprime(lt[j])) {  // Buchberger's product criterion
      handled.insert({i, j});
      return;
    }
    Monomial l = Monomial::lcm(lt[i], lt[j]);
    pending.insert({l.total_degree(), l, i, j});
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

  while (!pending.empty()) {
    PairKey pk = *pending.begin();
    pending.erase(pending.begin());
    handled.insert({pk.i, pk.j});
    // Chain criterion: some k with LT(k) | lcm(i,j) and both (i,k), (j,k) done.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!lt[k].divides(pk.lcm)) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (handled.count(key(pk.i, k)) && handled.count(key(pk.j, k))) skip = true;
    }
    if (skip) continue;

    const Polynomial& f = basis[pk.i];
    const Polynomial& g = basis[pk.j];
    Term ltf = leading_term(f, order), ltg = leading_term(g, order);
    Polynomial s = f * Polynomial::monomial(f.table(), pk.lcm / ltf.mono,
                                            GaussianRational(1) / ltf.coeff) -
                   g * Polynomial::monomial(g.table(), pk.lcm / ltg.mono,
                                            GaussianRational(1) / ltg.coeff);
    if (s.is_zero()) continue;
    Polynomial r = normal_form(s, basis, order);
    if (r.is_zero()) continue;
    r = primitive_part(r);
    std::size_t n = basis.size();
    basis.push_back(r);
    lt.push_back(leading_term(r, order).mono);
    for (std::size_t i = 0; i < n; ++i) push_pair(i, n);
  }

  // Minimalize: drop generators whose leading term another one divides.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (lt[j].divides(lt[i]) && !(lt[i] == lt[j] && j > i)) keep[i] = false;
    }
  }
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // Interreduce tails and normalize monic.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      if (others.empty()) break;
      Polynomial r = normal_form(minimal[i], others, order);
      r = primitive_part(r);
      if (r != minimal[i]) {
        if (r.is_zero()) throw RingError("buchberger: minimal basis element reduced to zero");
        minimal[i] = r;
        changed = true;
      }
    }
  }
  for (auto& g : minimal) g = monic(g, order);
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(leading_term(a, order).mono, leading_term(b, order).mono) < 0;
  });
  return GroebnerBasis{std::move(minimal), order};
}

std::vector<Polynomial> eliminate(const GroebnerBasis& G, const std::set<int>& keep) {
  if (G.order.kind() != TermOrder::Kind::Block || G.order.blocks().empty())
    throw RingError("eliminate: order is not a block order");
  auto last = G.order.blocks().back().vars();
  std::set<int> last_set(last.begin(), last.end());
  if (last_set != keep) throw RingError("eliminate: keep does not match the order's last block");
  std::vector<Polynomial> out;
  for (const auto& g : G.generators) {
    bool pure = true;
    for (int v : g.support_vars())
      if (!keep.count(v)) {
        pure = false;
        break;
      }
    if (pure) out.push_back(g);
  }
  return out;
}

}  // namespace cycas
