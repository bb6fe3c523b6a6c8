#include "cycas/order.hpp"

#include <algorithm>

namespace cycas {

TermOrder TermOrder::lex(std::vector<int> vars) {
  TermOrder o;
  o.kind_ = Kind::Lex;
  o.vars_ = std::move(vars);
  return o;
}

TermOrder TermOrder::grevlex(std::vector<int> vars) {
  TermOrder o;
  o.kind_ = Kind::Grevlex;
  o.vars_ = std::move(vars);
  return o;
}

TermOrder TermOrder::weighted(std::vector<long> weights, TermOrder tiebreak) {
  TermOrder o;
  o.kind_ = Kind::Weighted;
  o.weights_ = std::move(weights);
  o.blocks_.push_back(std::move(tiebreak));
  return o;
}

TermOrder TermOrder::block(std::vector<TermOrder> blocks) {
  TermOrder o;
  o.kind_ = Kind::Block;
  o.blocks_ = std::move(blocks);
  return o;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (int v : vars_) {
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
      }
      return 0;
    case Kind::Grevlex: {
      long da = 0, db = 0;
      for (int v : vars_) {
        da += a.e[v];
        db += b.e[v];
      }
      if (da != db) return da > db ? 1 : -1;
      // Reverse lex: the last variable with differing exponent decides,
      // smaller exponent there means larger monomial.
      for (auto it = vars_.rbegin(); it != vars_.rend(); ++it) {
        if (a.e[*it] != b.e[*it]) return a.e[*it] < b.e[*it] ? 1 : -1;
      }
      return 0;
    }
    case Kind::Weighted: {
      long da = 0, db = 0;
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        da += weights_[i] * a.e[i];
        db += weights_[i] * b.e[i];
      }
      if (da != db) return da > db ? 1 : -1;
      return blocks_[0].compare(a, b);
    }
    case Kind::Block:
      for (const auto& blk : blocks_) {
        int c = blk.compare(a, b);
        if (c != 0) return c;
      }
      return 0;
  }
  return 0;
}

bool TermOrder::admissible() const {
  switch (kind_) {
    case Kind::Lex:
    case Kind::Grevlex:
      return true;
    case Kind::Weighted:
      return false;  // quarantined: pole orders never drive division
    case Kind::Block:
      return std::all_of(blocks_.begin(), blocks_.end(),
                         [](const TermOrder& b) { return b.admissible(); });
  }
  return false;
}

std::vector<int> TermOrder::vars() const {
  std::vector<int> out;
  switch (kind_) {
    case Kind::Lex:
    case Kind::Grevlex:
      return vars_;
    case Kind::Weighted:
      return {};
    case Kind::Block:
      for (const auto& b : blocks_) {
        auto v = b.vars();
        out.insert(out.end(), v.begin(), v.end());
      }
      return out;
  }
  return out;
}

std::size_t leading_index(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) throw RingError("leading term of zero polynomial");
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.terms().size(); ++i)
    if (order.compare(p.terms()[i].mono, p.terms()[best].mono) > 0) best = i;
  return best;
}

Term leading_term(const Polynomial& p, const TermOrder& order) {
  return p.terms()[leading_index(p, order)];
}

Polynomial monic(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) return p;
  return p.scaled(leading_term(p, order).coeff.inverse());
}

}  // namespace cycas
