#pragma once

#include <vector>

#include "cycas/ring.hpp"

namespace cycas {

// Monomial comparison strategy. lex/grevlex compare on an explicit variable
// priority list (restriction to those variables); block orders compare
// block-by-block with earlier blocks dominating; the weighted variant is a
// total preorder refined by its tiebreak and is deliberately not admissible
// (it ranks pole degrees and is quarantined away from division/Buchberger).
class TermOrder {
 public:
  enum class Kind { Lex, Grevlex, Weighted, Block };

  TermOrder() = default;  // empty lex order; replace before use

  static TermOrder lex(std::vector<int> vars);
  static TermOrder grevlex(std::vector<int> vars);
  static TermOrder weighted(std::vector<long> weights, TermOrder tiebreak);
  static TermOrder block(std::vector<TermOrder> blocks);

  Kind kind() const { return kind_; }
  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool admissible() const;
  // Union of variables the order mentions (lex/grevlex/block); empty for weighted.
  std::vector<int> vars() const;
  const std::vector<TermOrder>& blocks() const { return blocks_; }

 private:
  Kind kind_{Kind::Lex};
  std::vector<int> vars_;
  std::vector<long> weights_;
  std::vector<TermOrder> blocks_;  // Block: sub-orders; Weighted: [tiebreak]
};

enum class Cmp { LT = -1, EQ = 0, GT = 1 };
inline Cmp compare(const TermOrder& o, const Monomial& a, const Monomial& b) {
  return static_cast<Cmp>(o.compare(a, b));
}

// Index of the largest term of p under the order; p must be nonzero.
std::size_t leading_index(const Polynomial& p, const TermOrder& order);
Term leading_term(const Polynomial& p, const TermOrder& order);
Polynomial monic(const Polynomial& p, const TermOrder& order);

}  // namespace cycas
