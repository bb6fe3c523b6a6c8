#pragma once

#include <set>

#include "cycas/order.hpp"

namespace cycas {

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division of f by the list G under an admissible order:
// f = sum quotients[i]*G[i] + remainder, no remainder term divisible by any
// leading term of G.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G,
                      const TermOrder& order);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const TermOrder& order);

struct GroebnerBasis {
  std::vector<Polynomial> generators;  // reduced, monic, sorted by leading term
  TermOrder order;
};

// Buchberger's algorithm; returns the reduced Groebner basis, which is
// canonical for the ideal and order regardless of generator input order.
GroebnerBasis buchberger(std::vector<Polynomial> gens, const TermOrder& order);

// Basis elements supported only on `keep` — a Groebner basis of the
// elimination ideal. The order must be a block order whose last block is
// exactly `keep`.
std::vector<Polynomial> eliminate(const GroebnerBasis& G, const std::set<int>& keep);

}  // namespace cycas
