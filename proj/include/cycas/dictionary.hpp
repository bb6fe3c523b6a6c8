#pragma once

#include <array>
#include <optional>

#include "cycas/ring.hpp"

namespace cycas {

// Rings used by the superpotential <-> geometric potential dictionary.
// Laurent ring: g invertible; w1, w2 normal directions; x,y sections for
// M <= 2 and x1..x4 for the general bundle-change statements.
VarTablePtr dictionary_ring();

// Section variables for an M-field potential: {x} for M=1, {x,y} for M=2,
// {x1..xM} above that.
std::vector<int> section_vars(const VarTablePtr& ring, int fields);

// W(x_1..x_M) as the gamma^M coefficient of E(gamma, sum x_i gamma^{i-1}).
Polynomial superpotential_from_geometric(const Polynomial& E, int fields);

// Minimal geometric potential: formal w1-integral of the perturbation term.
Polynomial geometric_from_perturbation(const Polynomial& pterm);

// Perturbation term for a 1- or 2-field superpotential; rejects M > 2 and
// constant terms.
Polynomial perturbation_from_superpotential(const Polynomial& W, int fields);

// Does gamma^n w1^m contribute to the M-field superpotential?
bool contributes(long n, long m, int fields);

// x <-> y symmetry on 2-field perturbation terms: gamma^n w1^m maps to
// gamma^{3-n-m} w1^m.
Polynomial xy_swap(const Polynomial& pterm);

struct BundleChange {
  Polynomial potential;       // in x1..xM
  int corank = 0;
  std::pair<int, int> new_bundle;  // O(r-1) + O(-r-1)
  bool transitions_verified = false;
  bool residue_verified = false;
};

// The quadratic bundle-changing potential for the perturbation
// gamma^{r+1} w1, with the coordinate-change identities checked exactly.
BundleChange bundle_change_transform(int fields, int r);

// Corank of the exact Hessian of W at a rational point of the x-variables.
int hessian_corank(const Polynomial& W, int fields,
                   const std::vector<GaussianRational>& point);

// Weights (d_beta, d_v1, d_v2, d_gamma, d_w1, d_w2) making the transition
// functions quasi-homogeneous.
using WeightAssignment = std::array<long, 6>;

// Basis of the integer solution lattice for a perturbation term given over
// the 6-variable transition ring (support in b, g, w1). Each basis vector is
// primitive, with d_beta >= 0 and the sign of zero-d_beta vectors fixed
// lexicographically.
std::vector<WeightAssignment> solve_weights(const Polynomial& pterm6);

struct PolarConstraints {
  Polynomial w2_choice;  // in gamma, x, y
  Polynomial c2;         // beta^{-2} coefficient, in x, y
  Polynomial c1;         // beta^{-1} coefficient, in x, y
};

// Substitutes w1 -> x + gamma*y into the v2 perturbation, cancels all poles
// of order >= 3 with w2, and returns the residual constraints.
PolarConstraints polar_constraints(const Polynomial& pterm6);

// pterm over the 6-variable transition ring (b as gamma^{-1}) <-> Laurent
// pterm in the dictionary ring.
Polynomial pterm_to_laurent(const Polynomial& pterm6, const VarTablePtr& dict);
Polynomial laurent_to_pterm6(const Polynomial& laurent, const VarTablePtr& ring6);

}  // namespace cycas
