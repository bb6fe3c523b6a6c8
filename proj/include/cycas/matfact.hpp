#pragma once

#include <optional>

#include "cycas/order.hpp"

namespace cycas {

struct PolyMatrix {
  int rows = 0, cols = 0;
  std::vector<Polynomial> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(int r, int c, const VarTablePtr& table)
      : rows(r), cols(c), entries(r * c, Polynomial::zero(table)) {}

  Polynomial& at(int r, int c) { return entries[r * cols + c]; }
  const Polynomial& at(int r, int c) const { return entries[r * cols + c]; }
};

// Entry-parallel product (OpenMP when available) and the serial reference it
// is benchmarked against.
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix matmul_serial(const PolyMatrix& a, const PolyMatrix& b);

Polynomial det(const PolyMatrix& m);             // Laplace expansion
PolyMatrix cofactor_matrix(const PolyMatrix& m);  // entries: signed minors

struct FactorizationCheck {
  bool ok = false;
  std::optional<std::pair<int, int>> witness;  // first offending entry
};

// RS = SR = f * identity, exactly.
FactorizationCheck verify_factorization(const PolyMatrix& R, const PolyMatrix& S,
                                        const Polynomial& f);

struct AFactorization {
  PolyMatrix R, S;
  Polynomial f;
};

// Relations/syzygies pair for the m-th node of A_{n-1}; the deformed variant
// splits the roots into f'_{n-m-1} and f''_{m-1} over symbolic t1..tn.
AFactorization build_A_factorization(int n, int m, bool deformed);

struct DRelations {
  PolyMatrix R;
  std::optional<PolyMatrix> S;  // plain case only
  Polynomial eqn;
  // The equation the matrix actually factors: equal to eqn in the plain
  // case; in the deformed case eqn minus the 2 i^{m-1} delta' [24] minor
  // correction of the blowup relations.
  Polynomial factored_eqn;
};

// Plain D_{n+2} relations/syzygies matrices (parity of m picks the shape), or
// the unified deformed relations matrix plus the deformed equation.
DRelations build_D_relations(int n, int m, bool deformed);

// The six 2x2 minors of a 2x4 matrix, labelled by the Grassmannian
// convention gamma=[12], beta=[13], delta=[14], alpha=[23], eps=[24],
// phi=[34].
struct PluckerMinors {
  Polynomial p12, p13, p14, p23, p24, p34;
};
PluckerMinors plucker(const PolyMatrix& top_rows);

// gamma*phi + delta*alpha - beta*eps, zero for minors of an actual matrix.
Polynomial grassmann_quadric(const PluckerMinors& m);

struct PluckerContext {
  int n = 0, m = 0;
  bool deformed = false;
  bool bottom_rows = false;
};

// The three stated minor identities for the D-case relation matrices; exact
// except the plain gamma = -Z*phi relation, which holds modulo the equation.
bool verify_plucker_relations(const PluckerMinors& minors, const PluckerContext& ctx);

// Symmetric-function constructions parameterizing deformed D-type equations.
struct DistinguishedPolys {
  VarTablePtr ring;  // Z, U, t1..t_{n+2}
  int n = 0, m = 0;
  Polynomial f, g, P, Q, S, h, G, delta;
  Polynomial fp, fpp, gp, gpp, hp, hpp, Ppp, Qpp, Spp, deltap, deltapp;
};

// Builds all members over symbolic t and verifies the defining identities
// internally (throws on any failure).
DistinguishedPolys distinguished(int n, int m);

// (X+P)(X-P) + (Y-S)(YZ+S Z+2 delta) equals the deformed D_{n+2} equation and
// the proper transform of the Tyurina blowup is (Z+U^2)(Y-S+2G) + 2f.
bool tyurina_check(int n);

struct Length3Factorization {
  PolyMatrix A, B;      // 6x6 pair
  PolyMatrix phi, psi;  // 3x3 pair
  Polynomial f;         // x^2 - y^3 + z^5 + 3tyz^2 + t^3 z
};
Length3Factorization build_length3_factorization();

enum class ChartFamily { ACase, DPlain, DDeformed };

// Residual-singularity chart identities after blowing up: A-case proper
// transforms, the D-case phi=1 chart division trick, and the eps=1 preferred
// versal form.
bool residual_chart_checks(ChartFamily family, int n, int m);

}  // namespace cycas
