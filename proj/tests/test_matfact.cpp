#include <doctest.h>

#include "cycas/format.hpp"
#include "cycas/groebner.hpp"
#include "cycas/matfact.hpp"

using namespace cycas;

namespace {

Polynomial P(const VarTablePtr& r, const std::string& s) { return parse_poly(r, s); }

struct Rng {
  unsigned long long state = 0x853c49e6748fea9bull;
  unsigned long long next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  long pick(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

Polynomial subst_zero_t(const Polynomial& p, int nt) {
  std::vector<Binding> b;
  for (int i = 1; i <= nt; ++i) {
    int idx = p.table()->index("t" + std::to_string(i));
    if (idx >= 0) b.push_back({idx, Polynomial::zero(p.table()), false});
  }
  return substitute(p, b);
}

}  // namespace

TEST_CASE("A-type factorizations") {
  SUBCASE("plain matrices from the relation module") {
    AFactorization f = build_A_factorization(3, 1, false);
    const auto& r = f.f.table();
    CHECK(f.R.at(0, 0) == P(r, "Y"));
    CHECK(f.R.at(0, 1) == P(r, "-Z"));
    CHECK(f.R.at(1, 0) == P(r, "Z^2"));
    CHECK(f.R.at(1, 1) == P(r, "-X"));
    CHECK(f.f == P(r, "X*Y - Z^3"));
    CHECK(verify_factorization(f.R, f.S, f.f).ok);
  }
  SUBCASE("identity matrices factor 1") {
    auto r = VarTable::make({"X"});
    PolyMatrix I(2, 2, r);
    I.at(0, 0) = P(r, "1");
    I.at(1, 1) = P(r, "1");
    CHECK(verify_factorization(I, I, P(r, "1")).ok);
  }
  SUBCASE("a broken pair is witnessed") {
    AFactorization f = build_A_factorization(3, 1, false);
    PolyMatrix bad = f.S;
    bad.at(0, 0) = bad.at(0, 0) + P(f.f.table(), "1");
    auto check = verify_factorization(f.R, bad, f.f);
    CHECK_FALSE(check.ok);
    CHECK(check.witness.has_value());
  }
  SUBCASE("deformed pair and its degeneration") {
    AFactorization f = build_A_factorization(4, 2, true);
    CHECK(verify_factorization(f.R, f.S, f.f).ok);
    AFactorization plain = build_A_factorization(4, 2, false);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Polynomial limit = subst_zero_t(f.R.at(i, j), 4);
        CHECK(poly_to_string(limit) == poly_to_string(plain.R.at(i, j)));
      }
  }
  CHECK_THROWS_AS(build_A_factorization(3, 3, false), RingError);
}

TEST_CASE("D-type relation matrices") {
  SUBCASE("plain odd and even products") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 3}, {6, 4}}) {
      DRelations rel = build_D_relations(n, m, false);
      REQUIRE(rel.S.has_value());
      CHECK(verify_factorization(rel.R, *rel.S, rel.eqn).ok);
      const auto& r = rel.eqn.table();
      CHECK(rel.eqn == P(r, "-X^2 - Y^2*Z + Z^" + std::to_string(n + 1)));
    }
  }
  SUBCASE("deformed determinant and cofactors at n=3, m=1") {
    DRelations rel = build_D_relations(3, 1, true);
    CHECK_FALSE(rel.S.has_value());
    CHECK(det(rel.R) == rel.factored_eqn * rel.factored_eqn);
    PolyMatrix cof = cofactor_matrix(rel.R);
    std::vector<int> vars;
    for (std::size_t i = 0; i < rel.eqn.table()->size(); ++i) vars.push_back((int)i);
    TermOrder ord = TermOrder::grevlex(vars);
    for (const auto& e : cof.entries)
      CHECK(normal_form(e, {rel.factored_eqn}, ord).is_zero());
    // The factored equation differs from the blowup equation by the
    // documented 2 i^{m-1} delta' [24] minor correction.
    PolyMatrix top(2, 4, rel.eqn.table());
    for (int j = 0; j < 4; ++j) {
      top.at(0, j) = rel.R.at(0, j);
      top.at(1, j) = rel.R.at(1, j);
    }
    PluckerMinors mm = plucker(top);
    DistinguishedPolys d = distinguished(3, 1);
    Polynomial deltap = embed(d.deltap, rel.eqn.table());
    Polynomial correction = (deltap * mm.p24).scaled(ipow(0) * GaussianRational(2));
    CHECK(rel.factored_eqn == rel.eqn - correction);
  }
}

TEST_CASE("Pluecker minors and relations") {
  SUBCASE("plain odd labels") {
    DRelations rel = build_D_relations(3, 1, false);
    const auto& r = rel.eqn.table();
    PolyMatrix top(2, 4, r);
    for (int j = 0; j < 4; ++j) {
      top.at(0, j) = rel.R.at(0, j);
      top.at(1, j) = rel.R.at(1, j);
    }
    PluckerMinors m = plucker(top);
    CHECK(m.p12 == P(r, "X^2 - Z^4"));
    CHECK(m.p34 == P(r, "Y^2"));
    CHECK(m.p14 == P(r, "I*X*Y"));
    CHECK(m.p23 == P(r, "I*X*Y"));
    CHECK(grassmann_quadric(m).is_zero());
    CHECK(verify_plucker_relations(m, {3, 1, false, false}));
  }
  SUBCASE("rank-one matrices have vanishing minors") {
    auto r = VarTable::make({"X", "Y"});
    PolyMatrix flat(2, 4, r);
    for (int j = 0; j < 4; ++j) {
      flat.at(0, j) = P(r, "X^" + std::to_string(j + 1));
      flat.at(1, j) = P(r, "2*X^" + std::to_string(j + 1));
    }
    PluckerMinors m = plucker(flat);
    CHECK(m.p12.is_zero());
    CHECK(m.p34.is_zero());
  }
  SUBCASE("quadric holds for random 2x4 matrices") {
    auto r = VarTable::make({"X", "Y", "Z"});
    Rng rng;
    for (int trial = 0; trial < 10; ++trial) {
      PolyMatrix mat(2, 4, r);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 4; ++j) {
          std::vector<Term> ts;
          for (int t = 0; t < 3; ++t) {
            Monomial mo(r->size());
            for (std::size_t v = 0; v < r->size(); ++v)
              mo.e[v] = static_cast<int>(rng.pick(0, 2));
            ts.push_back({mo, GaussianRational(Rational(rng.pick(-2, 2)))});
          }
          mat.at(i, j) = Polynomial::from_terms(r, std::move(ts));
        }
      CHECK(grassmann_quadric(plucker(mat)).is_zero());
    }
  }
  SUBCASE("plain relations, both parities and both row pairs") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}, {5, 2}, {4, 3}}) {
      DRelations rel = build_D_relations(n, m, false);
      const auto& r = rel.eqn.table();
      for (int base : {0, 2}) {
        PolyMatrix rows(2, 4, r);
        for (int j = 0; j < 4; ++j) {
          rows.at(0, j) = rel.R.at(base, j);
          rows.at(1, j) = rel.R.at(base + 1, j);
        }
        CHECK(verify_plucker_relations(plucker(rows), {n, m, false, base == 2}));
      }
    }
  }
  SUBCASE("deformed relations, both row pairs") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 2}, {3, 1}}) {
      DRelations rel = build_D_relations(n, m, true);
      const auto& r = rel.eqn.table();
      for (int base : {0, 2}) {
        PolyMatrix rows(2, 4, r);
        for (int j = 0; j < 4; ++j) {
          rows.at(0, j) = rel.R.at(base, j);
          rows.at(1, j) = rel.R.at(base + 1, j);
        }
        CHECK(verify_plucker_relations(plucker(rows), {n, m, true, base == 2}));
      }
    }
  }
}

TEST_CASE("distinguished polynomial constructions") {
  SUBCASE("n=1 expands with elementary symmetric coefficients") {
    DistinguishedPolys d = distinguished(1, 1);
    const auto& r = d.ring;
    CHECK(d.g == P(r, "(Z + t1^2)*(Z + t2^2)*(Z + t3^2)"));
    CHECK(d.delta == P(r, "t1*t2*t3"));
  }
  SUBCASE("t -> 0 reduces P'', Q'' to the power table") {
    // m+1 roots feed the double-primed split; the undeformed values follow
    // the residue class of m mod 4.
    struct Row {
      int n, m;
      std::string Ppp, Qpp;
    };
    for (const Row& row : {Row{4, 1, "0", "-Z"}, Row{4, 2, "-Z", "0"},
                           Row{4, 3, "0", "Z^2"}, Row{4, 4, "Z^2", "0"}}) {
      DistinguishedPolys d = distinguished(row.n, row.m);
      Polynomial Ppp0 = subst_zero_t(d.Ppp, row.n + 2);
      Polynomial Qpp0 = subst_zero_t(d.Qpp, row.n + 2);
      CHECK(Ppp0 == P(d.ring, row.Ppp));
      CHECK(Qpp0 == P(d.ring, row.Qpp));
    }
  }
  SUBCASE("identities hold for n <= 4 and specialize at rational points") {
    for (int n = 1; n <= 4; ++n)
      for (int m = 1; m <= n; ++m) CHECK_NOTHROW(distinguished(n, m));
    // Random rational specialization of the G identity.
    DistinguishedPolys d = distinguished(3, 2);
    Rng rng;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Binding> b;
      for (int i = 1; i <= 5; ++i)
        b.push_back({d.ring->require("t" + std::to_string(i)),
                     Polynomial::constant(d.ring, GaussianRational(Rational(rng.pick(-4, 4)))),
                     false});
      Polynomial lhs = substitute(Polynomial::variable(d.ring, "U") * d.P + d.Q, b);
      Polynomial rhs = substitute((Polynomial::variable(d.ring, "Z") +
                                   Polynomial::variable(d.ring, "U").pow(2)) *
                                          d.G +
                                      d.f,
                                  b);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Tyurina factorization") {
  CHECK(tyurina_check(1));
  CHECK(tyurina_check(2));
  CHECK(tyurina_check(3));
  SUBCASE("t -> 0 limit splits the plain equation") {
    DistinguishedPolys d = distinguished(2, 1);
    Polynomial h0 = subst_zero_t(d.h, 4);
    // h|_{t=0} = Z^{n+1}, so the factored equation degenerates to
    // X^2 + Y^2 Z - Z^{n+1}.
    CHECK(h0 == P(d.ring, "Z^3"));
  }
}

TEST_CASE("length-3 matrix factorization") {
  Length3Factorization f = build_length3_factorization();
  const auto& r = f.f.table();
  Polynomial f3 = P(r, "-y^3 + z^5 + 3*t*y*z^2 + t^3*z");
  CHECK(verify_factorization(f.phi, f.psi, f3).ok);
  CHECK(f.f == P(r, "x^2 - y^3 + z^5 + 3*t*y*z^2 + t^3*z"));
  CHECK(verify_factorization(f.A, f.B, f.f).ok);
  SUBCASE("t = 0 slice") {
    std::vector<Binding> b = {{r->require("t"), Polynomial::zero(r), false}};
    PolyMatrix phi0(3, 3, r), psi0(3, 3, r);
    for (int i = 0; i < 9; ++i) {
      phi0.entries[i] = substitute(f.phi.entries[i], b);
      psi0.entries[i] = substitute(f.psi.entries[i], b);
    }
    CHECK(verify_factorization(phi0, psi0, P(r, "-y^3 + z^5")).ok);
  }
}

TEST_CASE("residual chart identities") {
  SUBCASE("A-case splits into the two A-pieces") {
    CHECK(residual_chart_checks(ChartFamily::ACase, 4, 2));
    CHECK(residual_chart_checks(ChartFamily::ACase, 6, 3));
  }
  SUBCASE("plain D charts") {
    CHECK(residual_chart_checks(ChartFamily::DPlain, 3, 1));
    CHECK(residual_chart_checks(ChartFamily::DPlain, 4, 2));
    CHECK(residual_chart_checks(ChartFamily::DPlain, 5, 3));
  }
  SUBCASE("deformed D charts") {
    CHECK(residual_chart_checks(ChartFamily::DDeformed, 2, 1));
    CHECK(residual_chart_checks(ChartFamily::DDeformed, 3, 2));
    CHECK(residual_chart_checks(ChartFamily::DDeformed, 4, 2));
  }
}

TEST_CASE("parallel and serial matrix products agree") {
  Length3Factorization f = build_length3_factorization();
  PolyMatrix p1 = matmul(f.A, f.B);
  PolyMatrix p2 = matmul_serial(f.A, f.B);
  REQUIRE(p1.entries.size() == p2.entries.size());
  for (std::size_t i = 0; i < p1.entries.size(); ++i) CHECK(p1.entries[i] == p2.entries[i]);
}
