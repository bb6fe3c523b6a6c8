#include <doctest.h>

#include "cycas/format.hpp"
#include "cycas/groebner.hpp"
#include "cycas/ring.hpp"

using namespace cycas;

namespace {

VarTablePtr laurent_ring() {
  static VarTablePtr r = VarTable::make({"g", "w1", "w2", "x", "y", "t", "b"},
                                        {true, false, false, false, false, false, false});
  return r;
}

Polynomial P(const VarTablePtr& r, const std::string& s) { return parse_poly(r, s); }

// Deterministic small random polynomials for property tests.
struct Rng {
  unsigned long long state = 0x9e3779b97f4a7c15ull;
  unsigned long long next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  long pick(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

Polynomial random_poly(Rng& rng, const VarTablePtr& table, const std::vector<int>& vars,
                       int max_terms = 5, int max_exp = 3) {
  std::vector<Term> terms;
  long n = rng.pick(0, max_terms);
  for (long i = 0; i < n; ++i) {
    Monomial m(table->size());
    for (int v : vars) m.e[v] = static_cast<int>(rng.pick(0, max_exp));
    GaussianRational c(Rational(rng.pick(-3, 3)), Rational(rng.pick(0, 1)));
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(table, std::move(terms));
}

}  // namespace

TEST_CASE("arithmetic on the documented examples") {
  auto r = laurent_ring();
  CHECK(arith(P(r, "x + y"), P(r, "x - y"), ArithKind::Mul) == P(r, "x^2 - y^2"));
  CHECK(arith(P(r, "b*g - 1"), P(r, "1"), ArithKind::Add) == P(r, "b*g"));
  CHECK(arith(P(r, "g*w2 + w1^2"), P(r, "g^2"), ArithKind::Mul) == P(r, "g^3*w2 + g^2*w1^2"));
}

TEST_CASE("arithmetic requires one ring context") {
  auto r = laurent_ring();
  auto other = VarTable::make({"x", "y"});
  CHECK_THROWS_AS(arith(P(r, "x"), P(other, "y"), ArithKind::Add), RingError);
}

TEST_CASE("substitution") {
  auto r = laurent_ring();
  SUBCASE("inverse-power rewrite g^{-1} -> b") {
    Polynomial f = P(r, "g^(-1)*w1");
    CHECK(substitute(f, {{r->require("g"), P(r, "b"), true}}) == P(r, "b*w1"));
    Polynomial mixed = P(r, "g^2*w1 + g^(-2)*w1");
    CHECK(substitute(mixed, {{r->require("g"), P(r, "b"), true}}) ==
          P(r, "g^2*w1 + b^2*w1"));
  }
  SUBCASE("identity substitution") {
    Polynomial f = P(r, "x^2");
    CHECK(substitute(f, {{r->require("x"), P(r, "x"), false}}) == f);
  }
  SUBCASE("simultaneous expansion") {
    Polynomial f = P(r, "g^2*w1^2 + w1");
    CHECK(substitute(f, {{r->require("w1"), P(r, "x + g*y"), false}}) ==
          P(r, "g^2*x^2 + 2*g^3*x*y + g^4*y^2 + x + g*y"));
  }
  SUBCASE("negative exponent on a non-invertible variable is rejected") {
    auto strict = VarTable::make({"x", "y"});
    CHECK_THROWS_AS(Polynomial::variable(strict, "x", -1), RingError);
  }
}

TEST_CASE("laurent coefficient extraction") {
  auto r = laurent_ring();
  int g = r->require("g");
  CHECK(laurent_coeff(P(r, "g*x + g^2*y"), g, 2) == P(r, "y"));
  CHECK(laurent_coeff(P(r, "g*(2/3)*t^3"), g, 1) == P(r, "(2/3)*t^3"));
  CHECK(laurent_coeff(P(r, "(x + g*y)^3*g^(-1)"), g, 1) == P(r, "3*x*y^2"));
  CHECK(laurent_coeff(P(r, "x"), g, 5).is_zero());
  CHECK_THROWS_AS(laurent_coeff(P(r, "w1"), r->require("w1"), 1), RingError);
}

TEST_CASE("grade") {
  auto r = VarTable::make({"b", "v1", "v2", "g", "w1", "w2"});
  std::vector<long> w = {1, 4, 7, -1, 3, 10};
  auto res = grade(P(r, "b*v2 - v1^2"), w);
  REQUIRE(std::holds_alternative<long>(res));
  CHECK(std::get<long>(res) == 8);

  auto zero_deg = grade(P(r, "1"), w);
  REQUIRE(std::holds_alternative<long>(zero_deg));
  CHECK(std::get<long>(zero_deg) == 0);

  std::vector<long> unit(6, 1);
  CHECK(std::holds_alternative<NotHomogeneous>(grade(P(r, "b + b^2"), unit)));
}

TEST_CASE("pure/mixed split") {
  auto r = VarTable::make({"b", "v1", "v2", "g", "w1", "w2"});
  std::set<int> A = {r->require("b"), r->require("v1"), r->require("v2")};
  std::set<int> B = {r->require("g"), r->require("w1"), r->require("w2")};
  SUBCASE("E6 normal-form shape") {
    auto s = split_pure_mixed(P(r, "g^2*w2 + g*w1^3 + b^2*w1^2"), A, B);
    CHECK(s.pure_a.is_zero());
    CHECK(s.pure_b == P(r, "g^2*w2 + g*w1^3"));
    CHECK(s.mixed == P(r, "b^2*w1^2"));
  }
  SUBCASE("pure pieces") {
    auto s = split_pure_mixed(P(r, "b + g"), A, B);
    CHECK(s.pure_a == P(r, "b"));
    CHECK(s.pure_b == P(r, "g"));
    CHECK(s.mixed.is_zero());
  }
  SUBCASE("fully mixed") {
    auto s = split_pure_mixed(P(r, "b*g"), A, B);
    CHECK(s.pure_a.is_zero());
    CHECK(s.pure_b.is_zero());
    CHECK(s.mixed == P(r, "b*g"));
  }
  SUBCASE("constants go to the first block") {
    auto s = split_pure_mixed(P(r, "7"), A, B);
    CHECK(s.pure_a == P(r, "7"));
  }
}

TEST_CASE("ring axioms and exact division on random polynomials") {
  auto r = laurent_ring();
  std::vector<int> vars = {r->require("x"), r->require("y"), r->require("w1")};
  Rng rng;
  TermOrder ord = TermOrder::lex(vars);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_poly(rng, r, vars);
    Polynomial b = random_poly(rng, r, vars);
    Polynomial c = random_poly(rng, r, vars);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      DivisionResult d = divide(a * b, {a}, ord);
      CHECK(d.remainder.is_zero());
      CHECK(d.quotients[0] == b);
    }
  }
}

TEST_CASE("laurent shift invariance") {
  auto r = laurent_ring();
  int g = r->require("g");
  std::vector<int> vars = {g, r->require("w1"), r->require("x")};
  Rng rng;
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial f = random_poly(rng, r, vars);
    long k = rng.pick(-2, 3);
    long j = rng.pick(-3, 3);
    Polynomial shifted = f * Polynomial::variable(r, "g", static_cast<int>(j));
    CHECK(laurent_coeff(shifted, g, k + j) == laurent_coeff(f, g, k));
  }
}

TEST_CASE("split reassembles and grade agrees with brute force") {
  auto r = VarTable::make({"b", "v1", "v2", "g", "w1", "w2"});
  std::set<int> A = {0, 1, 2}, B = {3, 4, 5};
  std::vector<int> vars = {0, 1, 2, 3, 4, 5};
  std::vector<long> w = {1, 4, 7, -1, 3, 10};
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f = random_poly(rng, r, vars, 6, 2);
    auto s = split_pure_mixed(f, A, B);
    CHECK(s.pure_a + s.pure_b + s.mixed == f);
    auto res = grade(f, w);
    if (std::holds_alternative<long>(res) && !f.is_zero()) {
      long d = std::get<long>(res);
      for (const auto& t : f.terms()) {
        long dot = 0;
        for (std::size_t i = 0; i < 6; ++i) dot += w[i] * t.mono.e[i];
        CHECK(dot == d);
      }
    }
  }
}

TEST_CASE("canonical storage gives structural equality") {
  auto r = laurent_ring();
  CHECK(P(r, "x + y + x") == P(r, "y + 2*x"));
  CHECK(P(r, "x - x").is_zero());
}

TEST_CASE("gaussian rational arithmetic stays exact") {
  GaussianRational i = GaussianRational::unit_i();
  CHECK(i * i == GaussianRational(-1));
  GaussianRational z(Rational(3, 4), Rational(-2, 5));
  CHECK(z * z.inverse() == GaussianRational(1));
  CHECK(ipow(7) == -i);
  CHECK(ipow(-1) == -i);
  CHECK(ipow(2) == GaussianRational(-1));
}
