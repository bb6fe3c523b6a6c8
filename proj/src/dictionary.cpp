#include "cycas/dictionary.hpp"

#include <algorithm>

namespace cycas {

VarTablePtr dictionary_ring() {
  static VarTablePtr ring = VarTable::make(
      {"g", "w1", "w2", "x", "y", "x1", "x2", "x3", "x4", "t"},
      {true, false, false, false, false, false, false, false, false, false});
  return ring;
}

std::vector<int> section_vars(const VarTablePtr& ring, int fields) {
  if (fields < 1 || fields > 4) throw RingError("section_vars: supported field counts are 1..4");
  if (fields == 1) return {ring->require("x")};
  if (fields == 2) return {ring->require("x"), ring->require("y")};
  std::vector<int> out;
  for (int i = 1; i <= fields; ++i) out.push_back(ring->require("x" + std::to_string(i)));
  return out;
}

namespace {

Polynomial section_sum(const VarTablePtr& ring, const std::vector<int>& xs) {
  int ig = ring->require("g");
  Polynomial acc(ring);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Monomial m(ring->size());
    m.e[xs[i]] = 1;
    m.e[ig] = static_cast<int>(i);
    acc = acc + Polynomial::monomial(ring, m);
  }
  return acc;
}

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= Rational(n - i) / Rational(i + 1);
  return r;
}

}  // namespace

Polynomial superpotential_from_geometric(const Polynomial& E, int fields) {
  const auto& ring = E.table();
  auto xs = section_vars(ring, fields);
  int ig = ring->require("g");
  int iw1 = ring->require("w1");
  Polynomial sub = substitute(E, {{iw1, section_sum(ring, xs), false}});
  return laurent_coeff(sub, ig, fields);
}

Polynomial geometric_from_perturbation(const Polynomial& pterm) {
  const auto& ring = pterm.table();
  int iw1 = ring->require("w1");
  Polynomial acc(ring);
  for (const auto& t : pterm.terms()) {
    Term nt = t;
    long m = nt.mono.e[iw1];
    nt.mono.e[iw1] = static_cast<int>(m + 1);
    nt.coeff = nt.coeff * GaussianRational(Rational(1) / Rational(m + 1));
    acc = acc + Polynomial::from_terms(ring, {nt});
  }
  return acc;
}

Polynomial perturbation_from_superpotential(const Polynomial& W, int fields) {
  if (fields != 1 && fields != 2)
    throw RingError("perturbation_from_superpotential: only 1- and 2-field potentials");
  const auto& ring = W.table();
  int ix = ring->require("x");
  int iy = ring->require("y");
  int ig = ring->require("g");
  int iw1 = ring->require("w1");
  for (int v : W.support_vars())
    if (v != ix && v != iy) throw RingError("superpotential must use x (and y) only");

  Polynomial acc(ring);
  for (const auto& t : W.terms()) {
    long j = t.mono.e[ix];
    long k = t.mono.e[iy];
    if (fields == 1) {
      if (k != 0) throw RingError("1-field superpotential cannot involve y");
      if (j == 0) throw RingError("constant term has no perturbation");
      // a/(m+1) x^{m+1}  ->  a gamma w1^m
      Monomial m(ring->size());
      m.e[ig] = 1;
      m.e[iw1] = static_cast<int>(j - 1);
      acc = acc + Polynomial::monomial(ring, m, t.coeff * GaussianRational(Rational(j)));
    } else {
      if (j + k == 0) throw RingError("constant term has no perturbation");
      Monomial m(ring->size());
      m.e[ig] = static_cast<int>(2 - k);
      m.e[iw1] = static_cast<int>(j + k - 1);
      GaussianRational c = t.coeff * GaussianRational(Rational(j + k) / binomial(j + k, k));
      acc = acc + Polynomial::monomial(ring, m, c);
    }
  }
  return acc;
}

bool contributes(long n, long m, int fields) {
  if (fields == 1) return n == 1;
  if (fields == 2) return 1 - m <= n && n <= 2;
  throw RingError("contributes: only 1- and 2-field models");
}

Polynomial xy_swap(const Polynomial& pterm) {
  const auto& ring = pterm.table();
  int ig = ring->require("g");
  int iw1 = ring->require("w1");
  std::vector<Term> out;
  for (const auto& t : pterm.terms()) {
    Term nt = t;
    long n = nt.mono.e[ig];
    long m = nt.mono.e[iw1];
    nt.mono.e[ig] = static_cast<int>(3 - n - m);
    out.push_back(std::move(nt));
  }
  return Polynomial::from_terms(ring, std::move(out));
}

BundleChange bundle_change_transform(int fields, int r) {
  if (r < -fields || r > fields) throw RingError("bundle_change_transform: r out of range");
  const auto ring = dictionary_ring();
  BundleChange out;
  out.corank = std::abs(r);
  out.new_bundle = {r - 1, -r - 1};

  // W_r in x1..xM, both sign conventions of r.
  std::vector<int> xs;
  for (int i = 1; i <= fields; ++i) xs.push_back(ring->require("x" + std::to_string(i)));
  Polynomial W(ring);
  long lo = r >= 0 ? 1 : 1 - r;
  long hi = r >= 0 ? fields - r : fields;
  for (long i = lo; i <= hi; ++i) {
    long j = fields - r + 1 - i;
    Monomial m(ring->size());
    m.e[xs[i - 1]] += 1;
    m.e[xs[j - 1]] += 1;
    W = W + Polynomial::monomial(ring, m, GaussianRational(Rational(1, 2)));
  }
  out.potential = W;

  // Transition-function identities for the coordinate change.
  int ig = ring->require("g");
  auto gpow = [&](long e) {
    Monomial m(ring->size());
    m.e[ig] = static_cast<int>(e);
    return Polynomial::monomial(ring, m);
  };
  Polynomial w1 = Polynomial::variable(ring, "w1");
  Polynomial w2 = Polynomial::variable(ring, "w2");
  Polynomial w2p = gpow(fields + 1) * w2 + gpow(r + 1) * w1;      // perturbed v2-like
  Polynomial v1t = w1 + gpow(fields - r) * w2;                    // tilde coordinates
  Polynomial lhs1 = w2p;                                          // v1' = w2'
  Polynomial rhs1 = gpow(r + 1) * v1t;
  Polynomial lhs2 = -(gpow(1 - fields) * w1) + gpow(-fields - r) * w2p;  // v2' = -w1' + b^{M+r} w2'
  Polynomial rhs2 = gpow(1 - r) * w2;
  out.transitions_verified = (lhs1 == rhs1) && (lhs2 == rhs2);

  // The residue of E = 1/2 gamma^{r+1} w1^2 reproduces W_r.
  Polynomial E = gpow(r + 1) * w1 * w1;
  E = E.scaled(GaussianRational(Rational(1, 2)));
  auto secs = section_vars(ring, fields);
  Polynomial sum = section_sum(ring, secs);
  Polynomial res = laurent_coeff(substitute(E, {{ring->require("w1"), sum, false}}), ig, fields);
  // Rename x/y to x1/x2 for the comparison when M <= 2.
  Polynomial expect = W;
  if (fields <= 2) {
    std::vector<Binding> b;
    b.push_back({ring->require("x1"), Polynomial::variable(ring, "x"), false});
    if (fields == 2) b.push_back({ring->require("x2"), Polynomial::variable(ring, "y"), false});
    expect = substitute(W, b);
  }
  out.residue_verified = (res == expect);
  return out;
}

int hessian_corank(const Polynomial& W, int fields, const std::vector<GaussianRational>& point) {
  const auto& ring = W.table();
  // Superpotentials here are written in x1..xM.
  std::vector<int> xs;
  for (int i = 1; i <= fields; ++i) xs.push_back(ring->require("x" + std::to_string(i)));
  if (point.size() != xs.size()) throw RingError("hessian_corank: point dimension != fields");
  std::vector<GaussianRational> full(ring->size(), GaussianRational(0));
  for (std::size_t i = 0; i < xs.size(); ++i) full[xs[i]] = point[i];
  // Other variables evaluate at 0; W must not involve them anyway.
  std::vector<std::vector<GaussianRational>> H(xs.size(),
                                               std::vector<GaussianRational>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j)
      H[i][j] = W.derivative(xs[i]).derivative(xs[j]).evaluate(full);
  // Exact Gaussian elimination.
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < xs.size() && row < xs.size(); ++col) {
    std::size_t piv = row;
    while (piv < xs.size() && H[piv][col].is_zero()) ++piv;
    if (piv == xs.size()) continue;
    std::swap(H[piv], H[row]);
    GaussianRational inv = H[row][col].inverse();
    for (std::size_t r2 = row + 1; r2 < xs.size(); ++r2) {
      if (H[r2][col].is_zero()) continue;
      GaussianRational f = H[r2][col] * inv;
      for (std::size_t c2 = col; c2 < xs.size(); ++c2) H[r2][c2] -= f * H[row][c2];
    }
    ++row;
    ++rank;
  }
  return fields - rank;
}

std::vector<WeightAssignment> solve_weights(const Polynomial& pterm6) {
  const auto& ring = pterm6.table();
  int ib = ring->require("b");
  int ig = ring->require("g");
  int iw1 = ring->require("w1");

  // Unknowns (d_b, d_v1, d_v2, d_g, d_w1, d_w2).
  std::vector<std::vector<Rational>> rows;
  rows.push_back({1, 0, 0, 1, 0, 0});    // d_b + d_g = 0
  rows.push_back({0, 1, 0, 1, -1, 0});   // d_v1 = d_w1 - d_g
  rows.push_back({0, 0, 1, -3, 0, -1});  // d_v2 = 3 d_g + d_w2
  for (const auto& t : pterm6.terms()) {
    long a = t.mono.e[ig] - t.mono.e[ib];  // gamma exponent after beta-rewrite
    long m = t.mono.e[iw1];
    rows.push_back({0, 0, 1, Rational(-a), Rational(-m), 0});  // d_v2 = a d_g + m d_w1
  }

  // Reduced row echelon form.
  std::size_t nrows = rows.size(), ncols = 6;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && rows[p][c] == 0) ++p;
    if (p == nrows) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (std::size_t c2 = 0; c2 < ncols; ++c2) rows[r][c2] *= inv;
    for (std::size_t r2 = 0; r2 < nrows; ++r2) {
      if (r2 == r || rows[r2][c] == 0) continue;
      Rational f = rows[r2][c];
      for (std::size_t c2 = 0; c2 < ncols; ++c2) rows[r2][c2] -= f * rows[r][c2];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<WeightAssignment> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][free];
    // Scale to a primitive integer vector.
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& q : v) {
      if (q == 0) continue;
      den_lcm = lcm(den_lcm, mpz_class(q.get_den()));
      num_gcd = gcd(num_gcd, mpz_class(q.get_num()));
    }
    if (num_gcd == 0) continue;
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    WeightAssignment w{};
    for (std::size_t i = 0; i < ncols; ++i) {
      Rational q = v[i] * scale;
      w[i] = static_cast<long>(mpz_class(q.get_num()).get_si());
    }
    // Sign normalization: d_beta >= 0; zero-d_beta vectors lexicographically
    // least among the +/- pair.
    bool flip = false;
    if (w[0] < 0) {
      flip = true;
    } else if (w[0] == 0) {
      WeightAssignment neg{};
      for (std::size_t i = 0; i < 6; ++i) neg[i] = -w[i];
      flip = std::lexicographical_compare(neg.begin(), neg.end(), w.begin(), w.end());
    }
    if (flip)
      for (auto& x : w) x = -x;
    basis.push_back(w);
  }
  return basis;
}

PolarConstraints polar_constraints(const Polynomial& pterm6) {
  const auto ring = dictionary_ring();
  Polynomial lp = pterm_to_laurent(pterm6, ring);
  int ig = ring->require("g");
  int iw1 = ring->require("w1");
  Polynomial section = Polynomial::variable(ring, "x") +
                       Polynomial::variable(ring, "g") * Polynomial::variable(ring, "y");
  Polynomial expanded = substitute(lp, {{iw1, section, false}});

  // w2 cancels every gamma^j, j >= 3 term: w2 = -(high part)/gamma^3.
  Polynomial high(ring);
  for (const auto& t : expanded.terms())
    if (t.mono.e[ig] >= 3) high = high + Polynomial::from_terms(ring, {t});
  PolarConstraints out;
  out.w2_choice = -(high * Polynomial::variable(ring, "g", -3));
  out.c2 = laurent_coeff(expanded, ig, 2);
  out.c1 = laurent_coeff(expanded, ig, 1);
  return out;
}

Polynomial pterm_to_laurent(const Polynomial& pterm6, const VarTablePtr& dict) {
  const auto& ring = pterm6.table();
  int ib = ring->require("b");
  int ig = ring->require("g");
  int iw1 = ring->require("w1");
  int og = dict->require("g");
  int ow1 = dict->require("w1");
  Polynomial acc(dict);
  for (const auto& t : pterm6.terms()) {
    Monomial m(dict->size());
    m.e[og] = t.mono.e[ig] - t.mono.e[ib];
    m.e[ow1] = t.mono.e[iw1];
    acc = acc + Polynomial::monomial(dict, m, t.coeff);
  }
  return acc;
}

Polynomial laurent_to_pterm6(const Polynomial& laurent, const VarTablePtr& ring6) {
  const auto& ring = laurent.table();
  int ig = ring->require("g");
  int iw1 = ring->require("w1");
  int ob = ring6->require("b");
  int og = ring6->require("g");
  int ow1 = ring6->require("w1");
  Polynomial acc(ring6);
  for (const auto& t : laurent.terms()) {
    Monomial m(ring6->size());
    long a = t.mono.e[ig];
    if (a >= 0)
      m.e[og] = static_cast<int>(a);
    else
      m.e[ob] = static_cast<int>(-a);
    m.e[ow1] = t.mono.e[iw1];
    acc = acc + Polynomial::monomial(ring6, m, t.coeff);
  }
  return acc;
}

}  // namespace cycas
