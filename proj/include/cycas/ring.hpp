#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cycas/numbers.hpp"

namespace cycas {

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered variable list for a ring context. Only variables flagged invertible
// may carry negative exponents.
class VarTable {
 public:
  VarTable(std::vector<std::string> names, std::vector<bool> invertible);

  static std::shared_ptr<const VarTable> make(std::vector<std::string> names,
                                              std::vector<bool> invertible = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(int i) const { return names_[i]; }
  bool invertible(int i) const { return invertible_[i]; }
  int index(const std::string& name) const;  // -1 if absent
  int require(const std::string& name) const;

  bool operator==(const VarTable& o) const {
    return names_ == o.names_ && invertible_ == o.invertible_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<bool> invertible_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

// Exponent vector aligned with a VarTable.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::size_t n) : e(n, 0) {}

  long total_degree() const {
    long d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (int x : e)
      if (x != 0) return false;
    return true;
  }
  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }
  Monomial operator/(const Monomial& m) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.e.size(); ++i)
      if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
    return r;
  }
  bool coprime(const Monomial& b) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && b.e[i] != 0) return false;
    return true;
  }
  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }
  // Fixed internal order (plain lex on the table's variable sequence); used
  // for canonical term storage, not as the algebraic term order.
  bool operator<(const Monomial& m) const { return e < m.e; }
};

struct Term {
  Monomial mono;
  GaussianRational coeff;
};

struct NotHomogeneous {
  Monomial a;
  Monomial b;
};
using GradeResult = std::variant<long, NotHomogeneous>;

// Sparse multivariate polynomial over Q(i). Terms are kept sorted descending
// under the internal monomial order with no zero coefficients, so structural
// equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}

  static Polynomial zero(const VarTablePtr& t) { return Polynomial(t); }
  static Polynomial constant(const VarTablePtr& t, GaussianRational c);
  static Polynomial variable(const VarTablePtr& t, const std::string& name, int power = 1);
  static Polynomial from_terms(const VarTablePtr& t, std::vector<Term> terms);
  static Polynomial monomial(const VarTablePtr& t, Monomial m,
                             GaussianRational c = GaussianRational(1));

  const VarTablePtr& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  long total_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const GaussianRational& c) const;
  Polynomial pow(long e) const;  // negative e only for single invertible terms

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Variables actually appearing in the support.
  std::set<int> support_vars() const;

  // Partial derivative with respect to one variable.
  Polynomial derivative(int var) const;

  // Substitute a rational point for every variable; fails on negative
  // exponents at zero coordinates.
  GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

 private:
  void normalize();
  void check_exponents() const;

  VarTablePtr table_;
  std::vector<Term> terms_;
};

void require_same_table(const Polynomial& a, const Polynomial& b);

enum class ArithKind { Add, Sub, Mul };
Polynomial arith(const Polynomial& a, const Polynomial& b, ArithKind kind);

struct Binding {
  int var;
  Polynomial value;
  // When set, `value` replaces var^{-1}: negative powers of var become
  // positive powers of `value`, positive powers are left alone.
  bool inverse_power = false;
};

Polynomial substitute(const Polynomial& f, const std::vector<Binding>& bindings);

// Coefficient of var^k as a polynomial with var absent. var must be invertible
// (f may hold Laurent terms in it); absent powers give zero.
Polynomial laurent_coeff(const Polynomial& f, int var, long k);

// Common weighted degree of f, or the first offending pair of terms.
GradeResult grade(const Polynomial& f, const std::vector<long>& weights);

struct PureMixedSplit {
  Polynomial pure_a;  // supported on blockA only; constants land here
  Polynomial pure_b;  // supported on blockB only, no constant term
  Polynomial mixed;   // touches both blocks
};
PureMixedSplit split_pure_mixed(const Polynomial& f, const std::set<int>& block_a,
                                const std::set<int>& block_b);

// Maps f into `target` by variable name. Every support variable of f must
// exist in target with the same invertibility.
Polynomial embed(const Polynomial& f, const VarTablePtr& target);

}  // namespace cycas
