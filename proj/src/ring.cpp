#include "cycas/ring.hpp"

#include <algorithm>
#include <sstream>

namespace cycas {

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string to_string(const GaussianRational& c) {
  if (c.im == 0) return to_string(c.re);
  std::string im;
  Rational a = abs(c.im);
  if (a == 1)
    im = "I";
  else
    im = to_string(a) + "*I";
  if (c.re == 0) return (c.im < 0 ? "-" : "") + im;
  return to_string(c.re) + (c.im < 0 ? "-" : "+") + im;
}

VarTable::VarTable(std::vector<std::string> names, std::vector<bool> invertible)
    : names_(std::move(names)), invertible_(std::move(invertible)) {
  if (invertible_.empty()) invertible_.assign(names_.size(), false);
  if (invertible_.size() != names_.size())
    throw RingError("VarTable: invertible flags do not match names");
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw RingError("VarTable: duplicate name " + names_[i]);
}

std::shared_ptr<const VarTable> VarTable::make(std::vector<std::string> names,
                                               std::vector<bool> invertible) {
  return std::make_shared<const VarTable>(std::move(names), std::move(invertible));
}

int VarTable::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int VarTable::require(const std::string& name) const {
  int i = index(name);
  if (i < 0) throw RingError("unknown variable " + name);
  return i;
}

void require_same_table(const Polynomial& a, const Polynomial& b) {
  if (a.table() == b.table()) return;
  if (a.table() && b.table() && *a.table() == *b.table()) return;
  throw RingError("variable-table mismatch");
}

Polynomial Polynomial::constant(const VarTablePtr& t, GaussianRational c) {
  Polynomial p(t);
  if (!c.is_zero()) p.terms_.push_back({Monomial(t->size()), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(const VarTablePtr& t, const std::string& name, int power) {
  Monomial m(t->size());
  int i = t->require(name);
  m.e[i] = power;
  return monomial(t, m);
}

Polynomial Polynomial::monomial(const VarTablePtr& t, Monomial m, GaussianRational c) {
  Polynomial p(t);
  if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
  p.check_exponents();
  return p;
}

Polynomial Polynomial::from_terms(const VarTablePtr& t, std::vector<Term> terms) {
  Polynomial p(t);
  p.terms_ = std::move(terms);
  p.normalize();
  p.check_exponents();
  return p;
}

void Polynomial::normalize() {
  std::map<Monomial, GaussianRational> acc;
  for (auto& t : terms_) {
    auto it = acc.find(t.mono);
    if (it == acc.end())
      acc.emplace(std::move(t.mono), std::move(t.coeff));
    else
      it->second += t.coeff;
  }
  terms_.clear();
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) terms_.push_back({it->first, it->second});
}

void Polynomial::check_exponents() const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.mono.e.size(); ++i)
      if (t.mono.e[i] < 0 && !table_->invertible(static_cast<int>(i)))
        throw RingError("negative exponent on non-invertible variable " +
                        table_->name(static_cast<int>(i)));
}

long Polynomial::total_degree() const {
  long d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const { return arith(*this, o, ArithKind::Add); }
Polynomial Polynomial::operator-(const Polynomial& o) const { return arith(*this, o, ArithKind::Sub); }
Polynomial Polynomial::operator*(const Polynomial& o) const { return arith(*this, o, ArithKind::Mul); }

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
  Polynomial r(table_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::pow(long e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw RingError("negative power of a non-term polynomial");
    Monomial m = terms_[0].mono;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      m.e[i] *= e;
    }
    Polynomial r = monomial(table_, m, gr_pow(terms_[0].coeff, e));
    return r;
  }
  Polynomial acc = constant(table_, GaussianRational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    if ((e >>= 1)) base = base * base;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

std::set<int> Polynomial::support_vars() const {
  std::set<int> s;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < t.mono.e.size(); ++i)
      if (t.mono.e[i] != 0) s.insert(static_cast<int>(i));
  return s;
}

Polynomial Polynomial::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono.e[var];
    if (e == 0) continue;
    Term nt = t;
    nt.coeff *= GaussianRational(Rational(e));
    nt.mono.e[var] = e - 1;
    out.push_back(std::move(nt));
  }
  return from_terms(table_, std::move(out));
}

GaussianRational Polynomial::evaluate(const std::vector<GaussianRational>& point) const {
  if (point.size() != table_->size()) throw RingError("evaluate: wrong point dimension");
  GaussianRational acc(0);
  for (const auto& t : terms_) {
    GaussianRational v = t.coeff;
    for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (point[i].is_zero() && t.mono.e[i] < 0) throw RingError("evaluate: pole at point");
      v *= gr_pow(point[i], t.mono.e[i]);
    }
    acc += v;
  }
  return acc;
}

Polynomial arith(const Polynomial& a, const Polynomial& b, ArithKind kind) {
  require_same_table(a, b);
  switch (kind) {
    case ArithKind::Add:
    case ArithKind::Sub: {
      std::vector<Term> out;
      out.reserve(a.terms().size() + b.terms().size());
      auto ia = a.terms().begin(), ea = a.terms().end();
      auto ib = b.terms().begin(), eb = b.terms().end();
      bool sub = kind == ArithKind::Sub;
      while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ib->mono < ia->mono)) {
          out.push_back(*ia++);
        } else if (ia == ea || (ia->mono < ib->mono)) {
          out.push_back({ib->mono, sub ? -ib->coeff : ib->coeff});
          ++ib;
        } else {
          GaussianRational c = sub ? ia->coeff - ib->coeff : ia->coeff + ib->coeff;
          if (!c.is_zero()) out.push_back({ia->mono, std::move(c)});
          ++ia;
          ++ib;
        }
      }
      return Polynomial::from_terms(a.table(), std::move(out));
    }
    case ArithKind::Mul: {
      std::map<Monomial, GaussianRational> acc;
      for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
          Monomial m = ta.mono * tb.mono;
          auto it = acc.find(m);
          GaussianRational c = ta.coeff * tb.coeff;
          if (it == acc.end())
            acc.emplace(std::move(m), std::move(c));
          else
            it->second += c;
        }
      std::vector<Term> out;
      for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.is_zero()) out.push_back({it->first, it->second});
      return Polynomial::from_terms(a.table(), std::move(out));
    }
  }
  throw RingError("unreachable");
}

Polynomial substitute(const Polynomial& f, const std::vector<Binding>& bindings) {
  const auto& table = f.table();
  std::vector<const Binding*> byvar(table->size(), nullptr);
  for (const auto& b : bindings) {
    require_same_table(f, b.value);
    byvar[b.var] = &b;
  }
  Polynomial acc(table);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(table, t.coeff);
    Monomial rest(table->size());
    for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
      int e = t.mono.e[i];
      if (e == 0) continue;
      const Binding* b = byvar[i];
      if (b == nullptr) {
        rest.e[i] = e;
        continue;
      }
      if (b->inverse_power) {
        if (e > 0)
          rest.e[i] = e;
        else
          term = term * b->value.pow(-e);
      } else {
        term = term * b->value.pow(e);
      }
    }
    acc = acc + term * Polynomial::monomial(table, rest);
  }
  return acc;
}

Polynomial laurent_coeff(const Polynomial& f, int var, long k) {
  if (!f.table()->invertible(var)) throw RingError("laurent_coeff: variable not invertible");
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.mono.e[var] != k) continue;
    Term nt = t;
    nt.mono.e[var] = 0;
    out.push_back(std::move(nt));
  }
  return Polynomial::from_terms(f.table(), std::move(out));
}

GradeResult grade(const Polynomial& f, const std::vector<long>& weights) {
  if (weights.size() != f.table()->size()) throw RingError("grade: weights size mismatch");
  if (f.is_zero()) return GradeResult(0L);
  auto wdeg = [&](const Monomial& m) {
    long d = 0;
    for (std::size_t i = 0; i < m.e.size(); ++i) d += weights[i] * m.e[i];
    return d;
  };
  long d0 = wdeg(f.terms()[0].mono);
  for (const auto& t : f.terms())
    if (wdeg(t.mono) != d0) return GradeResult(NotHomogeneous{f.terms()[0].mono, t.mono});
  return GradeResult(d0);
}

PureMixedSplit split_pure_mixed(const Polynomial& f, const std::set<int>& block_a,
                                const std::set<int>& block_b) {
  for (int v : f.support_vars())
    if (!block_a.count(v) && !block_b.count(v))
      throw RingError("split_pure_mixed: variable outside both blocks: " + f.table()->name(v));
  std::vector<Term> a, b, m;
  for (const auto& t : f.terms()) {
    bool in_a = false, in_b = false;
    for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (block_a.count(static_cast<int>(i))) in_a = true;
      if (block_b.count(static_cast<int>(i))) in_b = true;
    }
    if (in_a && in_b)
      m.push_back(t);
    else if (in_b)
      b.push_back(t);
    else
      a.push_back(t);  // pure blockA terms and constants
  }
  return {Polynomial::from_terms(f.table(), std::move(a)),
          Polynomial::from_terms(f.table(), std::move(b)),
          Polynomial::from_terms(f.table(), std::move(m))};
}

Polynomial embed(const Polynomial& f, const VarTablePtr& target) {
  std::vector<int> map(f.table()->size(), -1);
  for (std::size_t i = 0; i < f.table()->size(); ++i) {
    int j = target->index(f.table()->name(static_cast<int>(i)));
    map[i] = j;
  }
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (map[i] < 0)
        throw RingError("embed: variable " + f.table()->name(static_cast<int>(i)) +
                        " missing in target");
      m.e[map[i]] = t.mono.e[i];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(out));
}

}  // namespace cycas
