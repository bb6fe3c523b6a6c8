#include "cycas/format.hpp"

#include <cctype>
#include <sstream>

namespace cycas {

std::string poly_to_string(const Polynomial& p) {
  if (p.is_zero()) return "(0)";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(t.coeff) << ")";
    for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
      if (t.mono.e[i] == 0) continue;
      os << "*" << p.table()->name(static_cast<int>(i));
      if (t.mono.e[i] != 1) os << "^" << t.mono.e[i];
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip();
    return pos >= s.size();
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string number() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
};

class Parser {
 public:
  Parser(const VarTablePtr& table, const std::string& text) : table_(table), lex_{text} {}

  Polynomial run() {
    Polynomial p = expr();
    if (!lex_.eof()) throw ParseError("trailing input at position " + std::to_string(lex_.pos));
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (lex_.accept('+'))
        acc = acc + term();
      else if (lex_.accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (lex_.accept('*')) {
        acc = acc * factor();
      } else if (lex_.accept('/')) {
        Polynomial d = factor();
        if (d.term_count() != 1 || !d.terms()[0].mono.is_one())
          throw ParseError("division only by nonzero constants");
        acc = acc.scaled(d.terms()[0].coeff.inverse());
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    int sign = 1;
    while (true) {
      if (lex_.accept('-'))
        sign = -sign;
      else if (lex_.accept('+'))
        ;
      else
        break;
    }
    Polynomial base = atom();
    if (lex_.accept('^')) {
      long e = exponent();
      base = base.pow(e);
    }
    return sign < 0 ? -base : base;
  }

  long exponent() {
    bool neg = false;
    bool paren = lex_.accept('(');
    if (lex_.accept('-')) neg = true;
    std::string digits = lex_.number();
    if (digits.empty()) throw ParseError("expected exponent");
    if (paren && !lex_.accept(')')) throw ParseError("expected ')' after exponent");
    long e = std::stol(digits);
    return neg ? -e : e;
  }

  Polynomial atom() {
    char c = lex_.peek();
    if (c == '(') {
      lex_.accept('(');
      Polynomial p = expr();
      if (!lex_.accept(')')) throw ParseError("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits = lex_.number();
      return Polynomial::constant(table_, GaussianRational(Rational(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = lex_.ident();
      if (name.empty()) throw ParseError("expected identifier");
      if (name == "I") return Polynomial::constant(table_, GaussianRational::unit_i());
      int idx = table_->index(name);
      if (idx < 0) throw ParseError("unknown variable " + name);
      return Polynomial::variable(table_, name);
    }
    throw ParseError(std::string("unexpected character '") + c + "'");
  }

  VarTablePtr table_;
  Lexer lex_;
};

}  // namespace

Polynomial parse_poly(const VarTablePtr& table, const std::string& text) {
  return Parser(table, text).run();
}

}  // namespace cycas
