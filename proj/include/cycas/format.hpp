#pragma once

#include <string>

#include "cycas/ring.hpp"

namespace cycas {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Canonical ASCII form: terms joined by " + ", each "(coeff)*v^e*..." with
// explicit * and ^; the constant term prints as "(coeff)", zero as "(0)",
// i renders as I. Exactly re-parseable by parse_poly.
std::string poly_to_string(const Polynomial& p);

// Expression parser over Q(i): +, -, *, /, ^, parentheses, integers, I and the
// table's variable names. Division only by nonzero constants; negative
// exponents only on invertible single-term bases.
Polynomial parse_poly(const VarTablePtr& table, const std::string& text);

}  // namespace cycas
