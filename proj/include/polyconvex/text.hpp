#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polyconvex/polynomial.hpp"

namespace polycvx {

/// Syntax or semantic error while reading polynomial text. `position` is the
/// 0-based byte offset where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Reads the polynomial text grammar:
///
///   expr := term (('+'|'-') term)* ;  term := factor ('*' factor)* ;
///   factor := base ('^' uint)? ;      base := rational | var | '(' expr ')' ;
///   var := 'x' uint (1-based) ;       rational := '-'? uint ('/' uint)? .
///
/// Whitespace is ignored. A leading '-' before a variable or parenthesis is
/// also accepted and negates that factor, so every printed form reads back.
Polynomial parse_polynomial(std::string_view text, std::size_t arity);

/// Largest variable index (1-based) mentioned in the text, or 0 when none.
/// Syntax is not validated.
std::size_t infer_arity(std::string_view text);

/// Canonical text: terms in descending graded lex order, e.g.
/// "x1^2 + 2*x1*x2 + x2^2", "-1/2*x1", "0".
std::string to_string(const Polynomial& p);

/// Univariate text in the variable `var`, e.g. "3*t^2 + 1".
std::string to_string(const UniPoly& u, std::string_view var = "t");

}  // namespace polycvx
