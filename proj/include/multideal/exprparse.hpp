#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "multideal/polynomial.hpp"
#include "multideal/rational.hpp"

namespace multideal {

// Syntax tree of a polynomial expression over declared variables.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := var | rational | '(' expr ')'
//   rational := uint ('/' uint)?
//
// A leading sign on an expression is accepted so that canonical renderings
// like "-x^2 + y" read back. Juxtaposition is not multiplication.
struct PolyExpr {
  enum class Kind { Variable, Literal, Sum, Product, Power, Negate };

  Kind kind = Kind::Literal;
  std::size_t variable = 0;     // Variable
  Rational literal;             // Literal
  unsigned long exponent = 0;   // Power
  std::vector<PolyExpr> args;   // Sum, Product: operands; Power, Negate: one operand

  static PolyExpr var(std::size_t index);
  static PolyExpr lit(Rational value);
  static PolyExpr sum(std::vector<PolyExpr> terms);
  static PolyExpr product(std::vector<PolyExpr> factors);
  static PolyExpr power(PolyExpr base, unsigned long k);
  static PolyExpr negate(PolyExpr operand);

  friend bool operator==(const PolyExpr&, const PolyExpr&) = default;
};

// Throws ParseError with code "parse_error", "unknown_variable" or "bad_exponent".
PolyExpr parse_expr(std::string_view text, const std::vector<std::string>& variables);

// Identifiers in order of first appearance.
std::vector<std::string> infer_variables(std::string_view text);

Polynomial expand(const PolyExpr& e, const std::vector<std::string>& variables);

// Parses and expands in one step.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

// Fully parenthesised text that parses back to an equal tree.
std::string unparse(const PolyExpr& e, const std::vector<std::string>& variables);

}  // namespace multideal
