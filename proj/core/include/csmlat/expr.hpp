#pragma once

// Surface syntax for constructible functions:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := coeff? atom
//   coeff  := integer | integer '/' positive-integer
//   atom   := 'orb' set | 'sub' set | 'P' integer
//           | 'U(' n ',' k ')' | 'L(' n ',' k ')' | '(' expr ')'
//   set    := '{' integer (',' integer)* '}'
//
// Whitespace-insensitive. The ambient dimension comes from the caller or is
// inferred from the P/L/U atoms in the text.

#include <optional>
#include <stdexcept>
#include <string>

#include "csmlat/constructible.hpp"

namespace csmlat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column,
             std::string token);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& token() const { return token_; }

 private:
  int line_;
  int column_;
  std::string token_;
};

// Parses `text` into an exact function. When `ambient` is empty the
// dimension is inferred from the P n / L(n,k) / U(n,k) atoms; all indices
// are validated against the resulting ambient.
ConstructibleFunction parse_expression(const std::string& text,
                                       std::optional<int> ambient);

// Canonical serialization: nonzero orbit terms in canonical stratum order,
// reduced fractions, unit coefficients omitted. Round-trips through
// parse_expression.
std::string serialize(const ConstructibleFunction& f);

}  // namespace csmlat
