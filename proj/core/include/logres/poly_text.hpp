#pragma once

// Text form of integer-coefficient polynomials.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer | variable | '(' expr ')'
//
// Whitespace is ignored between tokens; juxtaposition ("2z0", "z0 z1") is rejected.

#include <string>
#include <string_view>
#include <vector>

#include "logres/polynomial.hpp"

namespace logres::text {

struct VariableNames {
  std::vector<std::string> names;

  // z0, ..., zn
  static VariableNames homogeneous(int n);
  // x, y
  static VariableNames affine_plane();
  std::size_t size() const noexcept { return names.size(); }
};

// Throws ParseError with the offending offset.
poly::Polynomial parse_polynomial(std::string_view text, const VariableNames& vars);

// Canonical text: terms by descending total degree, then descending lex exponents.
// Integer-coefficient output parses back to the same polynomial.
std::string to_text(const poly::Polynomial& p, const VariableNames& vars);

}  // namespace logres::text
