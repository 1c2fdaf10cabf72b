#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "singdef/polyring.hpp"

namespace singdef {

// Text of a polynomial together with the ordered variables it may use.
struct ExprSource {
  std::string text;
  std::vector<std::string> declared_vars;
};

// Grammar (whitespace insignificant, no implicit multiplication):
//   expression := term (('+' | '-') term)*
//   term       := factor ('*' factor)*
//   factor     := rational | variable ('^' exponent)? | '(' expression ')' ('^' exponent)?
//               | '-' factor
//   rational   := integer ('/' integer)?
// Exponents are positive integers below 2^31. Throws ParseError carrying
// the offending character offset.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);
Polynomial parse_polynomial(const ExprSource& source);

// Canonical rendering: terms in decreasing GlobalDegRevLex order, explicit
// `*` and `^`, rational coefficients as n/d. Parses back to the same value.
std::string render_polynomial(const Polynomial& p);

// Default variable sets.
RingPtr threefold_ring();  // x, y, z, w
RingPtr curve_ring();      // z, w

}  // namespace singdef
