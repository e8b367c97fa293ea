#pragma once

#include <string>

#include "newton/laurent.hpp"

namespace newton {

// Parses an expression over the variables x and y with integer or rational
// coefficients, operators + - * ^ and parentheses.  Exponents are integers;
// negative exponents apply to monomial bases only and require a ring that
// permits them.  Throws parse_error with the byte offset on bad input.
LaurentPoly parse_polynomial(const std::string& text, Ring ring = Ring::poly);

// Canonical printing (sorted terms); parse(print(f)) == f.
std::string print_polynomial(const LaurentPoly& f);

}  // namespace newton
