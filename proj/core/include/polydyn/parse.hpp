#pragma once

#include <string>

#include "polydyn/poly.hpp"

namespace polydyn {

// Two input shapes, auto-detected:
//   coefficient list, constant first:  "-2,0,1"
//   expression in one variable:        "x^2 - 2", "1/2*x^3 + x", "(x-1)^2"
// Rationals are "p/q" or "p". Expressions allow + - * ^ ( ) with implicit
// multiplication before 'x' or '('; ParseError carries the byte offset.
RatPoly parse_poly(const std::string& text);

Rat parse_rat(const std::string& text);
Int parse_int(const std::string& text);

}  // namespace polydyn
