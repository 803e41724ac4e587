#pragma once

#include <string>

#include "milnorq/element.hpp"

namespace milnorq {

// Element text grammar:
//   element := term ("+" term)*
//   term    := [coeff "*"] factor ("*" factor)* | coeff
//   factor  := gen ["^" exponent]
//   gen     := ("x"|"y") index
// Coefficients are decimal in 0..p-1; whitespace is insignificant.
// "y" generators are rejected when p = 2; "x" exponents above 1 are rejected
// when p is odd.
Element parse_element(const std::string& text, const Context& ctx);

// Canonical rendering; parse_element(format_element(e), ctx) == e.
std::string format_element(const Element& e);

std::string format_monomial(const Monomial& m, const Context& ctx);

}  // namespace milnorq
