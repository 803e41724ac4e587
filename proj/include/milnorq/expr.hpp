#pragma once

#include <string>

#include "milnorq/element.hpp"

namespace milnorq {

// Operation expression grammar:
//   expr      := composite "(" element ")" | element
//   composite := op ("*" op)*
//   op        := ("Q"|"Sq"|"P") index | "b"
// Operations compose right to left: "Q1*Q0(x1*x2)" applies Q_0 first.
Element eval_expression(const std::string& text, const Context& ctx);

}  // namespace milnorq
