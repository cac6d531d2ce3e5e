#pragma once

#include <string>

#include "fibra/poly.hpp"

namespace fibra {

// Parses an affine polynomial expression in x, y and the field generator t.
// Grammar: variables x, y; generator t; integer and p/q rational literals;
// operators + - * ^ with implicit multiplication by juxtaposition;
// parentheses; an optional single '=' splits LHS/RHS (result is LHS - RHS).
// Whitespace-insensitive. Throws Error(ParseError).
BiPoly parse_affine_expr(const std::string& text, const FieldPtr& K);

}  // namespace fibra
