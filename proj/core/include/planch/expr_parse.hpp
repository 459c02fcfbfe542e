#pragma once

#include <string_view>

#include "planch/qratio.hpp"

namespace planch {

// Parses the textual scalar grammar used across inputs and reports:
//
//   expr   := term (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' exponent)?
//   atom   := 'q' | integer | '(' expr ')'
//
// Exponents are integers, or parenthesized half-integers like (-3/2) which
// are only meaningful on powers of q. Throws ParseError on malformed input.
QRatio parse_scalar(std::string_view text);

}  // namespace planch
