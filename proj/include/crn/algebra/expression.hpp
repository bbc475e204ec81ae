#pragma once

#include <string_view>

#include "crn/algebra/xpoly.hpp"

namespace crn {

/// Parses canonical or hand-written polynomial text over `ring`:
/// integers, ring symbols, `+ - * / ^` and parentheses. Division is allowed
/// only by expressions free of concentration variables.
/// Throws ParseError (column within the text, line 1) on malformed input.
XPoly parse_xpoly(std::string_view text, const RingPtr& ring);

/// Parses a parameter-only expression.
ParamScalar parse_param_scalar(std::string_view text, const RingPtr& ring);

}  // namespace crn
