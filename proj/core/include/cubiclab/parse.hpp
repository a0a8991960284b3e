#pragma once

#include <string_view>
#include <vector>

#include "cubiclab/polynomial.hpp"

namespace cubiclab {

/// Parses a polynomial such as "x_2*x_4-x_1*x_5" or "-3/4*x_0^2+x_1".
///
/// Terms are joined by '+' or '-'; a term is a product ('*') of integer or
/// integer-fraction coefficients and variables, each variable optionally
/// raised to a power with '^'. Whitespace is ignored. Variable names are
/// looked up in `ring`.
///
/// Throws ParseError (with byte offset) on syntax errors and unknown
/// variables, PreconditionError on a coefficient whose denominator vanishes.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Parses a list of polynomials separated by commas or newlines. Text from
/// '#' to the end of a line is a comment; blank entries are skipped.
/// Reported positions are offsets into the whole text.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

}  // namespace cubiclab
