#pragma once

#include <string>
#include <vector>

#include "fo/polynomial.hpp"

namespace fo {

/// Parses the shared polynomial grammar:
///   poly  := ['+'|'-'] term (('+'|'-') term)*
///   term  := coeff ('*' monomial)? | monomial
///   coeff := int | int '/' posint
///   monomial := var('^'exp)? ('*' var('^'exp)?)*
///   var   := 'x'digit+
/// Whitespace-insensitive. Variable indices must lie in 1..nvars.
/// Throws InputError with a byte position on malformed input.
Poly parse_poly(const std::string& text, int nvars);

/// Canonical printer: grlex-descending terms (x1 > x2 > ...), "a/b"
/// coefficients, '*' between factors, exponent suffix only when > 1.
/// parse_poly(poly_to_string(p), p.nvars()) == p.
std::string poly_to_string(const Poly& p);

/// Same with custom variable names, names[i] for variable i (display only;
/// such strings need not re-parse).
std::string poly_to_string(const Poly& p, const std::vector<std::string>& names);

/// Comma-separated exact rationals, e.g. "1,-2/3,0,1".
std::vector<Rational> parse_rational_tuple(const std::string& text);

} // namespace fo
