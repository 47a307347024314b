#ifndef KNOTSURG_CLI_PARSE_POLY_HPP
#define KNOTSURG_CLI_PARSE_POLY_HPP

#include <string_view>

#include "knotsurg/laurent.hpp"

namespace knotsurg::cli {

/// Reads a Laurent polynomial in the variable t.
///
/// Terms are `[+|-] [coeff] ['*'] ['t' ['^' exp]]` where exp is an optionally
/// signed integer, optionally parenthesized: `t^2-3t+1`, `3 - t - t^-1`,
/// `t^(-1)`. Whitespace is ignored. Repeated exponents are summed.
/// Throws ParseError carrying the 0-based offending position.
LaurentPoly parse_poly(std::string_view s);

} // namespace knotsurg::cli

#endif
