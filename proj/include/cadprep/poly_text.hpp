#pragma once

#include <string>
#include <string_view>

#include "cadprep/polynomial.hpp"

namespace cadprep {

/**
 * Parses the polynomial text syntax: integer and rational literals (`3`, `3/4`),
 * variables of the context, `+ - * ^` and parentheses. Exponents must be
 * nonnegative integer literals and implicit multiplication is rejected.
 *
 * `line` and `column` locate the text inside a larger file for error messages.
 */
Polynomial parse_polynomial(const ContextPtr& ctx, std::string_view text, std::size_t line = 1,
                            std::size_t column = 1);

/// Inverse of parse_polynomial: parse_polynomial(ctx, format_polynomial(p)) == p.
std::string format_polynomial(const Polynomial& p);

}  // namespace cadprep
