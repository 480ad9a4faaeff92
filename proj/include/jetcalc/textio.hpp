#pragma once

#include "jetcalc/polynomial.hpp"

#include <string>
#include <string_view>

namespace jetcalc {

// Canonical text form: terms in the storage order, "p/q" coefficients,
// explicit "*" between factors, "^" for powers. Round-trips through
// parse_polynomial for any polynomial over the same variables.
std::string poly_str(const Polynomial& p);

// Grammar: sum of terms with "+"/"-"; a term multiplies rational literals and
// variable powers with explicit "*"; "^" takes a nonnegative integer. No
// implicit multiplication, no parentheses. Whitespace is insignificant.
// Unknown identifiers and malformed syntax raise ParseError; reported
// positions are offset by (line, col_base) so container formats can point
// into their own text.
Polynomial parse_polynomial(std::string_view text, const VarNames& names, int line = 1,
                            int col_base = 1);

} // namespace jetcalc
