#pragma once

#include <string>

#include "pbcert/poly.hpp"

namespace pbcert {

// Shared text grammar for polynomials:
//   poly := '-'? term (('+'|'-') term)*
//   term := coef? mono*        (at least one of the two)
//   mono := ('x'|'y') ('^' nat)?
//   coef := nat ('/' posnat)?
// Whitespace is insignificant and juxtaposition means product.

/// Parse the grammar above; throws ParseError with 1-based line:column.
Poly2 parse_polynomial(const std::string& text);

/// Canonical form: terms in descending graded-lex order, so output is
/// byte-stable and reparses to the same polynomial.
std::string poly_to_string(const Poly2& p);

}  // namespace pbcert
