#pragma once

// Textual form of exact polynomials: a sum of `coef*x1^a1*...*xd^ad` terms in
// graded-lex order, e.g. `1 - x1^2 - x2^2` or `3/4*x1^2*x2 - 1/2`.

#include <iosfwd>
#include <string>
#include <string_view>

#include "ballpoly/polynomial.hpp"

namespace ballpoly {

std::string format(const MPoly& p);
std::string format(const MPolyD& p);

/// Parses the textual form back. Accepts optional spaces, omitted unit
/// coefficients and exponents, repeated factors and `*` between a coefficient
/// and variables. Variables beyond `dim` are rejected.
MPoly parse_polynomial(std::string_view text, int dim);

std::ostream& operator<<(std::ostream& os, const MPoly& p);

}  // namespace ballpoly
