#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cmod/ternary_form.hpp"
#include "cmod/univariate.hpp"

namespace cmod {

/// Parses the polynomial grammar: variables X, Y, Z (either case), integer and
/// a/b coefficients, + - * ^ and parentheses. Multiplication must be explicit.
/// Errors are ParseError with a 1-based column.
SparsePoly parse_polynomial(std::string_view text);

/// parse_polynomial followed by the homogeneity check.
TernaryForm parse_form(std::string_view text);

/// "a,b,c" with rational entries, not all zero.
Point3 parse_point(std::string_view text);

/// Parsed "z^2 = P(x, y)": coefficients c_k(y) of x^k for k = 0..deg_x P.
struct FamilyEquation {
  std::vector<UnivariatePoly> coeffs;
};
FamilyEquation parse_family_equation(std::string_view text);

}  // namespace cmod
