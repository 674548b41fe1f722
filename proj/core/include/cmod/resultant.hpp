#pragma once

#include <vector>

#include "cmod/binary_form.hpp"
#include "cmod/ternary_form.hpp"
#include "cmod/univariate.hpp"

namespace cmod {

/// Exact determinant (fraction-free Bareiss elimination after clearing denominators).
Rational determinant(std::vector<std::vector<Rational>> m);

/// Sylvester resultant det S(f, g) with the rows of f first. The formal degrees
/// are the sizes of the coefficient vectors minus one, so leading zeros are honoured.
Rational sylvester_resultant(const std::vector<Rational>& f, const std::vector<Rational>& g);

/// res(f, g) = det S(f, g) for the actual degrees of f and g.
Rational resultant(const UnivariatePoly& f, const UnivariatePoly& g);

/// (-1)^(n(n-1)/2) res(f, f') / lc(f); f must be nonconstant.
Rational discriminant(const UnivariatePoly& f);

/// Res_X(G, dG/dX) as a binary form in (Y, Z), using the formal X-degree of G.
/// It vanishes at (y0, z0) exactly when G(X, y0, z0) has a repeated root or drops
/// degree. Equal to the X-discriminant of G times its X-leading coefficient, up to sign.
BinaryForm discriminant_in_X(const TernaryForm& g);

/// Interpolates the polynomial of degree <= nodes.size()-1 through (nodes[i], values[i]).
UnivariatePoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values);

}  // namespace cmod
