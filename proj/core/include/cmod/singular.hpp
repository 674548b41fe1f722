#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmod/roots.hpp"
#include "cmod/ternary_form.hpp"

namespace cmod {

enum class SingularType { Node, CuspA2, TacnodeA3, OrdinaryTriple, Y3X4, Other };

const char* to_string(SingularType t);

struct SingularPoint {
  std::optional<Point3> exact;  // set for rational points
  CPoint3 approx;               // normalized, always set
  int multiplicity = 0;
  /// Tangent cone as a form in X, Y, Z (rational points only).
  std::optional<TernaryForm> cone;
  /// Multiplicities of the distinct cone lines, descending.
  std::vector<int> cone_pattern;
  SingularType type = SingularType::Other;
};

/// Singular points of a reduced form, rational ones exact, the rest numeric.
/// Sorted: exact points first, then by the approximate coordinates.
/// Throws NonReduced when G has a repeated component.
std::vector<SingularPoint> singular_points(const TernaryForm& g, double tol = kDefaultTol);

/// Local analysis at a point of the curve (rational or numeric). Multiplicity 1
/// means a smooth point; the type is then meaningless.
SingularPoint analyze_point(const TernaryForm& g, const Point3& p);
SingularPoint analyze_point(const TernaryForm& g, const CPoint3& p, double tol = kDefaultTol);

/// Intersection multiplicity at p of the curve with its tangent line at the smooth point p.
int tangent_contact(const TernaryForm& g, const CPoint3& p, double tol = kDefaultTol);

}  // namespace cmod
