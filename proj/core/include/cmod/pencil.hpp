#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmod/algebraic.hpp"
#include "cmod/binary_form.hpp"
#include "cmod/roots.hpp"
#include "cmod/ternary_form.hpp"

namespace cmod {

/// A line of the pencil through [1:0:0]: Y = y0 Z, or Z = 0 when infinite.
struct PencilLine {
  bool infinite = false;
  Rational y0;

  static PencilLine at(const Rational& y) { return {false, y}; }
  static PencilLine infinity() { return {true, 0}; }
  std::string to_string() const;
};

struct PencilSetup {
  TernaryForm input;
  Point3 basepoint;
  /// Coordinates after the move: v = to_standard * old, and old = from_standard * v.
  Matrix3 to_standard;
  Matrix3 from_standard;
  /// The moved curve with its K[Y,Z] content (lines through p) removed.
  TernaryForm curve;
  /// Squarefree factors of the removed content with multiplicities.
  std::vector<std::pair<BinaryForm, int>> stripped;
  int d = 0;
  int m = 0;
  XPoly affine;  // curve(x, y, 1)
  bool reduced = true;
};

/// Res_X(G, G_X) of the moved curve; zero exactly when it is not reduced.
BinaryForm pencil_discriminant(const PencilSetup& s);

/// True when the line meets C - p in d distinct points.
bool is_generic_line(const PencilSetup& s, const Rational& y0);

/// Moves p to [1:0:0] (largest coordinate first, then a shear) and strips lines
/// through p. Throws UnsupportedDegree when d <= 2 and ZeroPolynomial for G = 0.
PencilSetup setup(const TernaryForm& curve, const Point3& p);

/// G(x, y0, 1), or G(x, 1, 0) on the line at infinity.
UnivariatePoly restrict_to(const PencilSetup& s, const PencilLine& line);

/// x-coordinates of (C - p) on the line. Throws LineContained when the curve
/// contains the line.
RootSet intersect(const PencilSetup& s, const PencilLine& line, double tol = kDefaultTol);

struct SpecialLine {
  PencilLine line;              // exact when rational or infinite
  bool rational = true;
  std::complex<double> approx;  // y0 (unused when infinite)
  UnivariatePoly minimal;       // squarefree factor of the discriminant carrying y0
  int degree = 0;               // x-degree of the restricted polynomial
  int count = 0;                // distinct points of (C - p) on the line
};

/// Lines whose intersection with C - p has fewer than d distinct points, with exact
/// counts. Throws NonReduced when the discriminant vanishes identically.
std::vector<SpecialLine> special_lines(const PencilSetup& s, double tol = kDefaultTol);

/// The point of C - p on each count-1 line, in the moved coordinates.
std::vector<CPoint3> special_points(const PencilSetup& s, const std::vector<SpecialLine>& lines,
                                    double tol = kDefaultTol);

/// Distinct small-height rationals a/b (|a| <= 50, 1 <= b <= 50) avoiding the
/// discriminant, sorted. Throws InsufficientSamples when not enough are found.
std::vector<Rational> sample_lines(const PencilSetup& s, int count, std::uint64_t seed);

struct TangentReport {
  PencilLine line;
  RootSet points;
  std::vector<CPoint3> tangent_lines;  // unit-normalized coefficient triples
  std::optional<CPoint3> t_point;      // normalized so the largest coordinate is one
  double max_deviation = 0;
  bool concurrent = false;
};

/// Throws DegenerateLine when the line does not meet C - p in d distinct points and
/// SingularPoint when one of them is singular.
TangentReport tangent_point(const PencilSetup& s, const PencilLine& line, double tol = kDefaultTol);

enum class LocusKind { Point, LineX0, Line, Scattered };
const char* to_string(LocusKind k);

struct LocusReport {
  LocusKind kind = LocusKind::Scattered;
  std::vector<TangentReport> samples;
  std::optional<CPoint3> point;  // Point kind
  std::optional<CPoint3> line;   // Line and LineX0 kinds
  double max_t_x = 0;            // max |X| over sampled T-points
  double fit_residual = 0;       // worst distance of a T-point from the fitted locus
  std::vector<CPoint3> special;  // special points
  double special_residual = 0;   // worst distance of a special point from the locus
  bool special_on_locus = true;
  int skipped = 0;               // sample lines rejected by tangent_point
};

/// T-points of `samples` random lines classified as a point, the line X = 0, another
/// line, or scattered. Throws InsufficientSamples if fewer than 3 lines are usable.
LocusReport t_locus(const PencilSetup& s, int samples, std::uint64_t seed, double tol = kDefaultTol);

}  // namespace cmod
