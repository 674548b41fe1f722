#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmod/singular.hpp"
#include "cmod/weierstrass.hpp"

namespace cmod {

enum class CaseId {
  D3ConcurrentLines,
  D3ConicLine,
  D3Cuspidal,
  D3SmoothJ0,
  D4ConcurrentLines,
  D4TwoConics,
  D4CubicLine,
  D4CyclicCover,
  D4Tacnode,
  D4TriplePoint,
  Unclassified,
};

const char* to_string(CaseId c);
/// Wording of each case in the geometric classification.
const char* description(CaseId c);

struct ClassificationEvidence {
  bool has_x_factor = false;
  int k = 0;
  std::vector<int> h_pattern;  // multiplicities of the distinct roots of H
  int alphas = 0;              // distinct roots of the companion polynomial
  CaseId table_case = CaseId::Unclassified;
  std::vector<SingularPoint> singular;
  std::vector<TernaryForm> lines;  // rational line components
  std::optional<TernaryForm> residual;
  std::vector<SingularPoint> residual_singular;
  std::vector<int> flex_contacts;  // tangent contact at the simple roots of H on X = 0
  std::vector<std::string> predicates;  // the predicates that hold
  std::vector<std::string> notes;
};

struct ClassificationResult {
  CaseId id = CaseId::Unclassified;
  std::string description;
  ClassificationEvidence evidence;
};

/// Lookup from normal-form data (X factor, k, root pattern of H) to the case.
CaseId table_case(const ConstantVerdict& v, int d);

/// Rational lines dividing g.
std::vector<TernaryForm> rational_line_factors(const TernaryForm& g);

/// Both need d = deg, m = 0, no stripped components and a constant verdict.
ClassificationResult classify_d3(const ModuliVerdict& v, const WeierstrassData& w);
ClassificationResult classify_d4(const ModuliVerdict& v, const WeierstrassData& w);
/// Dispatches on d; throws UnsupportedDegree for d outside {3, 4}.
ClassificationResult classify(const ModuliVerdict& v, const WeierstrassData& w);

}  // namespace cmod
