// Acceptance run: one PASS/FAIL line per criterion. Thresholds are fixed here and
// never adjusted to the observed numbers.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cmod/classify.hpp"
#include "cmod/fibration.hpp"
#include "cmod/moduli.hpp"
#include "cmod/parser.hpp"
#include "cmod/pencil.hpp"
#include "cmod/singular.hpp"
#include "cmod/weierstrass.hpp"
#include "corpus.hpp"

using namespace cmod;
using cd = std::complex<double>;

namespace {

constexpr double kTol = 1e-8;
constexpr int kOracleSamples = 12;
constexpr int kCorpusSize = 250;
constexpr std::uint64_t kSeed = 20240917;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// Random invertible frame with small integer entries; the curve is pulled back so
// that the base point moves away from [1:0:0].
struct Framed {
  TernaryForm curve;
  Point3 point;
};

Framed random_frame(testkit::Gen& g, const TernaryForm& curve) {
  for (;;) {
    Matrix3 m;
    for (auto& row : m)
      for (auto& e : row) e = Rational(g.integer(-2, 2));
    if (det(m) == 0) continue;
    Matrix3 inv = inverse(m);
    Point3 p{inv[0][0], inv[1][0], inv[2][0]};
    return {curve.substitute(m), p};
  }
}

const std::vector<testkit::CorpusCurve>& corpus_positives() {
  static const auto c = testkit::positives(kSeed, kCorpusSize);
  return c;
}
const std::vector<testkit::CorpusCurve>& corpus_negatives() {
  static const auto c = testkit::negatives(kSeed + 1, kCorpusSize);
  return c;
}

Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<std::pair<const char*, CaseId>> cases = {{"X^3+Y^3", CaseId::D3ConcurrentLines},
                                                             {"X*(X^2+Y*Z)", CaseId::D3ConicLine},
                                                             {"X^3+Y^2*Z", CaseId::D3Cuspidal},
                                                             {"X^3+Y^3+Z^3", CaseId::D3SmoothJ0}};
  Outcome o;
  for (const auto& [text, expected] : cases) {
    WeierstrassData w = reduce(setup(parse_form(text), {1, 0, 0}));
    ModuliVerdict v = decide(w);
    if (!v.constant) {
      o.pass = false;
      o.detail += std::string(text) + " not constant; ";
      continue;
    }
    CaseId got = classify(v, w).id;
    if (got != expected) {
      o.pass = false;
      o.detail += std::string(text) + " -> " + to_string(got) + "; ";
    }
  }
  double t = seconds_since(t0);
  if (t >= 1.0) o.pass = false;
  o.detail += "4 curves, " + fmt(t) + " s (limit 1 s)";
  return o;
}

// Runs decide and the oracle on the corpus, either as generated (form (*) with the
// base point at [1:0:0]) or pulled back through random integer frames.
struct AgreementCount {
  int n = 0, disagree = 0, mislabeled = 0, errors = 0;
  std::string first;
};

AgreementCount agreement(bool framed) {
  testkit::Gen g(kSeed + 2);
  AgreementCount a;
  auto check = [&](const testkit::CorpusCurve& c) {
    ++a.n;
    Framed f = framed ? random_frame(g, c.curve) : Framed{c.curve, {1, 0, 0}};
    try {
      PencilSetup s = setup(f.curve, f.point);
      bool sym = decide(reduce(s)).constant;
      OracleVerdict o = constant_moduli_oracle(s, kOracleSamples, kSeed + static_cast<std::uint64_t>(a.n), kTol);
      if (sym != o.constant) {
        ++a.disagree;
        if (a.first.empty()) a.first = c.label + " (oracle deviation " + fmt(o.worst_deviation) + ")";
      }
      if (sym != c.positive) ++a.mislabeled;
    } catch (const Error& e) {
      ++a.errors;
      if (a.first.empty()) a.first = c.label + " (" + e.what() + ")";
    }
  };
  for (const auto& c : corpus_positives()) check(c);
  for (const auto& c : corpus_negatives()) check(c);
  return a;
}

Outcome criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  AgreementCount a = agreement(false);
  double t = seconds_since(t0);
  // Stress variant, reported but not part of the criterion as stated.
  AgreementCount b = agreement(true);
  Outcome o;
  o.pass = a.disagree == 0 && a.errors == 0 && a.mislabeled == 0 && t < 120;
  o.detail = std::to_string(a.n) + " curves: " + std::to_string(a.disagree) + " oracle disagreements, " +
             std::to_string(a.mislabeled) + " verdicts off the generator label, " + std::to_string(a.errors) +
             " errors, " + fmt(t) + " s (limit 120 s)";
  if (!a.first.empty()) o.detail += "; first: " + a.first;
  o.detail += " | random frames (informational): " + std::to_string(b.disagree) + " disagreements, " +
              std::to_string(b.errors) + " errors";
  if (!b.first.empty()) o.detail += "; first: " + b.first;
  return o;
}

Outcome criterion3() {
  testkit::Gen g(kSeed + 3);
  int ok = 0, n = 0;
  std::string first;
  while (n < 100) {
    int d = static_cast<int>(g.integer(3, 8));
    bool xf = g.coin() && d >= 4;
    int de = xf ? d - 1 : d;
    std::vector<int> ks;
    for (int k : testkit::divisors(de))
      if (k <= 6 && !(k == 1 && de < 3)) ks.push_back(k);
    int k = ks[static_cast<std::size_t>(g.integer(0, static_cast<long>(ks.size()) - 1))];
    ConstantVerdict truth = testkit::random_constant(g, d, xf, k);
    TernaryForm gform = expand_normal_form(truth, d, 0);
    // Odd cases also get an X-shear, which the reduction has to undo.
    if (n % 2 == 1) {
      Matrix3 shear{{{1, g.rational(3, 2), g.rational(3, 2)}, {0, 1, 0}, {0, 0, 1}}};
      gform = gform.substitute(shear);
    }
    ++n;
    ModuliVerdict v = decide(reduce(setup(gform, {1, 0, 0})));
    bool good = v.constant && v.c.k == truth.k && (v.c.H == truth.H || v.c.H == -truth.H);
    ok += good;
    if (!good && first.empty()) first = gform.to_string();
  }
  Outcome o;
  o.pass = ok == n;
  o.detail = std::to_string(ok) + "/" + std::to_string(n) + " recovered k and +-H";
  if (!first.empty()) o.detail += "; first failure: " + first;
  return o;
}

Outcome criterion4() {
  double worst_pos = 0;
  int neg_ok = 0, errors = 0;
  std::string first;
  for (const auto& c : corpus_positives()) {
    PencilSetup s = setup(c.curve, {1, 0, 0});
    for (const auto& y : sample_lines(s, 20, kSeed)) {
      try {
        worst_pos = std::max(worst_pos, tangent_point(s, PencilLine::at(y), kTol).max_deviation);
      } catch (const Error& e) {
        ++errors;
        if (first.empty()) first = c.label + ": " + e.what();
      }
    }
  }
  std::string neg_miss;
  for (const auto& c : corpus_negatives()) {
    PencilSetup s = setup(c.curve, {1, 0, 0});
    bool seen = false;
    for (const auto& y : sample_lines(s, 20, kSeed)) {
      try {
        if (tangent_point(s, PencilLine::at(y), kTol).max_deviation > 1e-3) {
          seen = true;
          break;
        }
      } catch (const Error&) {
      }
    }
    neg_ok += seen;
    if (!seen && neg_miss.empty()) neg_miss = c.label;
  }
  Outcome o;
  const int nn = static_cast<int>(corpus_negatives().size());
  o.pass = worst_pos <= 1e-7 && errors == 0 && neg_ok == nn;
  o.detail = "positives: worst deviation " + fmt(worst_pos) + " (limit 1e-07), " + std::to_string(errors) +
             " errors; negatives above 1e-3: " + std::to_string(neg_ok) + "/" + std::to_string(nn);
  if (!first.empty()) o.detail += "; first error: " + first;
  if (!neg_miss.empty()) o.detail += "; first negative miss: " + neg_miss;
  return o;
}

Outcome criterion5() {
  int ok = 0, n = 0;
  double worst_x = 0, worst_special = 0;
  std::string first;
  for (const auto& c : corpus_positives()) {
    ++n;
    try {
      LocusReport r = t_locus(setup(c.curve, {1, 0, 0}), 12, kSeed, kTol);
      worst_x = std::max(worst_x, r.max_t_x);
      worst_special = std::max(worst_special, r.special_residual);
      bool good = (r.kind == LocusKind::Point || r.kind == LocusKind::LineX0) && r.max_t_x <= 1e-7 &&
                  r.special_residual <= 1e-7;
      ok += good;
      if (!good && first.empty()) first = c.label + " kind " + to_string(r.kind);
    } catch (const Error& e) {
      if (first.empty()) first = c.label + ": " + e.what();
    }
  }
  Outcome o;
  o.pass = ok == n;
  o.detail = std::to_string(ok) + "/" + std::to_string(n) + " positives; max |T_x| " + fmt(worst_x) +
             ", max special-point residual " + fmt(worst_special) + " (limits 1e-07)";
  if (!first.empty()) o.detail += "; first failure: " + first;
  return o;
}

Outcome criterion6() {
  int ok = 0, n = 0, witnesses = 0;
  std::string first;
  for (const auto& c : corpus_positives()) {
    ++n;
    bool good = true;
    for (const auto& l : special_lines(setup(c.curve, {1, 0, 0}), kTol)) good = good && l.count == 1;
    ok += good;
    if (!good && first.empty()) first = c.label;
  }
  for (const auto& c : corpus_negatives()) {
    bool w = false;
    for (const auto& l : special_lines(setup(c.curve, {1, 0, 0}), kTol)) w = w || (l.count >= 2 && l.count <= c.d - 1);
    witnesses += w;
  }
  Outcome o;
  o.pass = ok == n && witnesses >= 1;
  o.detail = std::to_string(ok) + "/" + std::to_string(n) + " positives with all counts 1; " +
             std::to_string(witnesses) + " negatives with a count in 2..d-1";
  if (!first.empty()) o.detail += "; first failure: " + first;
  return o;
}

// j(t) = 1728 * 4 f2^3 / (4 f2^3 + 27 f3^2), evaluated directly.
bool numeric_j_constant(const UnivariatePoly& f2, const UnivariatePoly& f3) {
  std::vector<double> js;
  for (int i = 0; js.size() < 10 && i < 40; ++i) {
    double t = -2.3 + 0.47 * i;
    double a = 4 * std::pow(f2.eval(t).real(), 3), b = 27 * std::pow(f3.eval(t).real(), 2);
    if (std::abs(a + b) < 1e-9 * (std::abs(a) + std::abs(b) + 1)) continue;
    js.push_back(1728 * a / (a + b));
  }
  double spread = 0;
  for (double j : js) spread = std::max(spread, std::abs(j - js[0]) / std::max(1.0, std::abs(js[0])));
  return spread <= 1e-6;
}

Outcome criterion7() {
  testkit::Gen g(kSeed + 7);
  std::vector<std::pair<UnivariatePoly, UnivariatePoly>> pairs = {
      {UnivariatePoly::monomial(1, 2), UnivariatePoly::monomial(1, 3)},
      {UnivariatePoly(), UnivariatePoly::monomial(1, 1)},
      {UnivariatePoly::monomial(1, 1), UnivariatePoly{1}}};
  const std::vector<bool> expected = {true, true, false};
  while (pairs.size() < 103) {
    UnivariatePoly f2, f3;
    switch (pairs.size() % 4) {
      case 0: {
        UnivariatePoly q = g.poly(1, 3);
        f2 = q.pow(2) * g.nonzero_rational(4, 2);
        f3 = q.pow(3) * g.nonzero_rational(4, 2);
        break;
      }
      case 1: f3 = g.poly(static_cast<int>(g.integer(0, 3)), 5); break;
      case 2: f2 = g.poly(static_cast<int>(g.integer(0, 2)), 5); break;
      default:
        f2 = g.poly(static_cast<int>(g.integer(0, 2)), 5);
        f3 = g.poly(static_cast<int>(g.integer(0, 3)), 5);
    }
    pairs.emplace_back(f2, f3);
  }
  int ok = 0, n = 0, degenerate = 0, constant = 0;
  std::string first;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [f2, f3] = pairs[i];
    JReport j;
    try {
      j = j_constancy(f2, f3);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::DegenerateFamily && i >= 3) {
        ++degenerate;
        continue;
      }
      if (first.empty()) first = std::string("pair ") + std::to_string(i) + ": " + e.what();
      ++n;
      continue;
    }
    ++n;
    WeierstrassFamily fam;
    fam.d = 3;
    fam.coeffs = {f3, f2, UnivariatePoly(), UnivariatePoly{1}};
    bool triv = is_locally_trivial(fam).isotrivial;
    bool num = numeric_j_constant(f2, f3);
    bool good = j.constant == triv && j.constant == num && (i >= 3 || j.constant == expected[i]);
    ok += good;
    constant += j.constant;
    if (!good && first.empty()) first = fam.to_string();
  }
  Outcome o;
  o.pass = ok == n && n >= 100;
  o.detail = std::to_string(ok) + "/" + std::to_string(n) + " pairs agree (" + std::to_string(constant) +
             " constant, " + std::to_string(degenerate) + " degenerate skipped), including the three reference pairs";
  if (!first.empty()) o.detail += "; first failure: " + first;
  return o;
}

// Independent numeric check of G(zeta X, Y, Z) = c G(X, Y, Z) at random complex points.
bool numeric_cyclic(const TernaryForm& g, int k) {
  const cd zeta = std::polar(1.0, 2 * std::numbers::pi / k);
  testkit::Gen r(k);
  std::optional<cd> ratio;
  for (int i = 0; i < 6; ++i) {
    CPoint3 p{cd(r.integer(-9, 9) / 7.0, r.integer(-9, 9) / 5.0), cd(r.integer(-9, 9) / 3.0, 0.5),
              cd(1.0, r.integer(-9, 9) / 11.0)};
    cd a = g.eval(p), b = g.eval({zeta * p[0], p[1], p[2]});
    if (std::abs(a) < 1e-6) continue;
    cd q = b / a;
    if (!ratio) ratio = q;
    else if (std::abs(q - *ratio) > 1e-7 * std::max(1.0, std::abs(*ratio))) return false;
  }
  return ratio.has_value();
}

Outcome criterion8() {
  int pass_k = 0, n = 0, checked_fail = 0, wrong_fail = 0, numeric_mismatch = 0;
  std::string first;
  for (const auto& c : corpus_positives()) {
    ++n;
    ModuliVerdict v = decide(reduce(setup(c.curve, {1, 0, 0})));
    const int k = v.c.k, d = c.d;
    bool ok_k = verify_cyclic_automorphism(c.curve, k);
    pass_k += ok_k;
    if (ok_k != numeric_cyclic(c.curve, k)) ++numeric_mismatch;
    if (!ok_k && first.empty()) first = c.label;
    bool must_fail = d % (k + 1) != 0 && (!v.c.has_x_factor || (d - 1) % (k + 1) != 0);
    if (must_fail) {
      ++checked_fail;
      bool holds = verify_cyclic_automorphism(c.curve, k + 1);
      if (holds) ++wrong_fail;
      if (holds != numeric_cyclic(c.curve, k + 1)) ++numeric_mismatch;
    }
  }
  Outcome o;
  o.pass = pass_k == n && wrong_fail == 0 && numeric_mismatch == 0 && checked_fail > 0;
  o.detail = "zeta_k holds on " + std::to_string(pass_k) + "/" + std::to_string(n) + "; zeta_(k+1) rejected on " +
             std::to_string(checked_fail - wrong_fail) + "/" + std::to_string(checked_fail) + " required cases; " +
             std::to_string(numeric_mismatch) + " disagreements with numeric evaluation";
  if (!first.empty()) o.detail += "; first failure: " + first;
  return o;
}

Outcome criterion9() {
  const std::vector<std::pair<const char*, CaseId>> reps = {{"X^4-Y^4", CaseId::D4ConcurrentLines},
                                                            {"X^4-Y^2*Z^2", CaseId::D4TwoConics},
                                                            {"X*(X^3+Y^3+Z^3)", CaseId::D4CubicLine},
                                                            {"X^4-Y*Z*(Y+Z)*(Y-Z)", CaseId::D4CyclicCover},
                                                            {"X^4-Y^2*Z*(Y-Z)", CaseId::D4Tacnode},
                                                            {"X^4-Y^3*Z", CaseId::D4TriplePoint}};
  std::set<CaseId> seen;
  Outcome o;
  for (const auto& [text, expected] : reps) {
    TernaryForm g = parse_form(text);
    WeierstrassData w = reduce(setup(g, {1, 0, 0}));
    CaseId got = classify(decide(w), w).id;
    seen.insert(got);
    if (got != expected || got == CaseId::Unclassified) {
      o.pass = false;
      o.detail += std::string(text) + " -> " + to_string(got) + "; ";
    }
  }
  // The constructed tacnode and triple-point representatives, typed independently.
  auto types = [](const char* text) {
    std::multiset<SingularType> t;
    for (const auto& p : singular_points(parse_form(text))) t.insert(p.type);
    return t;
  };
  if (types("X^4-Y^2*Z*(Y-Z)") != std::multiset<SingularType>{SingularType::TacnodeA3}) {
    o.pass = false;
    o.detail += "tacnode representative is not a single A3; ";
  }
  if (types("X^4-Y^3*Z") != std::multiset<SingularType>{SingularType::Y3X4}) {
    o.pass = false;
    o.detail += "triple-point representative is not a single y^3=x^4 point; ";
  }
  if (seen.size() != 6) o.pass = false;
  o.detail += std::to_string(seen.size()) + " distinct case ids from 6 representatives";
  return o;
}

#ifdef CMOD_TOOL_PATH
std::string capture(const std::string& args) {
  std::string cmd = "'" CMOD_TOOL_PATH "' " + args + " 2>/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}
#endif

Outcome criterion10() {
  Outcome o;
#ifdef CMOD_TOOL_PATH
  std::vector<std::string> runs = {"decide --curve 'X^4+Y*Z*X^2+X*Y^3+Z^4' --point 1,2,3 --oracle --seed 5",
                                   "classify --curve 'X^4-Y^2*Z*(Y-Z)' --point 1,0,0",
                                   "t-locus --curve 'X^3+Y^3+Z^3' --point 1,0,0 --seed 9",
                                   "special-lines --curve 'X^3+X*Z^2+Y^3' --point 1,0,0",
                                   "singular --curve 'X^4-Y^3*Z'",
                                   "isotrivial --family 'z^2 = x^3 + y^2*x + y^3'"};
  for (const auto& c : corpus_positives())
    if (runs.size() < 16) runs.push_back("decide --oracle --point 1,0,0 --curve '" + c.curve.to_string() + "'");
  int same = 0;
  for (const auto& r : runs) {
    std::string a = capture(r), b = capture(r);
    bool ok = !a.empty() && a == b;
    same += ok;
    if (!ok && o.pass) o.detail += "differs or empty: " + r + "; ";
    o.pass = o.pass && ok;
  }
  o.detail += std::to_string(same) + "/" + std::to_string(runs.size()) + " commands byte-identical across two runs";
#else
  o.pass = false;
  o.detail = "the cmod tool was not built";
#endif
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"cubic representatives decided and classified", criterion1},
      {"decide agrees with the sampling oracle", criterion2},
      {"normal-form round trip", criterion3},
      {"tangent concurrency", criterion4},
      {"T-locus", criterion5},
      {"special-line counts", criterion6},
      {"elliptic j bridge", criterion7},
      {"cyclic automorphism", criterion8},
      {"d=4 classification", criterion9},
      {"deterministic JSON", criterion10}};
  int failed = 0, i = 0;
  for (const auto& [name, f] : criteria) {
    ++i;
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i << "] " << name << ": " << o.detail << " ("
              << fmt(seconds_since(t0)) << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
