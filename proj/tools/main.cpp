// cmod: command-line front end. Every verdict goes into the JSON report on stdout;
// exit codes only signal operational failures (2: bad input, 3: internal).

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "cmod/parser.hpp"
#include "report.hpp"
#include "svg.hpp"

namespace {

using namespace cmod;
using tool::json;
using tool::to_json;

constexpr const char* kVersion = "0.3.0";
constexpr double kCliTol = 1e-8;

struct Common {
  std::string curve, point = "1,0,0", family, line, out;
  double tol = 0;
  std::uint64_t seed = 1;
  int samples = 12;
  int lines = 8;
  bool oracle = false;
  bool timings = false;
};

// Input error reported with the offending argument and a caret under the column.
struct InputError {
  std::string message;
};

class Stopwatch {
 public:
  template <class F>
  auto time(const std::string& name, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = f();
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    entries_[name] = ms;
    return r;
  }
  json entries() const { return entries_; }

 private:
  json entries_ = json::object();
};

double default_tol() {
  if (const char* env = std::getenv("MODULI_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0))
      throw InputError{std::string("MODULI_TOL is not a positive number: '") + env + "'"};
    return v;
  }
  return kCliTol;
}

template <class F>
auto parse_arg(const std::string& flag, const std::string& text, F&& f) {
  try {
    return f(text);
  } catch (const ParseError& e) {
    std::string caret(flag.size() + 1 + (e.column() > 0 ? e.column() - 1 : 0), ' ');
    throw InputError{std::string(e.what()) + "\n  " + flag + " " + text + "\n  " + caret + "^"};
  }
}

TernaryForm curve_of(const Common& c) {
  return parse_arg("--curve", c.curve, [](const std::string& t) { return parse_form(t); });
}

Point3 point_of(const Common& c) {
  return parse_arg("--point", c.point, [](const std::string& t) { return parse_point(t); });
}

PencilLine line_of(const Common& c) {
  if (c.line == "inf" || c.line == "infinity") return PencilLine::infinity();
  return PencilLine::at(parse_rational(c.line));
}

json run(const std::string& cmd, const Common& c, double tol, Stopwatch& sw) {
  if (cmd == "isotrivial") {
    auto fam = family_from_equation(
        parse_arg("--family", c.family, [](const std::string& t) { return parse_family_equation(t); }));
    auto v = sw.time("isotrivial", [&] { return is_locally_trivial(fam); });
    return {{"family", to_json(fam)}, {"triviality", to_json(v)}};
  }
  TernaryForm g = curve_of(c);
  if (cmd == "singular") {
    auto pts = sw.time("singular", [&] { return singular_points(g, tol); });
    json a = json::array();
    for (const auto& p : pts) a.push_back(to_json(p));
    return {{"degree", g.degree()}, {"singular_points", a}};
  }

  Point3 p = point_of(c);
  PencilSetup s = sw.time("setup", [&] { return setup(g, p); });
  json result{{"setup", tool::setup_json(s)}};

  if (cmd == "decide" || cmd == "normalize" || cmd == "classify") {
    WeierstrassData w = sw.time("reduce", [&] { return reduce(s); });
    if (cmd == "normalize") {
      result["weierstrass"] = to_json(w);
      return result;
    }
    ModuliVerdict v = sw.time("decide", [&] { return decide(w); });
    result["verdict"] = to_json(v);
    if (cmd == "decide" && c.oracle) {
      OracleVerdict o = sw.time("oracle", [&] { return constant_moduli_oracle(s, c.samples, c.seed, tol); });
      result["oracle"] = to_json(o);
      result["agreement"] = o.constant == v.constant;
    }
    if (cmd == "classify") {
      if (w.d != 3 && w.d != 4)
        throw Error(ErrorKind::UnsupportedDegree,
                    "classify supports d = 3 and d = 4 only (got d = " + std::to_string(w.d) + ")");
      if (!v.constant) {
        result["classification"] = nullptr;
      } else {
        auto cl = sw.time("classify", [&] { return classify(v, w); });
        result["classification"] = to_json(cl);
      }
    }
    return result;
  }
  if (cmd == "special-lines") {
    auto ls = sw.time("special_lines", [&] { return special_lines(s, tol); });
    auto pts = special_points(s, ls, tol);
    json a = json::array(), b = json::array();
    for (const auto& l : ls) a.push_back(to_json(l));
    for (const auto& q : pts) b.push_back(to_json(q));
    result["special_lines"] = a;
    result["special_points"] = b;
    return result;
  }
  if (cmd == "t-locus") {
    auto l = sw.time("t_locus", [&] { return t_locus(s, c.samples, c.seed, tol); });
    result["locus"] = to_json(l);
    return result;
  }
  if (cmd == "tangents") {
    PencilLine line = line_of(c);
    auto t = sw.time("tangents", [&] { return tangent_point(s, line, tol); });
    result["tangents"] = to_json(t);
    return result;
  }
  if (cmd == "plot") {
    tool::PlotOptions o{c.lines, c.seed, tol, 400};
    std::string svg = sw.time("plot", [&] { return tool::plot_svg(s, o); });
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw InputError{"cannot write '" + c.out + "'"};
    f << svg;
    result["out"] = c.out;
    result["bytes"] = svg.size();
    return result;
  }
  throw Error(ErrorKind::Internal, "unknown command " + cmd);
}

json input_echo(const std::string& cmd, const Common& c) {
  json in = json::object();
  if (cmd == "isotrivial") {
    in["family"] = c.family;
    return in;
  }
  in["curve"] = c.curve;
  if (cmd != "singular") in["point"] = c.point;
  if (cmd == "tangents") in["line"] = c.line;
  if (cmd == "decide" && c.oracle) in["samples"] = c.samples;
  if (cmd == "t-locus") in["samples"] = c.samples;
  if (cmd == "plot") in["lines"] = c.lines;
  return in;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant moduli of plane curve pencils"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub, bool point, bool seed) {
    sub->add_option("--curve", c.curve, "Homogeneous polynomial in X, Y, Z")->required();
    if (point) sub->add_option("--point", c.point, "Point p as a,b,c")->required();
    if (seed) sub->add_option("--seed", c.seed, "Sampling seed");
    sub->add_option("--tol", c.tol, "Numeric tolerance (default MODULI_TOL or 1e-8)")->check(CLI::PositiveNumber);
    sub->add_flag("--timings", c.timings, "Include stage timings in the report");
  };

  auto* decide_cmd = app.add_subcommand("decide", "Decide constant moduli for (C, p)");
  add_common(decide_cmd, true, true);
  decide_cmd->add_flag("--oracle", c.oracle, "Cross-check with the numeric sampling oracle");
  decide_cmd->add_option("--samples", c.samples, "Oracle sample lines")->check(CLI::Range(2, 1000));

  add_common(app.add_subcommand("normalize", "Reduced form and coordinate change"), true, false);
  add_common(app.add_subcommand("classify", "Geometric case for d = 3, 4"), true, false);
  add_common(app.add_subcommand("special-lines", "Non-generic lines of the pencil"), true, false);
  auto* locus_cmd = app.add_subcommand("t-locus", "Locus of tangent concurrency points");
  add_common(locus_cmd, true, true);
  locus_cmd->add_option("--samples", c.samples, "Sample lines")->check(CLI::Range(3, 1000));
  auto* tangents_cmd = app.add_subcommand("tangents", "Tangents along one line of the pencil");
  add_common(tangents_cmd, true, false);
  tangents_cmd->add_option("--line", c.line, "y0 of the line Y = y0 Z (moved chart), or inf")->required();

  auto* iso_cmd = app.add_subcommand("isotrivial", "Local triviality of z^2 = P(x, y)");
  iso_cmd->add_option("--family", c.family, "Equation z^2 = ...")->required();
  iso_cmd->add_option("--tol", c.tol, "Numeric tolerance")->check(CLI::PositiveNumber);
  iso_cmd->add_flag("--timings", c.timings, "Include stage timings in the report");

  add_common(app.add_subcommand("singular", "Singular points of C"), false, false);
  auto* plot_cmd = app.add_subcommand("plot", "SVG picture of the pencil");
  add_common(plot_cmd, true, true);
  plot_cmd->add_option("--out", c.out, "Output SVG path")->required();
  plot_cmd->add_option("--lines", c.lines, "Sampled pencil lines")->check(CLI::Range(1, 200));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    double tol = c.tol > 0 ? c.tol : default_tol();
    Stopwatch sw;
    json report{{"schema", 1}, {"tool", "cmod"}, {"version", kVersion}, {"command", cmd}};
    report["input"] = input_echo(cmd, c);
    report["tolerance"] = tol;
    report["seed"] = c.seed;
    report["result"] = run(cmd, c, tol, sw);
    if (c.timings) report["timings"] = sw.entries();
    std::cout << report.dump(2) << "\n";
    if (report["result"].contains("agreement") && !report["result"]["agreement"].get<bool>()) {
      std::cerr << "error: symbolic verdict and sampling oracle disagree\n";
      return 3;
    }
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return e.kind() == ErrorKind::Internal ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error [internal-inconsistency]: " << e.what() << "\n";
    return 3;
  }
}
