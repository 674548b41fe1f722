#include "cmod/parser.hpp"

#include <cctype>

#include "cmod/error.hpp"

namespace cmod {

namespace {

class Parser {
 public:
  Parser(std::string_view text, bool allow_z) : s_(text), allow_z_(allow_z) {}

  SparsePoly parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty polynomial");
    SparsePoly p = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_ + 1, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  SparsePoly expr() {
    SparsePoly acc = signed_term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += signed_term();
      } else if (peek('-')) {
        ++pos_;
        acc -= signed_term();
      } else {
        return acc;
      }
    }
  }

  SparsePoly signed_term() {
    if (peek('-')) {
      ++pos_;
      return -signed_term();
    }
    if (peek('+')) {
      ++pos_;
      return signed_term();
    }
    return term();
  }

  SparsePoly term() {
    SparsePoly acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        if (peek('-')) {
          ++pos_;
          acc = acc * -power();
        } else {
          acc = acc * power();
        }
      } else if (starts_factor()) {
        fail("implicit multiplication is not allowed; use '*'");
      } else {
        return acc;
      }
    }
  }

  SparsePoly power() {
    SparsePoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("exponent must be a non-negative integer");
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ - start > 3) {
        pos_ = start;
        fail("exponent too large");
      }
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
      if (peek('^')) fail("chained exponents are ambiguous; use parentheses");
    }
    return base;
  }

  SparsePoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      SparsePoly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return SparsePoly::constant(number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      int index = -1;
      switch (std::tolower(static_cast<unsigned char>(c))) {
        case 'x': index = 0; break;
        case 'y': index = 1; break;
        case 'z': index = allow_z_ ? 2 : -1; break;
        default: break;
      }
      if (index < 0) fail(std::string("unknown variable '") + c + "'");
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        fail("implicit multiplication is not allowed; use '*'");
      return SparsePoly::variable(index);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    Integer num(std::string(s_.substr(start, pos_ - start)));
    Integer den = 1;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip();
      std::size_t ds = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (ds == pos_) fail("expected an integer denominator after '/'");
      den = Integer(std::string(s_.substr(ds, pos_ - ds)));
      if (den == 0) {
        pos_ = ds;
        fail("zero denominator");
      }
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view s_;
  bool allow_z_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_polynomial(std::string_view text) { return Parser(text, true).parse(); }

TernaryForm parse_form(std::string_view text) { return TernaryForm::from(parse_polynomial(text)); }

Point3 parse_point(std::string_view text) {
  Point3 p;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    std::size_t comma = text.find(',', start);
    if ((i < 2) != (comma != std::string_view::npos))
      throw ParseError(start + 1, "a point needs exactly three comma-separated coordinates");
    std::string_view part = text.substr(start, i < 2 ? comma - start : std::string_view::npos);
    SparsePoly v = Parser(part, false).parse();
    if (v.total_degree() > 0) throw ParseError(start + 1, "point coordinates must be numbers");
    p[static_cast<std::size_t>(i)] = v.is_zero() ? Rational(0) : v.terms().begin()->second;
    start = comma + 1;
  }
  if (sgn(p[0]) == 0 && sgn(p[1]) == 0 && sgn(p[2]) == 0)
    throw Error(ErrorKind::InvalidInput, "[0:0:0] is not a projective point");
  return p;
}

FamilyEquation parse_family_equation(std::string_view text) {
  std::size_t eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError(1, "expected 'z^2 = <polynomial in x and y>'");
  std::string lhs;
  for (char c : text.substr(0, eq))
    if (!std::isspace(static_cast<unsigned char>(c))) lhs.push_back(c);
  if (lhs != "z^2") throw ParseError(1, "left-hand side must be z^2");
  SparsePoly rhs;
  try {
    rhs = Parser(text.substr(eq + 1), false).parse();
  } catch (const ParseError& e) {
    throw ParseError(eq + 1 + e.column(), std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
  FamilyEquation out;
  for (const auto& [e, c] : rhs.terms()) {
    auto k = static_cast<std::size_t>(e[0]);
    if (out.coeffs.size() <= k) out.coeffs.resize(k + 1);
    out.coeffs[k] += UnivariatePoly::monomial(c, e[1]);
  }
  return out;
}

}  // namespace cmod
