#include "icsolve/parser.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "icsolve/rounding.hpp"

namespace icsolve {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Tok { kIdent, kNumber, kPunct, kEnd };

struct Token {
  Tok type = Tok::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
        t.type = Tok::kIdent;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 ||
                                      src_[pos_] == '_')) {
          t.text.push_back(take());
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) != 0 ||
                 (c == '.' && pos_ + 1 < src_.size() &&
                  std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) != 0)) {
        t.type = Tok::kNumber;
        t.text = number();
      } else if (std::string_view("[],;=+-*^()").find(c) != std::string_view::npos) {
        t.type = Tok::kPunct;
        t.text.push_back(take());
      } else if (c == '<' || c == '>') {
        throw ParseError(line_, col_, "inequality constraints are not supported");
      } else if (c == '_') {
        throw ParseError(line_, col_, "identifiers must start with a letter");
      } else {
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  char take() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  bool digit_at(std::size_t i) const {
    return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i])) != 0;
  }

  std::string number() {
    std::string s;
    while (digit_at(pos_)) s.push_back(take());
    if (pos_ < src_.size() && src_[pos_] == '.') {
      s.push_back(take());
      while (digit_at(pos_)) s.push_back(take());
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const std::size_t sign = pos_ + 1;
      const std::size_t first = (sign < src_.size() && (src_[sign] == '+' || src_[sign] == '-'))
                                    ? sign + 1
                                    : sign;
      if (digit_at(first)) {
        while (pos_ < first) s.push_back(take());
        while (digit_at(pos_)) s.push_back(take());
      }
    }
    return s;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
        take();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_keyword(const std::string& s) { return s == "var" || s == "in" || s == "constraint"; }

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Problem run() {
    Problem out;
    while (peek().type != Tok::kEnd) {
      const Token& t = peek();
      if (t.type == Tok::kIdent && t.text == "var") {
        out.declarations.push_back(declaration());
      } else if (t.type == Tok::kIdent && t.text == "constraint") {
        out.equations.push_back(constraint());
      } else {
        fail(t, "expected 'var' or 'constraint'");
      }
    }
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.column, msg);
  }

  static std::string describe(const Token& t) {
    return t.type == Tok::kEnd ? "end of input" : "'" + t.text + "'";
  }

  bool at_punct(char c) const { return peek().type == Tok::kPunct && peek().text[0] == c; }

  void expect_punct(char c) {
    if (!at_punct(c)) fail(peek(), std::string("expected '") + c + "' but found " + describe(peek()));
    next();
  }

  void expect_word(const char* w) {
    if (peek().type != Tok::kIdent || peek().text != w) {
      fail(peek(), std::string("expected '") + w + "' but found " + describe(peek()));
    }
    next();
  }

  // Decimal bound rounded outward in direction `down` when inexact.
  double bound(bool down) {
    const Token& start = peek();
    bool negative = false;
    if (at_punct('-')) {
      negative = true;
      next();
    }
    const Token& t = next();
    if (t.type == Tok::kIdent && t.text == "inf") return negative ? -kInf : kInf;
    if (t.type != Tok::kNumber) fail(t, "expected a number but found " + describe(t));
    const std::string literal = (negative ? "-" : "") + t.text;
    const double nearest = std::strtod(literal.c_str(), nullptr);
    if (!std::isfinite(nearest)) fail(start, "bound out of range: " + literal);
    if (decimal_is_exact(literal, nearest)) return nearest;
    return down ? rounding::next_down(nearest) : rounding::next_up(nearest);
  }

  Declaration declaration() {
    expect_word("var");
    const Token& name = next();
    if (name.type != Tok::kIdent || is_keyword(name.text)) {
      fail(name, "expected a variable name but found " + describe(name));
    }
    if (!declared_.insert(name.text).second) fail(name, "variable '" + name.text + "' declared twice");
    Declaration d{name.text, Interval::entire()};
    if (at_punct(';')) {
      next();
      return d;
    }
    expect_word("in");
    const Token& open = peek();
    expect_punct('[');
    const double lo = bound(true);
    expect_punct(',');
    const double hi = bound(false);
    expect_punct(']');
    if (lo == kInf || hi == -kInf) fail(open, "infinite bound on the wrong side");
    if (lo > hi) fail(open, "empty declared interval: lower bound exceeds upper bound");
    d.domain = Interval(lo, hi);
    expect_punct(';');
    return d;
  }

  Equation constraint() {
    expect_word("constraint");
    Equation eq;
    eq.lhs = expr();
    expect_punct('=');
    eq.rhs = expr();
    expect_punct(';');
    return eq;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (at_punct('+') || at_punct('-')) {
      const auto op = next().text[0] == '+' ? Expr::Op::kAdd : Expr::Op::kSub;
      e = Expr::binary(op, e, term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (at_punct('*')) {
      next();
      e = Expr::binary(Expr::Op::kMul, e, factor());
    }
    return e;
  }

  ExprPtr factor() {
    bool negate = false;
    if (at_punct('-')) {
      negate = true;
      next();
    }
    ExprPtr e = atom();
    if (at_punct('^')) {
      next();
      const Token& t = next();
      if (t.type != Tok::kNumber) fail(t, "expected an integer exponent but found " + describe(t));
      if (t.text.find_first_not_of("0123456789") != std::string::npos) {
        fail(t, "exponent must be a positive integer: " + t.text);
      }
      const long k = t.text.size() > 9 ? -1 : std::stol(t.text);
      if (k < 1) fail(t, "exponent must be a positive integer: " + t.text);
      e = Expr::pow(e, static_cast<int>(k));
    }
    return negate ? Expr::neg(e) : e;
  }

  ExprPtr atom() {
    const Token& t = next();
    if (t.type == Tok::kIdent) {
      if (is_keyword(t.text)) fail(t, "unexpected keyword '" + t.text + "'");
      if (declared_.count(t.text) == 0) fail(t, "undeclared variable '" + t.text + "'");
      return Expr::var(t.text);
    }
    if (t.type == Tok::kNumber) {
      if (!std::isfinite(std::strtod(t.text.c_str(), nullptr))) {
        fail(t, "constant out of range: " + t.text);
      }
      return Expr::constant(t.text);
    }
    if (t.type == Tok::kPunct && t.text == "(") {
      ExprPtr e = expr();
      expect_punct(')');
      return e;
    }
    fail(t, "expected a variable, number or '(' but found " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> declared_;
};

// Decimal spelling that denotes `x` exactly.
std::string exact_decimal(double x) {
  const std::string shortest = format_bound(x);
  if (std::isinf(x) || decimal_is_exact(shortest, x)) return shortest;
  char buf[1024];
  std::snprintf(buf, sizeof buf, "%.800e", x);
  std::string s(buf);
  const auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  const std::string exponent = s.substr(e);
  mantissa.erase(mantissa.find_last_not_of('0') + 1);
  if (mantissa.back() == '.') mantissa.pop_back();
  return mantissa + exponent;
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

Problem parse_problem(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string canonical_text(const Problem& problem) {
  std::string out;
  for (const auto& d : problem.declarations) {
    if (d.domain == Interval::entire()) {
      out += "var " + d.name + ";\n";
    } else {
      out += "var " + d.name + " in [" + exact_decimal(d.domain.lo()) + ", " +
             exact_decimal(d.domain.hi()) + "];\n";
    }
  }
  for (const auto& eq : problem.equations) out += "constraint " + to_string(eq) + ";\n";
  return out;
}

}  // namespace icsolve
