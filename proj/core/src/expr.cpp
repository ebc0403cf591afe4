#include "icsolve/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "icsolve/error.hpp"
#include "icsolve/rounding.hpp"

namespace icsolve {
namespace {

// Significant digits (no leading/trailing zeros) and the decimal exponent of
// the first digit, so that value = 0.d1d2d3... * 10^(exp + 1).
struct DecimalDigits {
  std::string digits;
  long exponent = 0;
};

std::optional<DecimalDigits> normalize_decimal(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::string mantissa;
  long point = -1;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      mantissa.push_back(c);
    } else if (c == '.' && point < 0) {
      point = static_cast<long>(mantissa.size());
    } else {
      break;
    }
  }
  if (mantissa.empty()) return std::nullopt;
  if (point < 0) point = static_cast<long>(mantissa.size());
  long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    char* end = nullptr;
    exp10 = std::strtol(text.c_str() + i + 1, &end, 10);
    i = static_cast<std::size_t>(end - text.c_str());
  }
  if (i != text.size()) return std::nullopt;

  const auto first = mantissa.find_first_not_of('0');
  if (first == std::string::npos) return DecimalDigits{"", 0};
  const auto last = mantissa.find_last_not_of('0');
  DecimalDigits out;
  out.digits = mantissa.substr(first, last - first + 1);
  out.exponent = point - static_cast<long>(first) - 1 + exp10;
  return out;
}

bool is_binary(Expr::Op op) {
  return op == Expr::Op::kAdd || op == Expr::Op::kSub || op == Expr::Op::kMul;
}

std::string render(const Expr& e, bool top) {
  switch (e.op) {
    case Expr::Op::kVar:
      return e.name;
    case Expr::Op::kConst:
      return e.literal.empty() ? format_bound(e.value.lo()) : e.literal;
    case Expr::Op::kNeg: {
      const bool atomic = e.lhs->op == Expr::Op::kVar || e.lhs->op == Expr::Op::kConst;
      return atomic ? "-" + render(*e.lhs, false) : "-(" + render(*e.lhs, true) + ")";
    }
    case Expr::Op::kPow: {
      const bool atomic = e.lhs->op == Expr::Op::kVar || e.lhs->op == Expr::Op::kConst;
      const std::string base = atomic ? render(*e.lhs, false) : "(" + render(*e.lhs, true) + ")";
      return base + "^" + std::to_string(e.exponent);
    }
    case Expr::Op::kAdd:
    case Expr::Op::kSub:
    case Expr::Op::kMul: {
      const char* sym = e.op == Expr::Op::kAdd ? " + " : (e.op == Expr::Op::kSub ? " - " : " * ");
      std::string body = render(*e.lhs, false) + sym + render(*e.rhs, false);
      return top ? body : "(" + body + ")";
    }
  }
  return "?";
}

}  // namespace

bool decimal_is_exact(const std::string& literal, double nearest) {
  const auto want = normalize_decimal(literal);
  if (!want || !std::isfinite(nearest)) return false;
  // %.800e prints the exact binary64 expansion (at most 767 significant
  // digits) followed by zeros.
  char buf[1024];
  std::snprintf(buf, sizeof buf, "%.800e", std::fabs(nearest));
  const auto have = normalize_decimal(buf);
  return have && have->digits == want->digits &&
         (want->digits.empty() || have->exponent == want->exponent);
}

ExprPtr Expr::var(VarName name) {
  auto e = std::make_shared<Expr>();
  e->op = Op::kVar;
  e->name = std::move(name);
  return e;
}

ExprPtr Expr::constant(const std::string& literal) {
  const double nearest = std::strtod(literal.c_str(), nullptr);
  if (!std::isfinite(nearest)) throw ContractViolation("constant out of range: " + literal);
  auto e = std::make_shared<Expr>();
  e->op = Op::kConst;
  e->literal = literal;
  e->value = decimal_is_exact(literal, nearest)
                 ? Interval::point(nearest)
                 : Interval(rounding::next_down(nearest), rounding::next_up(nearest));
  return e;
}

ExprPtr Expr::constant(double exact_value) {
  auto e = std::make_shared<Expr>();
  e->op = Op::kConst;
  e->value = Interval::point(exact_value);
  e->literal = format_bound(exact_value);
  return e;
}

ExprPtr Expr::binary(Op op, ExprPtr lhs, ExprPtr rhs) {
  if (!is_binary(op)) throw ContractViolation("not a binary operator");
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr Expr::neg(ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->op = Op::kNeg;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr Expr::pow(ExprPtr base, int exponent) {
  if (exponent < 1) throw ContractViolation("exponent must be a positive integer");
  auto e = std::make_shared<Expr>();
  e->op = Op::kPow;
  e->lhs = std::move(base);
  e->exponent = exponent;
  return e;
}

std::string to_string(const Expr& e) { return render(e, true); }

std::string to_string(const Equation& eq) {
  return to_string(*eq.lhs) + " = " + to_string(*eq.rhs);
}

void collect_vars(const Expr& e, VarSet& out) {
  if (e.op == Expr::Op::kVar) out.insert(e.name);
  if (e.lhs) collect_vars(*e.lhs, out);
  if (e.rhs) collect_vars(*e.rhs, out);
}

}  // namespace icsolve
