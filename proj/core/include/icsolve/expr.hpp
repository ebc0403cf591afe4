// Expression trees of the problem language.

#ifndef ICSOLVE_EXPR_HPP_
#define ICSOLVE_EXPR_HPP_

#include <memory>
#include <string>
#include <vector>

#include "icsolve/box.hpp"
#include "icsolve/interval.hpp"

namespace icsolve {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op { kVar, kConst, kAdd, kSub, kMul, kNeg, kPow };

  Op op = Op::kConst;
  VarName name;               // kVar
  Interval value;             // kConst: a point when the literal is exact
  std::string literal;        // kConst: source spelling
  int exponent = 0;           // kPow, >= 1
  ExprPtr lhs;                // operand of kNeg/kPow, left of binary ops
  ExprPtr rhs;

  static ExprPtr var(VarName name);
  /// A constant from a decimal literal; inexact literals become the
  /// one-ULP outward interval around the nearest double.
  static ExprPtr constant(const std::string& literal);
  static ExprPtr constant(double exact_value);
  static ExprPtr binary(Op op, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr neg(ExprPtr operand);
  static ExprPtr pow(ExprPtr base, int exponent);
};

struct Equation {
  ExprPtr lhs;
  ExprPtr rhs;
};

/// Whether a decimal literal denotes a binary64 value exactly.
bool decimal_is_exact(const std::string& literal, double nearest);

/// Canonical rendering that the parser reads back to an identical tree.
std::string to_string(const Expr& e);
std::string to_string(const Equation& eq);

/// Variables mentioned anywhere in the tree.
void collect_vars(const Expr& e, VarSet& out);

}  // namespace icsolve

#endif  // ICSOLVE_EXPR_HPP_
