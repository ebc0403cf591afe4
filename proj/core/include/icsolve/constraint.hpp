// Primitive constraints: sum, mul, sq and const over named variables.

#ifndef ICSOLVE_CONSTRAINT_HPP_
#define ICSOLVE_CONSTRAINT_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "icsolve/box.hpp"

namespace icsolve {

enum class ConstraintKind { kSum, kMul, kSq, kConst };

std::string_view kind_name(ConstraintKind kind);
std::size_t arity(ConstraintKind kind);

/// One primitive relation applied to an ordered argument list.
///
///   sum(a, b, c)   a + b = c
///   mul(a, b, c)   a * b = c
///   sq(a, b)       a * a = b
///   const_v(a)     a = v
///
/// Arguments may repeat (sq(x, x) is the relation x = x*x).
struct PrimitiveConstraint {
  ConstraintKind kind = ConstraintKind::kConst;
  std::vector<VarName> args;
  double value = 0.0;  // const only
  int id = 0;

  static PrimitiveConstraint sum(VarName a, VarName b, VarName c, int id = 0);
  static PrimitiveConstraint mul(VarName a, VarName b, VarName c, int id = 0);
  static PrimitiveConstraint sq(VarName a, VarName b, int id = 0);
  static PrimitiveConstraint constant(double value, VarName a, int id = 0);

  /// Distinct argument variables.
  VarSet vars() const;

  /// Throws ContractViolation if the arity or const value is invalid.
  void validate() const;

  /// Same relation on the same arguments (ids ignored).
  bool same_relation(const PrimitiveConstraint& other) const;
  bool operator==(const PrimitiveConstraint& other) const = default;
};

/// "sum(x,y,z)", "sq(x,y)", "const(1,u)".
std::string to_string(const PrimitiveConstraint& c);
std::ostream& operator<<(std::ostream& os, const PrimitiveConstraint& c);

}  // namespace icsolve

#endif  // ICSOLVE_CONSTRAINT_HPP_
