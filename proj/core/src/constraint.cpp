#include "icsolve/constraint.hpp"

#include <cmath>

#include "icsolve/error.hpp"

namespace icsolve {

std::string_view kind_name(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kSum:
      return "sum";
    case ConstraintKind::kMul:
      return "mul";
    case ConstraintKind::kSq:
      return "sq";
    case ConstraintKind::kConst:
      return "const";
  }
  return "?";
}

std::size_t arity(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kSum:
    case ConstraintKind::kMul:
      return 3;
    case ConstraintKind::kSq:
      return 2;
    case ConstraintKind::kConst:
      return 1;
  }
  return 0;
}

PrimitiveConstraint PrimitiveConstraint::sum(VarName a, VarName b, VarName c, int id) {
  return {ConstraintKind::kSum, {std::move(a), std::move(b), std::move(c)}, 0.0, id};
}

PrimitiveConstraint PrimitiveConstraint::mul(VarName a, VarName b, VarName c, int id) {
  return {ConstraintKind::kMul, {std::move(a), std::move(b), std::move(c)}, 0.0, id};
}

PrimitiveConstraint PrimitiveConstraint::sq(VarName a, VarName b, int id) {
  return {ConstraintKind::kSq, {std::move(a), std::move(b)}, 0.0, id};
}

PrimitiveConstraint PrimitiveConstraint::constant(double value, VarName a, int id) {
  return {ConstraintKind::kConst, {std::move(a)}, value == 0 ? 0.0 : value, id};
}

VarSet PrimitiveConstraint::vars() const { return VarSet(args.begin(), args.end()); }

void PrimitiveConstraint::validate() const {
  if (args.size() != arity(kind)) {
    throw ContractViolation(std::string(kind_name(kind)) + " constraint has wrong arity");
  }
  if (kind == ConstraintKind::kConst && !std::isfinite(value)) {
    throw ContractViolation("const constraint value must be finite");
  }
}

bool PrimitiveConstraint::same_relation(const PrimitiveConstraint& other) const {
  return kind == other.kind && args == other.args && value == other.value;
}

std::string to_string(const PrimitiveConstraint& c) {
  std::string out(kind_name(c.kind));
  out += "(";
  if (c.kind == ConstraintKind::kConst) out += format_bound(c.value) + ",";
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i > 0) out += ",";
    out += c.args[i];
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const PrimitiveConstraint& c) {
  return os << to_string(c);
}

}  // namespace icsolve
