// Constraint-satisfaction problems over primitive constraints.

#ifndef ICSOLVE_CSP_HPP_
#define ICSOLVE_CSP_HPP_

#include <array>
#include <map>
#include <vector>

#include "icsolve/box.hpp"
#include "icsolve/constraint.hpp"
#include "icsolve/expr.hpp"

namespace icsolve {

/// A CSP: primitive constraints, their variables and an initial box.
///
/// The variable set is the scope of the initial box; it contains every
/// variable that occurs in a constraint. Constraint ids are renumbered
/// 0..m-1 in list order. User variables are the declared ones; the rest are
/// auxiliaries introduced by decomposition.
class Csp {
 public:
  Csp() = default;
  /// Throws ContractViolation if a constraint mentions a variable outside
  /// the box scope or a user variable is not in scope.
  Csp(std::vector<PrimitiveConstraint> constraints, Box initial_box, VarSet user_vars = {},
      std::vector<Equation> source_equations = {},
      std::map<VarName, ExprPtr> aux_definitions = {});

  const std::vector<PrimitiveConstraint>& constraints() const { return constraints_; }
  const Box& initial_box() const { return initial_box_; }
  VarSet variables() const { return initial_box_.scope(); }
  const VarSet& user_vars() const { return user_vars_; }
  const std::vector<Equation>& source_equations() const { return source_equations_; }
  /// For each auxiliary, the sub-expression of the source it stands for.
  const std::map<VarName, ExprPtr>& aux_definitions() const { return aux_definitions_; }

  std::size_t size() const { return constraints_.size(); }
  /// Box indices of constraint i's arguments, in argument order.
  const std::array<std::size_t, 3>& arg_indices(std::size_t i) const { return arg_indices_[i]; }
  /// For each box index, the ids of the constraints mentioning it (once each).
  const std::vector<std::vector<int>>& watchers() const { return watchers_; }

  /// Same constraints, variables and initial box.
  bool operator==(const Csp& other) const;

 private:
  std::vector<PrimitiveConstraint> constraints_;
  Box initial_box_;
  VarSet user_vars_;
  std::vector<Equation> source_equations_;
  std::map<VarName, ExprPtr> aux_definitions_;
  std::vector<std::array<std::size_t, 3>> arg_indices_;
  std::vector<std::vector<int>> watchers_;
};

/// Variable -> ids of the constraints whose argument list contains it.
std::map<VarName, std::vector<int>> var_index(const Csp& csp);

}  // namespace icsolve

#endif  // ICSOLVE_CSP_HPP_
