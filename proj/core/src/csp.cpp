#include "icsolve/csp.hpp"

#include "icsolve/error.hpp"

namespace icsolve {

Csp::Csp(std::vector<PrimitiveConstraint> constraints, Box initial_box, VarSet user_vars,
         std::vector<Equation> source_equations, std::map<VarName, ExprPtr> aux_definitions)
    : constraints_(std::move(constraints)),
      initial_box_(std::move(initial_box)),
      user_vars_(std::move(user_vars)),
      source_equations_(std::move(source_equations)),
      aux_definitions_(std::move(aux_definitions)) {
  for (const auto& v : user_vars_) {
    if (!initial_box_.has(v)) throw ContractViolation("user variable not in scope: " + v);
  }
  watchers_.resize(initial_box_.size());
  arg_indices_.reserve(constraints_.size());
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    auto& c = constraints_[i];
    c.validate();
    c.id = static_cast<int>(i);
    std::array<std::size_t, 3> idx{};
    for (std::size_t k = 0; k < c.args.size(); ++k) {
      idx[k] = initial_box_.require_index(c.args[k]);
      auto& w = watchers_[idx[k]];
      if (w.empty() || w.back() != c.id) w.push_back(c.id);
    }
    arg_indices_.push_back(idx);
  }
}

bool Csp::operator==(const Csp& other) const {
  return constraints_ == other.constraints_ && initial_box_ == other.initial_box_ &&
         user_vars_ == other.user_vars_;
}

std::map<VarName, std::vector<int>> var_index(const Csp& csp) {
  std::map<VarName, std::vector<int>> out;
  const auto& vars = csp.initial_box().vars();
  for (std::size_t i = 0; i < vars.size(); ++i) out[vars[i]] = csp.watchers()[i];
  return out;
}

}  // namespace icsolve
