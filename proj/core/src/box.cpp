#include "icsolve/box.hpp"

#include <algorithm>
#include <cctype>

#include "icsolve/error.hpp"

namespace icsolve {

bool is_user_var_name(std::string_view name) {
  if (name.empty() || std::isalpha(static_cast<unsigned char>(name.front())) == 0) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

Box::Box() : scope_(std::make_shared<const std::vector<VarName>>()) {}

Box::Box(std::shared_ptr<const std::vector<VarName>> scope, std::vector<Interval> values)
    : scope_(std::move(scope)), values_(std::move(values)) {
  empty_ = std::any_of(values_.begin(), values_.end(),
                       [](const Interval& v) { return v.is_empty(); });
  if (empty_) make_empty();
}

Box::Box(std::initializer_list<std::pair<const VarName, Interval>> bindings)
    : Box(std::vector<std::pair<VarName, Interval>>(bindings.begin(), bindings.end())) {}

Box::Box(const std::vector<std::pair<VarName, Interval>>& bindings) {
  auto sorted = bindings;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<VarName> names;
  std::vector<Interval> values;
  names.reserve(sorted.size());
  values.reserve(sorted.size());
  for (const auto& [name, value] : sorted) {
    if (!names.empty() && names.back() == name) {
      throw ContractViolation("duplicate variable in box: " + name);
    }
    names.push_back(name);
    values.push_back(value);
  }
  *this = Box(std::make_shared<const std::vector<VarName>>(std::move(names)), std::move(values));
}

Box Box::full(const VarSet& vars) {
  return Box(std::make_shared<const std::vector<VarName>>(vars.begin(), vars.end()),
             std::vector<Interval>(vars.size(), Interval::entire()));
}

Box Box::empty_over(const VarSet& vars) {
  Box b = full(vars);
  b.make_empty();
  return b;
}

VarSet Box::scope() const { return VarSet(scope_->begin(), scope_->end()); }

std::optional<std::size_t> Box::index_of(std::string_view var) const {
  const auto it = std::lower_bound(scope_->begin(), scope_->end(), var);
  if (it == scope_->end() || *it != var) return std::nullopt;
  return static_cast<std::size_t>(it - scope_->begin());
}

std::size_t Box::require_index(std::string_view var) const {
  const auto i = index_of(var);
  if (!i) throw ContractViolation("variable not in box scope: " + std::string(var));
  return *i;
}

void Box::set(std::size_t i, const Interval& value) {
  if (empty_) return;
  if (value.is_empty()) {
    make_empty();
    return;
  }
  values_.at(i) = value;
}

bool Box::narrow(std::size_t i, const Interval& value) {
  if (empty_) return false;
  const Interval next = intersect(values_.at(i), value);
  if (next == values_[i]) return false;
  set(i, next);
  return true;
}

void Box::make_empty() {
  empty_ = true;
  std::fill(values_.begin(), values_.end(), Interval::empty());
}

bool Box::same_scope(const Box& other) const {
  return scope_ == other.scope_ || *scope_ == *other.scope_;
}

bool Box::subset_of(const Box& other) const {
  if (!same_scope(other)) throw ContractViolation("box inclusion across different scopes");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!values_[i].subset_of(other.values_[i])) return false;
  }
  return true;
}

bool Box::operator==(const Box& other) const {
  return same_scope(other) && empty_ == other.empty_ && values_ == other.values_;
}

Box project(const Box& b, const VarSet& vars) {
  std::vector<Interval> values;
  values.reserve(vars.size());
  for (const auto& v : vars) values.push_back(b.at(v));
  return Box(std::make_shared<const std::vector<VarName>>(vars.begin(), vars.end()),
             std::move(values));
}

Box cylinder(const Box& b, const VarSet& vars) {
  for (const auto& v : b.vars()) {
    if (vars.count(v) == 0) {
      throw ContractViolation("cylinder target scope does not contain " + v);
    }
  }
  std::vector<Interval> values;
  values.reserve(vars.size());
  for (const auto& v : vars) {
    const auto i = b.index_of(v);
    values.push_back(i ? b[*i] : Interval::entire());
  }
  return Box(std::make_shared<const std::vector<VarName>>(vars.begin(), vars.end()),
             std::move(values));
}

Box join_boxes(const Box& b0, const Box& b1) {
  VarSet all = b0.scope();
  all.insert(b1.vars().begin(), b1.vars().end());
  Box out = cylinder(b0, all);
  for (std::size_t i = 0; i < b1.size(); ++i) {
    out.narrow(out.require_index(b1.vars()[i]), b1[i]);
  }
  if (b1.is_empty()) out.make_empty();
  return out;
}

Box box_hull(std::span<const Box> boxes) {
  if (boxes.empty()) throw ContractViolation("box_hull of an empty collection");
  Box out = boxes.front();
  for (const Box& b : boxes.subspan(1)) {
    if (!b.same_scope(out)) throw ContractViolation("box_hull over mixed scopes");
    if (b.is_empty()) continue;
    if (out.is_empty()) {
      out = b;
      continue;
    }
    for (std::size_t i = 0; i < b.size(); ++i) out.set(i, hull(out[i], b[i]));
  }
  return out;
}

bool info_leq(const Box& coarse, const Box& fine) { return fine.subset_of(coarse); }

std::string to_string(const Box& b, std::span<const VarName> vars) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : vars) {
    if (!first) out += ", ";
    first = false;
    out += v + "=" + to_string(b.at(v));
  }
  return out + "}";
}

std::string to_string(const Box& b) { return to_string(b, b.vars()); }

std::ostream& operator<<(std::ostream& os, const Box& b) { return os << to_string(b); }

}  // namespace icsolve
