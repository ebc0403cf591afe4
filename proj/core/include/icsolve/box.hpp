// Variable-indexed boxes: products of per-variable intervals.

#ifndef ICSOLVE_BOX_HPP_
#define ICSOLVE_BOX_HPP_

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icsolve/interval.hpp"

namespace icsolve {

/// Variable identifiers. User variables match [A-Za-z][A-Za-z0-9_]*;
/// names starting with '_' are reserved for auxiliaries.
using VarName = std::string;
using VarSet = std::set<VarName>;

bool is_user_var_name(std::string_view name);

/// A finite map VarName -> Interval over a fixed scope.
///
/// Bindings are kept in lexicographic variable order. The scope vector is
/// shared between copies, so copying a box costs one interval vector.
/// A box is empty-normalized: once any binding becomes empty, every binding
/// is the empty interval and is_empty() reports true.
class Box {
 public:
  Box();
  Box(std::initializer_list<std::pair<const VarName, Interval>> bindings);
  explicit Box(const std::vector<std::pair<VarName, Interval>>& bindings);

  /// Every variable bound to [-inf, +inf].
  static Box full(const VarSet& vars);
  /// The canonical empty box over `vars`.
  static Box empty_over(const VarSet& vars);

  std::size_t size() const { return values_.size(); }
  const std::vector<VarName>& vars() const { return *scope_; }
  VarSet scope() const;
  bool is_empty() const { return empty_; }

  std::optional<std::size_t> index_of(std::string_view var) const;
  bool has(std::string_view var) const { return index_of(var).has_value(); }
  /// Throws ContractViolation when `var` is not in scope.
  std::size_t require_index(std::string_view var) const;

  const Interval& operator[](std::size_t i) const { return values_[i]; }
  const Interval& at(std::string_view var) const { return values_[require_index(var)]; }
  std::span<const Interval> values() const { return values_; }

  /// Replaces one binding; an empty interval empties the whole box.
  void set(std::size_t i, const Interval& value);
  void set(std::string_view var, const Interval& value) { set(require_index(var), value); }
  /// Intersects one binding with `value`; returns true if the box changed.
  bool narrow(std::size_t i, const Interval& value);
  void make_empty();

  bool same_scope(const Box& other) const;
  /// Componentwise inclusion over a common scope.
  bool subset_of(const Box& other) const;

  bool operator==(const Box& other) const;

 private:
  Box(std::shared_ptr<const std::vector<VarName>> scope, std::vector<Interval> values);

  std::shared_ptr<const std::vector<VarName>> scope_;
  std::vector<Interval> values_;
  bool empty_ = false;

  friend Box project(const Box& b, const VarSet& vars);
  friend Box cylinder(const Box& b, const VarSet& vars);
  friend Box join_boxes(const Box& b0, const Box& b1);
};

/// Restriction to `vars`; requires vars to be a subset of b's scope.
Box project(const Box& b, const VarSet& vars);

/// Union of scopes, shared variables intersected.
Box join_boxes(const Box& b0, const Box& b1);

/// Extension to `vars` (a superset of b's scope) with new variables unbounded.
Box cylinder(const Box& b, const VarSet& vars);

/// Componentwise hull of a nonempty collection of boxes over one scope.
Box box_hull(std::span<const Box> boxes);

/// Information order: `coarse` is below `fine` when every binding of `fine`
/// is a subset of the matching binding of `coarse`.
bool info_leq(const Box& coarse, const Box& fine);

/// "{x=[lo,hi], y=[lo,hi]}" in lexicographic order.
std::string to_string(const Box& b);
/// Same rendering restricted to the listed variables (in the given order).
std::string to_string(const Box& b, std::span<const VarName> vars);
std::ostream& operator<<(std::ostream& os, const Box& b);

}  // namespace icsolve

#endif  // ICSOLVE_BOX_HPP_
