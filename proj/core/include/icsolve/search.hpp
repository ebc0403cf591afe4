// Branch-and-prune: propagation interleaved with bisection.

#ifndef ICSOLVE_SEARCH_HPP_
#define ICSOLVE_SEARCH_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icsolve/box.hpp"
#include "icsolve/csp.hpp"
#include "icsolve/propagation.hpp"

namespace icsolve {

/// A leaf of the subdivision tree that propagation could not refute and
/// that is too small to split further. `path` lists the split decisions from
/// the root, '0' for a left half and '1' for a right half.
struct AtomicBox {
  Box box;
  std::string path;
};

enum class SolveStatus { kInfeasible, kEnclosures };

struct SolveStats {
  std::size_t contractor_applications = 0;
  std::size_t max_depth = 0;
  std::size_t nodes = 0;  // boxes propagated
  double wall_seconds = 0.0;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kInfeasible;
  std::vector<AtomicBox> atomic_boxes;  // in path order
  std::size_t pruned_count = 0;
  std::vector<Box> pruned_boxes;  // filled when SolveOptions::record_pruned
  /// Set when the box budget stopped the search; the listed boxes then
  /// cover only the explored part of the tree.
  bool budget_exceeded = false;
  SolveStats stats;
};

struct SolveOptions {
  double eps = 1e-10;
  std::size_t max_boxes = 4096;
  PropagationOrder order{};
  bool record_pruned = false;
  /// Receives every contractor application, tagged with the node's path.
  std::function<void(const std::string& path, const TraceRecord&)> on_trace;
};

/// Splits the binding of `var` at its midpoint into closed halves that share
/// the midpoint. Throws ContractViolation if the binding is not splittable.
std::pair<Box, Box> split(const Box& p, const VarName& var);

/// Widest user variable whose width exceeds eps and which can still be
/// split; ties go to the lexicographically smallest name.
std::optional<VarName> pick_split_var(const Box& p, const VarSet& user_vars, double eps);

/// Depth-first, left-first search from the CSP's initial box. Every solution
/// inside the initial box lies in one of the reported atomic boxes.
SolveReport solve(const Csp& csp, const SolveOptions& options = {});

}  // namespace icsolve

#endif  // ICSOLVE_SEARCH_HPP_
