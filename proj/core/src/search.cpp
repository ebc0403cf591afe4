#include "icsolve/search.hpp"

#include <chrono>

#include "icsolve/error.hpp"

namespace icsolve {

std::pair<Box, Box> split(const Box& p, const VarName& var) {
  const std::size_t i = p.require_index(var);
  const Interval& x = p[i];
  if (!is_splittable(x)) throw ContractViolation("split: binding of " + var + " is not splittable");
  const double mid = midpoint(x);
  Box left = p;
  Box right = p;
  left.set(i, Interval(x.lo(), mid));
  right.set(i, Interval(mid, x.hi()));
  return {std::move(left), std::move(right)};
}

std::optional<VarName> pick_split_var(const Box& p, const VarSet& user_vars, double eps) {
  std::optional<VarName> best;
  double best_width = 0;
  for (const auto& v : user_vars) {  // lexicographic, so '>' keeps the first tie
    const Interval& x = p.at(v);
    const double w = width(x);
    if (w > eps && is_splittable(x) && (!best || w > best_width)) {
      best = v;
      best_width = w;
    }
  }
  return best;
}

SolveReport solve(const Csp& csp, const SolveOptions& options) {
  if (!(options.eps > 0)) throw ContractViolation("solve: eps must be positive");
  if (options.max_boxes < 1) throw ContractViolation("solve: max_boxes must be at least 1");
  const auto start = std::chrono::steady_clock::now();

  SolveReport report;
  struct Pending {
    Box box;
    std::string path;
  };
  std::vector<Pending> stack;
  stack.push_back({csp.initial_box(), ""});
  while (!stack.empty()) {
    Pending node = std::move(stack.back());
    stack.pop_back();
    report.stats.max_depth = std::max(report.stats.max_depth, node.path.size());
    ++report.stats.nodes;

    PropagationOutcome out =
        propagate(csp, node.box, options.order, static_cast<bool>(options.on_trace));
    for (const auto& rec : out.trace) options.on_trace(node.path, rec);
    report.stats.contractor_applications += out.steps;
    if (out.status == PropagationStatus::kProvedEmpty) {
      ++report.pruned_count;
      if (options.record_pruned) report.pruned_boxes.push_back(std::move(node.box));
      continue;
    }
    const auto var = pick_split_var(out.fixpoint, csp.user_vars(), options.eps);
    if (!var) {
      if (report.atomic_boxes.size() == options.max_boxes) {
        report.budget_exceeded = true;
        break;
      }
      report.atomic_boxes.push_back({std::move(out.fixpoint), std::move(node.path)});
      continue;
    }
    auto [left, right] = split(out.fixpoint, *var);
    stack.push_back({std::move(right), node.path + "1"});
    stack.push_back({std::move(left), node.path + "0"});
  }

  report.status = report.atomic_boxes.empty() ? SolveStatus::kInfeasible : SolveStatus::kEnclosures;
  report.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace icsolve
