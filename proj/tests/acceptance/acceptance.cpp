// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails its check or its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "icsolve/contractor.hpp"
#include "icsolve/decompose.hpp"
#include "icsolve/propagation.hpp"
#include "icsolve/search.hpp"
#include "properties.hpp"

using namespace icsolve;
using namespace icsolve::testing;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Verdict()> check;
};

// The double nearest sqrt(3)/2 = 0.86602540378443864676...
constexpr double kHalfSqrt3 = 0.8660254037844386;

Verdict sum_exactness() {
  const auto r = contract_sum(Interval(0, 2), Interval(0, 2), Interval(3, 5));
  std::ostringstream os;
  os << r[0] << " " << r[1] << " " << r[2];
  return {r[0] == Interval(1, 2) && r[1] == Interval(1, 2) && r[2] == Interval(3, 4), os.str()};
}

Verdict first_inference() {
  const auto r = contract_sum(Interval(0, 2), Interval(0, 2), Interval::entire());
  return {r[2] == Interval(0, 4), "z = " + to_string(r[2])};
}

Verdict plateau() {
  const Box start = parabola_initial_box();
  const Csp csp = parabola_csp(start);
  const Box expected{{"x", Interval(0, 1)},
                     {"y", Interval(0, 1)},
                     {"z", Interval(0, 1)},
                     {"u", Interval(1, 1)}};
  const auto out = propagate_roundrobin(csp, start);
  // A further full round over every constraint must change nothing.
  const auto again = propagate_roundrobin(csp, out.fixpoint);
  const bool ok = out.fixpoint == expected && again.effective_steps == 0 &&
                  again.steps == csp.size() && again.fixpoint == expected;
  return {ok, to_string(out.fixpoint)};
}

Verdict left_half_empty() {
  const Box left = parabola_left_box();
  const auto out = propagate_roundrobin(parabola_csp(left), left);
  return {out.status == PropagationStatus::kProvedEmpty,
          std::string(status_name(out.status)) + " after " + std::to_string(out.steps) +
              " applications"};
}

Verdict right_half_trace() {
  const Box right = parabola_right_box();
  const Csp csp = parabola_csp_listed_order(right);
  const auto out = propagate_roundrobin(csp, right, kDefaultMaxRounds, true);
  auto after = [](const TraceRecord& r, const VarName& v) -> const Interval* {
    for (std::size_t k = 0; k < r.args.size(); ++k) {
      if (r.args[k] == v) return &r.after[k];
    }
    return nullptr;
  };
  const double tol40 = std::ldexp(1.0, -40);
  const double b_max = 0.75 + std::ldexp(1.0, -50);
  int stage = 0;
  std::size_t at[3] = {0, 0, 0};
  for (std::size_t i = 0; i < out.trace.size() && stage < 3; ++i) {
    const TraceRecord& r = out.trace[i];
    if (!r.changed) continue;
    const Interval* y = after(r, "y");
    const Interval* z = after(r, "z");
    bool hit = false;
    if (stage == 0) {
      hit = y && *y == Interval(0.25, 1);
    } else if (stage == 1) {
      hit = z && z->lo() == 0 && z->hi() >= 0.75 && z->hi() <= b_max;
    } else {
      hit = y && z && std::abs(y->hi() - kHalfSqrt3) <= tol40 && std::abs(z->lo() - 0.0625) <= tol40;
    }
    if (hit) at[stage++] = i;
  }
  std::ostringstream os;
  os << "checkpoints reached " << stage << "/3";
  if (stage == 3) {
    const TraceRecord& r = out.trace[at[2]];
    os << " at records " << at[0] << ", " << at[1] << ", " << at[2] << "; " << to_text_line(r);
  }
  return {stage == 3, os.str()};
}

Verdict convergence() {
  const Box right = parabola_right_box();
  const auto out = propagate_worklist(parabola_csp(right), right);
  const Interval x = out.fixpoint.at("x");
  const Interval y = out.fixpoint.at("y");
  std::ostringstream os;
  os << "x = " << x << " (width " << width(x) << "), y = " << y;
  return {width(x) <= 1e-12 && x.contains(kRootX) && y.contains(kRootY), os.str()};
}

Verdict two_roots() {
  SolveOptions opt;
  opt.eps = 1e-10;
  const SolveReport r = solve(load_problem(kParabolaCircle22), opt);
  std::ostringstream os;
  os << r.atomic_boxes.size() << " atomic boxes";
  for (const auto& a : r.atomic_boxes) os << "; x = " << a.box.at("x");
  if (r.budget_exceeded || r.atomic_boxes.size() < 2 || r.atomic_boxes.size() > 3) {
    return {false, os.str()};
  }
  const Interval lo = r.atomic_boxes.front().box.at("x");
  const Interval hi = r.atomic_boxes.back().box.at("x");
  bool ok = lo.contains(-kRootX) && hi.contains(kRootX);
  ok = ok && std::abs(midpoint(lo) + midpoint(hi)) <= 1e-10;
  for (const auto& a : r.atomic_boxes) ok = ok && a.box.at("y").contains(kRootY);
  if (r.atomic_boxes.size() == 3) {
    // Only allowed when a split point lands on a root; say which.
    const Interval mid = r.atomic_boxes[1].box.at("x");
    const bool shared = mid.lo() == lo.hi() || mid.lo() == hi.lo() || mid.hi() == lo.lo() ||
                        mid.hi() == hi.lo() || mid.hi() == lo.hi() || mid.lo() == hi.hi();
    os << (shared ? "; extra box from a split point at a root" : "; extra box unexplained");
    ok = ok && shared;
  }
  return {ok, os.str()};
}

Verdict contractor_laws() {
  const ConstraintKind kinds[] = {ConstraintKind::kSum, ConstraintKind::kMul, ConstraintKind::kSq,
                                  ConstraintKind::kConst};
  std::ostringstream os;
  for (const ConstraintKind kind : kinds) {
    LawCounts n;
    const auto v = contractor_law_violation(kind, 800 + static_cast<std::uint64_t>(kind), 1000,
                                            10000, &n);
    if (v) return {false, std::string(kind_name(kind)) + ": " + *v};
    os << kind_name(kind) << " " << n.instances << "/" << n.points << ", ";
  }
  const Box right = parabola_right_box();
  const Csp csp = parabola_csp(right);
  const Box g1 = big_gamma(csp, right);
  const Box g2 = big_gamma(csp, g1);
  const bool witness = !(g2 == g1) && !(g1 == right) && g1.at("y").subset_of(Interval(0.25, 1));
  os << "gamma(gamma(P)) " << (witness ? "!=" : "==") << " gamma(P) on the right half-box";
  return {witness, os.str()};
}

Verdict confluence() {
  std::size_t skipped = 0;
  const auto v = confluence_violation(900, 200, &skipped);
  if (v) return {false, *v};
  return {true, "200 problems, 3 orders, identical fixpoints (" + std::to_string(skipped) +
                    " drawn problems skipped: no fixpoint within " +
                    std::to_string(kConfluenceRounds) + " rounds)"};
}

Verdict oracle_agreement_suite() {
  std::size_t points = 0;
  std::size_t boxes = 0;
  std::ostringstream os;
  const auto single = oracle_agreement(load_problem(kParabolaCircle01), 1e-10);
  bool ok = !single.diverged && single.complete && single.outside_enclosures == 0 && single.inside_pruned == 0;
  os << "parabola-circle: " << single.oracle_points << " grid points, " << single.enclosures
     << " enclosures";
  Rng rng(1000);
  int done = 0;
  int skipped = 0;
  while (done < 20 && skipped <= 20) {
    const auto a = oracle_agreement(load_problem(grid_aligned_system(rng)), 1e-10);
    if (a.diverged) {
      ++skipped;
      continue;
    }
    ++done;
    ok = ok && a.complete && a.oracle_points > 0 && a.outside_enclosures == 0 &&
         a.inside_pruned == 0;
    points += a.oracle_points;
    boxes += a.enclosures;
  }
  ok = ok && done == 20;
  os << "; " << done << " random systems: " << points << " grid points, " << boxes
     << " enclosures (" << skipped << " drawn systems skipped: no propagation fixpoint)";
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "sum contractor exactness", 1e-3, sum_exactness},
      {2, "first inference z in [0,4]", 1e-3, first_inference},
      {3, "initial propagation plateau", 1e-2, plateau},
      {4, "left half-box proved empty", 1e-2, left_half_empty},
      {5, "right half-box trace checkpoints", 1e-2, right_half_trace},
      {6, "convergence on the right half-box", 0.1, convergence},
      {7, "full solve finds two roots", 1.0, two_roots},
      {8, "contractor law properties", 30.0, contractor_laws},
      {9, "confluence of propagation orders", 30.0, confluence},
      {10, "oracle agreement", 60.0, oracle_agreement_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = v.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%.3f ms, limit %.0f ms%s): %s\n", pass ? "PASS" : "FAIL",
                c.number, c.name.c_str(), secs * 1e3, c.limit_seconds * 1e3,
                in_time ? "" : ", TOO SLOW", v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
