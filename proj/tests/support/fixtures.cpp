#include "fixtures.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "icsolve/constraint.hpp"
#include "icsolve/decompose.hpp"

namespace icsolve::testing {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Csp parabola_csp_with(const Box& initial, bool table_order) {
  using C = PrimitiveConstraint;
  std::vector<C> cs;
  if (table_order) {
    cs = {C::sq("x", "y"), C::constant(1, "u"), C::sum("y", "z", "u"), C::sq("y", "z")};
  } else {
    cs = {C::sq("x", "y"), C::sq("y", "z"), C::sum("y", "z", "u"), C::constant(1, "u")};
  }
  return Csp(std::move(cs), initial, {"x", "y"});
}

std::string random_bound_text(Rng& rng) {
  const double lo = rng.dyadic(-4, 3);
  const double hi = lo + rng.dyadic(0.25, 4);
  std::ostringstream os;
  os << "[" << (rng.chance(0.1) ? std::string("-inf") : std::to_string(lo)) << ", "
     << (rng.chance(0.1) ? std::string("inf") : std::to_string(hi)) << "]";
  return os.str();
}

}  // namespace

Csp parabola_csp(const Box& initial) { return parabola_csp_with(initial, false); }
Csp parabola_csp_listed_order(const Box& initial) { return parabola_csp_with(initial, true); }

Box parabola_initial_box() {
  return Box{{"x", Interval(0, 1)},
             {"y", Interval(0, 1)},
             {"z", Interval::entire()},
             {"u", Interval::entire()}};
}

Box parabola_left_box() {
  return Box{{"x", Interval(0, 0.5)},
             {"y", Interval(0, 1)},
             {"z", Interval(0, 1)},
             {"u", Interval(1, 1)}};
}

Box parabola_right_box() {
  return Box{{"x", Interval(0.5, 1)},
             {"y", Interval(0, 1)},
             {"z", Interval(0, 1)},
             {"u", Interval(1, 1)}};
}

double Rng::dyadic(double lo, double hi) {
  const auto a = static_cast<long>(std::ceil(lo * 64));
  const auto b = static_cast<long>(std::floor(hi * 64));
  return static_cast<double>(std::uniform_int_distribution<long>(a, b)(gen_)) / 64.0;
}

Interval random_interval(Rng& rng, double span) {
  double lo;
  double hi;
  if (rng.chance(0.5)) {
    lo = rng.dyadic(-span, span);
    hi = lo + rng.dyadic(0, span);
  } else {
    lo = rng.uniform(-span, span);
    hi = lo + rng.uniform(0, span);
  }
  if (rng.chance(0.05)) lo = -kInf;
  if (rng.chance(0.05)) hi = kInf;
  if (rng.chance(0.05)) hi = lo == -kInf ? 0.0 : lo;  // degenerate point
  return Interval(lo, hi);
}

Interval interval_around(Rng& rng, double x, double span) {
  double lo = x - (rng.chance(0.5) ? rng.dyadic(0, span) : rng.uniform(0, span));
  double hi = x + (rng.chance(0.5) ? rng.dyadic(0, span) : rng.uniform(0, span));
  if (rng.chance(0.1)) lo = x;
  if (rng.chance(0.1)) hi = x;
  if (rng.chance(0.05)) lo = -kInf;
  if (rng.chance(0.05)) hi = kInf;
  // Subtraction rounds to nearest; clamp so x stays inside.
  return Interval(std::min(lo, x), std::max(hi, x));
}

Interval widen(Rng& rng, const Interval& a) {
  if (a.is_empty()) return random_interval(rng);
  double lo = a.lo();
  double hi = a.hi();
  if (rng.chance(0.7) && std::isfinite(lo)) lo = std::min(lo, lo - rng.uniform(0, 2));
  if (rng.chance(0.7) && std::isfinite(hi)) hi = std::max(hi, hi + rng.uniform(0, 2));
  if (rng.chance(0.05)) lo = -kInf;
  if (rng.chance(0.05)) hi = kInf;
  return Interval(lo, hi);
}

std::string random_expr_text(Rng& rng, int depth, const std::vector<std::string>& vars) {
  static const char* const kConsts[] = {"0", "1", "2", "3", "0.5", "0.25", "0.1"};
  if (depth == 0 || rng.chance(0.3)) {
    const int last = static_cast<int>(vars.size()) - 1;
    if (rng.chance(0.75)) return vars[static_cast<std::size_t>(rng.uniform_int(0, last))];
    return kConsts[rng.uniform_int(0, 6)];
  }
  const std::string l = random_expr_text(rng, depth - 1, vars);
  switch (rng.uniform_int(0, 5)) {
    case 0:
      return "(" + l + " + " + random_expr_text(rng, depth - 1, vars) + ")";
    case 1:
      return "(" + l + " - " + random_expr_text(rng, depth - 1, vars) + ")";
    case 2:
      return "(" + l + " * " + random_expr_text(rng, depth - 1, vars) + ")";
    case 3:
      return "(" + l + ")^2";
    case 4:
      return "(" + l + ")^3";
    default:
      return "-(" + l + ")";
  }
}

std::string random_problem_text(Rng& rng) {
  std::ostringstream os;
  for (const char* v : {"a", "b", "c"}) os << "var " << v << " in " << random_bound_text(rng) << ";\n";
  const int equations = rng.uniform_int(1, 2);
  for (int i = 0; i < equations; ++i) {
    os << "constraint " << random_expr_text(rng, 2, {"a", "b", "c"}) << " = "
       << random_expr_text(rng, 1, {"a", "b", "c"}) << ";\n";
  }
  return os.str();
}

Csp random_decomposed_csp(Rng& rng, std::size_t max_vars, std::size_t max_constraints) {
  for (;;) {
    Csp csp = load_problem(random_problem_text(rng));
    if (csp.size() >= 1 && csp.size() <= max_constraints &&
        csp.initial_box().size() <= max_vars) {
      return csp;
    }
  }
}

Box random_sub_box(Rng& rng, const Box& outer) {
  Box b = outer;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const Interval& x = b[i];
    if (rng.chance(0.4) || x.is_empty()) continue;
    double lo = x.lo();
    double hi = x.hi();
    if (!std::isfinite(lo)) lo = std::isfinite(hi) ? hi - rng.uniform(0, 8) : rng.uniform(-8, 0);
    if (!std::isfinite(hi)) hi = lo + rng.uniform(0, 8);
    const double a = rng.uniform(lo, hi);
    const double c = rng.uniform(a, hi);
    b.set(i, intersect(x, Interval(a, c)));
  }
  return b;
}

}  // namespace icsolve::testing
