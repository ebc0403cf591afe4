// Brute-force reference checks, independent of the interval machinery.
//
// Everything here evaluates source expression trees in plain
// round-to-nearest double arithmetic. Nothing from the contractor or
// propagation code is used.

#ifndef ICSOLVE_ORACLE_HPP_
#define ICSOLVE_ORACLE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "icsolve/box.hpp"
#include "icsolve/expr.hpp"

namespace icsolve::oracle {

struct GridSpec {
  std::size_t n = 401;  // samples per variable, >= 2
  double tol = 1e-7;    // residual tolerance, relative to 1 + |rhs|
};

using Point = std::map<VarName, double>;

/// Value of `e` at `point`; constants use the midpoint of their interval.
/// Throws std::out_of_range for a variable missing from `point`.
double evaluate(const Expr& e, const Point& point);

/// Whether every equation holds at `point` within tol * (1 + |rhs|).
bool satisfies(const std::vector<Equation>& equations, const Point& point, double tol);

/// Grid points of `box` (n evenly spaced samples per variable, endpoints
/// included) at which every equation holds within the tolerance.
/// Throws ContractViolation if a binding is unbounded or the spec is invalid.
std::vector<Point> grid_solutions(const std::vector<Equation>& equations, const Box& box,
                                  const GridSpec& spec = {});

/// A point within `tol` of a sign change of f in [lo, hi]: of the two
/// adjacent doubles bracketing the sign change, the one with the smaller
/// |f|. Requires lo < hi, tol > 0 and f(lo) * f(hi) < 0 (ContractViolation
/// otherwise).
double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol);

/// bisect_root on the expression `f` viewed as a function of `var`.
double bisect_root(const Expr& f, const VarName& var, double lo, double hi, double tol);

}  // namespace icsolve::oracle

#endif  // ICSOLVE_ORACLE_HPP_
