#include "icsolve/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "icsolve/error.hpp"

namespace icsolve::oracle {

double evaluate(const Expr& e, const Point& point) {
  switch (e.op) {
    case Expr::Op::kVar:
      return point.at(e.name);
    case Expr::Op::kConst:
      return e.value.is_point() ? e.value.lo() : 0.5 * (e.value.lo() + e.value.hi());
    case Expr::Op::kAdd:
      return evaluate(*e.lhs, point) + evaluate(*e.rhs, point);
    case Expr::Op::kSub:
      return evaluate(*e.lhs, point) - evaluate(*e.rhs, point);
    case Expr::Op::kMul:
      return evaluate(*e.lhs, point) * evaluate(*e.rhs, point);
    case Expr::Op::kNeg:
      return -evaluate(*e.lhs, point);
    case Expr::Op::kPow:
      return std::pow(evaluate(*e.lhs, point), e.exponent);
  }
  throw std::logic_error("unknown expression node");
}

bool satisfies(const std::vector<Equation>& equations, const Point& point, double tol) {
  for (const auto& eq : equations) {
    const double lhs = evaluate(*eq.lhs, point);
    const double rhs = evaluate(*eq.rhs, point);
    if (!(std::fabs(lhs - rhs) <= tol * (1 + std::fabs(rhs)))) return false;
  }
  return true;
}

std::vector<Point> grid_solutions(const std::vector<Equation>& equations, const Box& box,
                                  const GridSpec& spec) {
  if (spec.n < 2) throw ContractViolation("grid needs at least two samples per variable");
  if (!(spec.tol > 0)) throw ContractViolation("grid tolerance must be positive");
  std::vector<Point> out;
  if (box.is_empty()) return out;
  const auto& vars = box.vars();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!std::isfinite(box[i].lo()) || !std::isfinite(box[i].hi())) {
      throw ContractViolation("grid over an unbounded range for " + vars[i]);
    }
  }
  std::vector<std::size_t> counter(vars.size(), 0);
  Point p;
  const double steps = static_cast<double>(spec.n - 1);
  for (;;) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const double lo = box[i].lo();
      const double hi = box[i].hi();
      p[vars[i]] = counter[i] + 1 == spec.n ? hi : lo + (hi - lo) * (counter[i] / steps);
    }
    if (satisfies(equations, p, spec.tol)) out.push_back(p);
    std::size_t k = 0;
    while (k < vars.size() && ++counter[k] == spec.n) counter[k++] = 0;
    if (k == vars.size()) break;
  }
  return out;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(tol > 0) || !(lo < hi)) throw ContractViolation("bisect_root: need lo < hi and tol > 0");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if (!(flo * fhi < 0)) throw ContractViolation("bisect_root: no sign change on the bracket");
  // Halve down to adjacent doubles, which is within tol for any tol of at
  // least one ulp, then keep the endpoint with the smaller residual.
  for (;;) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return std::abs(fhi) < std::abs(flo) ? hi : lo;
}

double bisect_root(const Expr& f, const VarName& var, double lo, double hi, double tol) {
  return bisect_root([&](double x) { return evaluate(f, Point{{var, x}}); }, lo, hi, tol);
}

}  // namespace icsolve::oracle
