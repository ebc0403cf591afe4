// Shared problem instances and random generators for the test suites.

#ifndef ICSOLVE_TESTS_SUPPORT_FIXTURES_HPP_
#define ICSOLVE_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "icsolve/box.hpp"
#include "icsolve/csp.hpp"
#include "icsolve/interval.hpp"

namespace icsolve::testing {

// The parabola/circle system y = x^2, x^2 + y^2 = 1 as the four primitives
// sq(x,y), sq(y,z), sum(y,z,u), const_1(u), with constraint ids in that order.
Csp parabola_csp(const Box& initial);

// {x:[0,1], y:[0,1], z:[-inf,inf], u:[-inf,inf]}
Box parabola_initial_box();
// Left half: x in [0, 1/2], y, z in [0,1], u = 1.
Box parabola_left_box();
// Right half: x in [1/2, 1], y, z in [0,1], u = 1.
Box parabola_right_box();

// Same four primitives listed in the order sq(x,y), one(u), sum(y,z,u),
// sq(y,z), which is the order of the worked contraction table.
Csp parabola_csp_listed_order(const Box& initial);

inline constexpr const char* kParabolaCircle01 =
    "var x in [0,1];\n"
    "var y in [0,1];\n"
    "constraint y = x^2;\n"
    "constraint x^2 + y^2 = 1;\n";

inline constexpr const char* kParabolaCircle22 =
    "var x in [-2,2];\n"
    "var y in [-2,2];\n"
    "constraint y = x^2;\n"
    "constraint x^2 + y^2 = 1;\n";

// Positive root of x^4 + x^2 = 1 and its square, frozen from the bisection
// oracle at 1e-15 (and cross-checked with 50-digit arithmetic).
inline constexpr double kRootX = 0.7861513777574233;
inline constexpr double kRootY = 0.6180339887498949;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::mt19937_64& gen() { return gen_; }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }
  // Multiple of 1/64 in [lo, hi]; sums and small products of these are exact.
  double dyadic(double lo, double hi);

 private:
  std::mt19937_64 gen_;
};

// Random interval with dyadic or arbitrary bounds, occasionally unbounded
// on one or both sides.
Interval random_interval(Rng& rng, double span = 8.0);

// Interval containing x, widened randomly on each side.
Interval interval_around(Rng& rng, double x, double span = 4.0);

// Random superset of `a`.
Interval widen(Rng& rng, const Interval& a);

// Random expression in the problem grammar over `vars`, nested up to `depth`.
std::string random_expr_text(Rng& rng, int depth, const std::vector<std::string>& vars);

// Source text of a random system of one or two equations over a, b, c.
std::string random_problem_text(Rng& rng);

// Decomposition of a random problem with at most `max_vars` variables
// (auxiliaries included) and at most `max_constraints` primitives.
Csp random_decomposed_csp(Rng& rng, std::size_t max_vars = 6, std::size_t max_constraints = 10);

// Random box over `csp`'s scope nested inside its initial box.
Box random_sub_box(Rng& rng, const Box& outer);

}  // namespace icsolve::testing

#endif  // ICSOLVE_TESTS_SUPPORT_FIXTURES_HPP_
