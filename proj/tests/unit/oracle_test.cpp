#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "icsolve/error.hpp"
#include "icsolve/oracle.hpp"
#include "icsolve/parser.hpp"

using namespace icsolve;

namespace {

Problem parse(const char* text) { return parse_problem(text); }

}  // namespace

TEST_CASE("evaluate") {
  const Problem p = parse("var x; var y; constraint (x - y)^3 * -2 + 0.5 = x;");
  const Expr& lhs = *p.equations[0].lhs;
  CHECK(oracle::evaluate(lhs, {{"x", 3}, {"y", 1}}) == -15.5);
  CHECK_THROWS_AS(oracle::evaluate(lhs, {{"x", 3}}), std::out_of_range);
  CHECK(oracle::satisfies(p.equations, {{"x", 0.5}, {"y", 0.5}}, 1e-12));
  CHECK_FALSE(oracle::satisfies(p.equations, {{"x", 1}, {"y", 0}}, 1e-3));
}

TEST_CASE("grid_solutions") {
  // At the default tolerance no grid point is close enough to the
  // irrational root; a coarse tolerance shows the cluster around it.
  const Problem pc = parse(icsolve::testing::kParabolaCircle01);
  const Box unit{{"x", Interval(0, 1)}, {"y", Interval(0, 1)}};
  const auto pts = oracle::grid_solutions(pc.equations, unit, {401, 1e-2});
  REQUIRE_FALSE(pts.empty());
  for (const auto& p : pts) {
    CHECK(std::abs(p.at("x") - 0.786) < 0.02);
    CHECK(std::abs(p.at("y") - 0.618) < 0.02);
  }

  const Problem neg = parse("var x in [-2,2]; var y in [-3,-1]; constraint y = x^2;");
  CHECK(oracle::grid_solutions(neg.equations, Box{{"x", Interval(-2, 2)}, {"y", Interval(-3, -1)}})
            .empty());

  const Problem same = parse("var x in [0,1]; constraint x = x;");
  CHECK(oracle::grid_solutions(same.equations, Box{{"x", Interval(0, 1)}}, {11, 1e-7}).size() ==
        11);

  // Grid points include both endpoints and hit exact grid-aligned roots.
  const Problem lin = parse("var x in [-2,2]; constraint 4*x = 3;");
  const auto root = oracle::grid_solutions(lin.equations, Box{{"x", Interval(-2, 2)}});
  REQUIRE(root.size() == 1);
  CHECK(root[0].at("x") == 0.75);

  CHECK_THROWS_AS(oracle::grid_solutions(same.equations, Box{{"x", Interval(0, INFINITY)}}),
                  ContractViolation);
  CHECK_THROWS_AS(oracle::grid_solutions(same.equations, Box{{"x", Interval(0, 1)}}, {1, 1e-7}),
                  ContractViolation);
}

TEST_CASE("bisect_root") {
  const Problem quartic = parse("var x; constraint x^4 + x^2 - 1 = 0;");
  const double x = oracle::bisect_root(*quartic.equations[0].lhs, "x", 0.5, 1, 1e-15);
  CHECK(x == icsolve::testing::kRootX);
  CHECK(oracle::bisect_root([](double t) { return t - 0.5; }, 0, 1, 1e-15) == 0.5);

  // Second route: x^2 = (sqrt(5) - 1) / 2.
  const double y = (std::sqrt(5.0) - 1) / 2;
  CHECK(y == icsolve::testing::kRootY);
  const double x2 = oracle::bisect_root([&](double t) { return t * t - y; }, 0, 1, 1e-15);
  CHECK(std::abs(x2 - icsolve::testing::kRootX) <= 1e-12);

  CHECK_THROWS_AS(oracle::bisect_root([](double t) { return t * t + 1; }, -1, 1, 1e-9),
                  ContractViolation);
}
