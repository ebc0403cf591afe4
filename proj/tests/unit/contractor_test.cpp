#include <doctest.h>

#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "fixtures.hpp"
#include "properties.hpp"
#include "icsolve/contractor.hpp"
#include "icsolve/error.hpp"
#include "icsolve/propagation.hpp"

using namespace icsolve;
using icsolve::testing::Rng;
using C = PrimitiveConstraint;

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST_CASE("contract_sum examples") {
  CHECK(contract_sum(Interval(0, 2), Interval(0, 2), Interval(3, 5)) ==
        std::array{Interval(1, 2), Interval(1, 2), Interval(3, 4)});
  CHECK(contract_sum(Interval(0, 1), Interval(0, 1), Interval(1, 1)) ==
        std::array{Interval(0, 1), Interval(0, 1), Interval(1, 1)});
  CHECK(contract_sum(Interval(0, 2), Interval(0, 2), Interval::entire()) ==
        std::array{Interval(0, 2), Interval(0, 2), Interval(0, 4)});
  const auto e = contract_sum(Interval(0, 1), Interval(0, 1), Interval(5, 6));
  CHECK(e[0].is_empty());
  CHECK(e[1].is_empty());
  CHECK(e[2].is_empty());
}

TEST_CASE("contract_sq examples") {
  CHECK(contract_sq(Interval(0.5, 1), Interval(0, 1)) ==
        std::array{Interval(0.5, 1), Interval(0.25, 1)});
  const auto r = contract_sq(Interval(0.25, 1), Interval(0.0625, 0.75));
  CHECK(r[0] == Interval(0.25, 0.8660254037844387));
  CHECK(r[1] == Interval(0.0625, 0.75));
  CHECK(contract_sq(Interval::entire(), Interval::entire()) ==
        std::array{Interval::entire(), Interval(0, kInf)});
  // Both square-root branches survive when x spans zero.
  CHECK(contract_sq(Interval(-3, 3), Interval(4, 4)) ==
        std::array{Interval(-2, 2), Interval(4, 4)});
  CHECK(contract_sq(Interval(-3, 1), Interval(4, 9)) ==
        std::array{Interval(-3, -2), Interval(4, 9)});
  CHECK(contract_sq(Interval(0, 1), Interval(-2, -1))[0].is_empty());
}

TEST_CASE("contract_mul examples") {
  CHECK(contract_mul(Interval(1, 2), Interval(1, 2), Interval::entire()) ==
        std::array{Interval(1, 2), Interval(1, 2), Interval(1, 4)});
  const auto e = contract_mul(Interval(-1, 1), Interval(-1, 1), Interval(4, 5));
  CHECK(e[0].is_empty());
  CHECK(e[1].is_empty());
  CHECK(e[2].is_empty());
  CHECK(contract_mul(Interval(0, 0), Interval::entire(), Interval(0, 0)) ==
        std::array{Interval(0, 0), Interval::entire(), Interval(0, 0)});
  // Divisor spanning zero: z/y = [1,2]/[-1,1] splits into two rays, each
  // cut by x before the hull is taken.
  CHECK(contract_mul(Interval(-10, 0.5), Interval(-1, 1), Interval(1, 2))[0] ==
        Interval(-10, -1));
}

TEST_CASE("contract_const examples") {
  CHECK(contract_const(1, Interval::entire()) == Interval(1, 1));
  CHECK(contract_const(1, Interval(0, 0.3125)).is_empty());
  CHECK(contract_const(1, Interval(1, 1)) == Interval(1, 1));
}

TEST_CASE("apply_lifted examples") {
  const C sq_xy = C::sq("x", "y");
  Box expected = icsolve::testing::parabola_right_box();
  expected.set("y", Interval(0.25, 1));
  CHECK(apply_lifted(sq_xy, icsolve::testing::parabola_right_box()) == expected);
  CHECK(apply_lifted(sq_xy, Box::empty_over({"x", "y"})).is_empty());
  CHECK(apply_lifted(C::sq("x", "x"), Box{{"x", Interval(-5, 5)}}) ==
        Box{{"x", Interval(0, 1)}});
  CHECK_THROWS_AS(apply_lifted(sq_xy, Box{{"x", Interval(0, 1)}}), ContractViolation);
}

TEST_CASE("repeated arguments use the diagonal relation") {
  CHECK(apply_lifted(C::mul("x", "x", "x"), Box{{"x", Interval(-5, 5)}}) ==
        Box{{"x", Interval(-1, 1)}});
  CHECK(apply_lifted(C::mul("x", "x", "x"), Box{{"x", Interval(0.5, 5)}}) ==
        Box{{"x", Interval(1, 1)}});
  CHECK(apply_lifted(C::sum("x", "x", "z"), Box{{"x", Interval(0, 1)}, {"z", Interval(1, 5)}}) ==
        Box{{"x", Interval(0.5, 1)}, {"z", Interval(1, 2)}});
  CHECK(apply_lifted(C::sum("x", "y", "x"), Box{{"x", Interval(0, 1)}, {"y", Interval(-1, 5)}}) ==
        Box{{"x", Interval(0, 1)}, {"y", Interval(0, 0)}});
  CHECK(apply_lifted(C::mul("x", "y", "x"), Box{{"x", Interval(1, 2)}, {"y", Interval(-1, 5)}}) ==
        Box{{"x", Interval(1, 2)}, {"y", Interval(1, 1)}});
  CHECK(apply_lifted(C::mul("x", "x", "z"), Box{{"x", Interval(-3, 1)}, {"z", Interval(4, 9)}}) ==
        Box{{"x", Interval(-3, -2)}, {"z", Interval(4, 9)}});
}

TEST_CASE("apply_in_place reports changed positions") {
  Box b{{"x", Interval(0, 2)}, {"y", Interval(0, 2)}, {"z", Interval(3, 5)}};
  const std::array<std::size_t, 3> idx{0, 1, 2};
  CHECK(apply_in_place(C::sum("x", "y", "z"), idx, b) == 0b111);
  CHECK(apply_in_place(C::sum("x", "y", "z"), idx, b) == 0);
  Box c{{"x", Interval(0, 2)}, {"y", Interval(0, 2)}, {"z", Interval(0, 10)}};
  CHECK(apply_in_place(C::sum("x", "y", "z"), idx, c) == 0b100);
}

TEST_CASE("big_gamma examples") {
  using icsolve::testing::parabola_csp;
  const Box right = icsolve::testing::parabola_right_box();
  const Csp csp = parabola_csp(right);
  const Box g1 = big_gamma(csp, right);
  CHECK(g1.subset_of(right));
  CHECK(g1 != right);
  CHECK(g1.at("y").subset_of(Interval(0.25, 1)));
  CHECK(big_gamma(csp, Box::empty_over(csp.variables())).is_empty());

  const Box fix = propagate_worklist(csp, right).fixpoint;
  CHECK(big_gamma(csp, fix) == fix);
}

TEST_CASE("big_gamma is not idempotent on the right half-box") {
  const Box right = icsolve::testing::parabola_right_box();
  const Csp csp = icsolve::testing::parabola_csp(right);
  const Box g1 = big_gamma(csp, right);
  const Box g2 = big_gamma(csp, g1);
  CHECK(g2 != g1);
  CHECK(g2.subset_of(g1));
}

TEST_CASE("property: contractor laws for every kind") {
  const ConstraintKind kinds[] = {ConstraintKind::kSum, ConstraintKind::kMul, ConstraintKind::kSq,
                                  ConstraintKind::kConst};
  for (const ConstraintKind kind : kinds) {
    icsolve::testing::LawCounts n;
    const auto violation = icsolve::testing::contractor_law_violation(
        kind, 31 + static_cast<std::uint64_t>(kind), 2000, 10000, &n);
    INFO(kind_name(kind));
    CHECK_MESSAGE(!violation, violation.value_or(""));
    CHECK(n.instances == 2000);
    CHECK(n.points == 10000);
  }
}

TEST_CASE("property: big_gamma is contracting, monotone and correct") {
  Rng rng(35);
  for (int i = 0; i < 300; ++i) {
    const Csp csp = icsolve::testing::random_decomposed_csp(rng);
    const Box p = icsolve::testing::random_sub_box(rng, csp.initial_box());
    const Box g = big_gamma(csp, p);
    REQUIRE(g.subset_of(p));
    REQUIRE(g.subset_of(big_gamma(csp, csp.initial_box())));
    REQUIRE(big_gamma(csp, g).subset_of(g));
  }
}

TEST_CASE("property: sum contraction is optimal at integer bounds") {
  Rng rng(36);
  for (int i = 0; i < 2000; ++i) {
    std::array<Interval, 3> in;
    for (auto& a : in) {
      const int lo = rng.uniform_int(-6, 6);
      a = Interval(lo, lo + rng.uniform_int(0, 6));
    }
    // Brute force over the integer points of x and y.
    std::optional<std::array<Interval, 3>> best;
    for (int x = static_cast<int>(in[0].lo()); x <= in[0].hi(); ++x) {
      for (int y = static_cast<int>(in[1].lo()); y <= in[1].hi(); ++y) {
        if (!in[2].contains(x + y)) continue;
        const std::array<Interval, 3> pt{Interval::point(x), Interval::point(y),
                                         Interval::point(x + y)};
        if (!best) {
          best = pt;
        } else {
          for (int k = 0; k < 3; ++k) (*best)[k] = hull((*best)[k], pt[k]);
        }
      }
    }
    const auto got = contract_sum(in[0], in[1], in[2]);
    INFO(in[0], " ", in[1], " ", in[2]);
    if (best) {
      REQUIRE(got == *best);
    } else {
      REQUIRE(got[0].is_empty());
    }
  }
}
