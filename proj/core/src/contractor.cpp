#include "icsolve/contractor.hpp"

#include <cmath>
#include <limits>

#include "icsolve/error.hpp"
#include "icsolve/rounding.hpp"

namespace icsolve {
namespace {

template <std::size_t N>
bool any_empty(const std::array<Interval, N>& v) {
  for (const auto& i : v) {
    if (i.is_empty()) return true;
  }
  return false;
}

template <std::size_t N>
std::array<Interval, N> all_empty() {
  std::array<Interval, N> out;
  out.fill(Interval::empty());
  return out;
}

// Runs `pass` until it stops changing its input.
template <std::size_t N, typename Pass>
std::array<Interval, N> to_fixpoint(std::array<Interval, N> cur, Pass pass) {
  if (any_empty(cur)) return all_empty<N>();
  for (;;) {
    auto next = pass(cur);
    if (any_empty(next)) return all_empty<N>();
    if (next == cur) return cur;
    cur = next;
  }
}

// z / [c, d] for 0 <= c <= d, where c == 0 stands for an open endpoint 0+.
Interval quotient_by_positive(const Interval& z, double c, double d) {
  const double lo = z.lo() >= 0 ? rounding::div_down(z.lo(), d) : rounding::div_down(z.lo(), c);
  const double hi = z.hi() >= 0 ? rounding::div_up(z.hi(), c) : rounding::div_up(z.hi(), d);
  return Interval(lo, hi);
}

// x narrowed to {q in x : q * y0 = z0 for some y0 in y, z0 in z}. When y
// straddles 0 the quotient set has two branches; each is cut by x before
// taking the hull.
Interval narrow_by_quotient(const Interval& x, const Interval& z, const Interval& y) {
  if (x.is_empty() || y.is_empty() || z.is_empty()) return Interval::empty();
  if (y.contains(0.0) && z.contains(0.0)) return x;
  Interval out = Interval::empty();
  if (y.hi() > 0) {
    const Interval q = quotient_by_positive(z, std::max(y.lo(), 0.0), y.hi());
    out = hull(out, intersect(x, q));
  }
  if (y.lo() < 0) {
    // z / [c, d] with d <= 0 is -(z / [-d, -c]).
    const Interval q = neg(quotient_by_positive(z, -std::min(y.hi(), 0.0), -y.lo()));
    out = hull(out, intersect(x, q));
  }
  return out;
}

// x narrowed to the square roots (both signs) of y.
Interval narrow_by_sqrt(const Interval& x, const Interval& y) {
  const Interval root = sqrt_outer(y);
  if (root.is_empty()) return root;
  return hull(intersect(x, root), intersect(x, neg(root)));
}

// Hull of the members of `x` among a finite set of reals.
Interval restrict_to_points(const Interval& x, std::initializer_list<double> points) {
  Interval out = Interval::empty();
  for (double p : points) {
    if (x.contains(p)) out = hull(out, Interval::point(p));
  }
  return out;
}

const Interval kZero = Interval::point(0.0);
const Interval kOne = Interval::point(1.0);
const Interval kHalf = Interval::point(0.5);

}  // namespace

std::array<Interval, 3> contract_sum(const Interval& x, const Interval& y, const Interval& z) {
  return to_fixpoint<3>({x, y, z}, [](const std::array<Interval, 3>& v) {
    const auto& [a, b, c] = v;
    return std::array<Interval, 3>{
        intersect(a, sub_outward(c, b)),
        intersect(b, sub_outward(c, a)),
        intersect(c, add_outward(a, b)),
    };
  });
}

std::array<Interval, 3> contract_mul(const Interval& x, const Interval& y, const Interval& z) {
  return to_fixpoint<3>({x, y, z}, [](const std::array<Interval, 3>& v) {
    const auto& [a, b, c] = v;
    const Interval c1 = intersect(c, mul_outward(a, b));
    if (c1.is_empty()) return all_empty<3>();
    const Interval a1 = narrow_by_quotient(a, c1, b);
    if (a1.is_empty()) return all_empty<3>();
    const Interval b1 = narrow_by_quotient(b, c1, a1);
    return std::array<Interval, 3>{a1, b1, c1};
  });
}

std::array<Interval, 2> contract_sq(const Interval& x, const Interval& y) {
  return to_fixpoint<2>({x, y}, [](const std::array<Interval, 2>& v) {
    const auto& [a, b] = v;
    const Interval b1 = intersect(b, sq_outward(a));
    if (b1.is_empty()) return all_empty<2>();
    return std::array<Interval, 2>{narrow_by_sqrt(a, b1), b1};
  });
}

Interval contract_const(double c, const Interval& x) { return intersect(x, Interval::point(c)); }

namespace {

// Contractors for the diagonal relations obtained when arguments repeat.
// Each is the exact hull of the (finite or linear) solution set.

// x + x = z.
std::array<Interval, 2> contract_double(const Interval& x, const Interval& z) {
  return to_fixpoint<2>({x, z}, [](const std::array<Interval, 2>& v) {
    const Interval z1 = intersect(v[1], add_outward(v[0], v[0]));
    return std::array<Interval, 2>{intersect(v[0], mul_outward(z1, kHalf)), z1};
  });
}

// x * y = x, i.e. x = 0 or y = 1.
std::array<Interval, 2> contract_fixed_factor(const Interval& x, const Interval& y) {
  if (x.is_empty() || y.is_empty()) return all_empty<2>();
  const bool x_zero = x.contains(0.0);
  const bool y_one = y.contains(1.0);
  if (!x_zero && !y_one) return all_empty<2>();
  return {hull(x_zero ? kZero : Interval::empty(), y_one ? x : Interval::empty()),
          hull(x_zero ? y : Interval::empty(), y_one ? kOne : Interval::empty())};
}

bool store(Box& box, std::size_t i, const Interval& v, std::uint8_t bit, std::uint8_t& mask) {
  if (box.narrow(i, v)) mask |= bit;
  return !box.is_empty();
}

}  // namespace

std::uint8_t apply_in_place(const PrimitiveConstraint& c, const std::array<std::size_t, 3>& idx,
                            Box& box) {
  if (box.is_empty()) return 0;
  std::uint8_t mask = 0;
  const auto i0 = idx[0];
  const auto i1 = idx[1];
  const auto i2 = idx[2];
  // Bits for positions that share a variable are set together.
  auto bits_of = [&](std::size_t target) {
    std::uint8_t b = 0;
    for (std::size_t k = 0; k < c.args.size(); ++k) {
      if (idx[k] == target) b |= static_cast<std::uint8_t>(1u << k);
    }
    return b;
  };
  auto put = [&](std::size_t i, const Interval& v) { return store(box, i, v, bits_of(i), mask); };

  switch (c.kind) {
    case ConstraintKind::kConst:
      put(i0, contract_const(c.value, box[i0]));
      break;
    case ConstraintKind::kSq:
      if (i0 == i1) {
        put(i0, restrict_to_points(box[i0], {0.0, 1.0}));
      } else {
        const auto r = contract_sq(box[i0], box[i1]);
        put(i0, r[0]) && put(i1, r[1]);
      }
      break;
    case ConstraintKind::kSum:
      if (i0 != i1 && i0 != i2 && i1 != i2) {
        const auto r = contract_sum(box[i0], box[i1], box[i2]);
        put(i0, r[0]) && put(i1, r[1]) && put(i2, r[2]);
      } else if (i0 == i1 && i1 != i2) {
        const auto r = contract_double(box[i0], box[i2]);
        put(i0, r[0]) && put(i2, r[1]);
      } else if (i0 == i2) {
        // x + y = x forces y = 0 (covers the all-equal case too).
        put(i1, intersect(box[i1], kZero));
      } else {
        put(i0, intersect(box[i0], kZero));
      }
      break;
    case ConstraintKind::kMul:
      if (i0 != i1 && i0 != i2 && i1 != i2) {
        const auto r = contract_mul(box[i0], box[i1], box[i2]);
        put(i0, r[0]) && put(i1, r[1]) && put(i2, r[2]);
      } else if (i0 == i1 && i1 == i2) {
        put(i0, restrict_to_points(box[i0], {-1.0, 0.0, 1.0}));
      } else if (i0 == i1) {
        const auto r = contract_sq(box[i0], box[i2]);
        put(i0, r[0]) && put(i2, r[1]);
      } else if (i0 == i2) {
        const auto r = contract_fixed_factor(box[i0], box[i1]);
        put(i0, r[0]) && put(i1, r[1]);
      } else {
        const auto r = contract_fixed_factor(box[i1], box[i0]);
        put(i1, r[0]) && put(i0, r[1]);
      }
      break;
  }
  return mask;
}

Box apply_lifted(const PrimitiveConstraint& c, const Box& p) {
  c.validate();
  std::array<std::size_t, 3> idx{};
  for (std::size_t k = 0; k < c.args.size(); ++k) idx[k] = p.require_index(c.args[k]);
  Box out = p;
  apply_in_place(c, idx, out);
  return out;
}

Box big_gamma(const Csp& csp, const Box& p) {
  if (!p.same_scope(csp.initial_box())) {
    throw ContractViolation("big_gamma: box scope differs from the CSP variables");
  }
  Box out = p;
  for (std::size_t i = 0; i < csp.size() && !out.is_empty(); ++i) {
    Box gi = p;
    apply_in_place(csp.constraints()[i], csp.arg_indices(i), gi);
    if (gi.is_empty()) {
      out.make_empty();
      break;
    }
    for (std::size_t v = 0; v < gi.size(); ++v) out.narrow(v, gi[v]);
  }
  return out;
}

}  // namespace icsolve
