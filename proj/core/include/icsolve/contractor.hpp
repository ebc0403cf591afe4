// Contraction operators of the primitive relations and of a whole CSP.
//
// Each primitive contractor maps a box to the least box (up to directed
// rounding) that contains the relation's points inside it. Every contractor
// here is iterated to its own fixpoint before returning, which makes it
// idempotent bit for bit even where rounding of one pass is not.

#ifndef ICSOLVE_CONTRACTOR_HPP_
#define ICSOLVE_CONTRACTOR_HPP_

#include <array>
#include <cstdint>
#include <span>

#include "icsolve/box.hpp"
#include "icsolve/constraint.hpp"
#include "icsolve/csp.hpp"
#include "icsolve/interval.hpp"

namespace icsolve {

/// x + y = z. All three results are empty when no point remains.
std::array<Interval, 3> contract_sum(const Interval& x, const Interval& y, const Interval& z);

/// x * y = z, using extended division for the inverse directions.
std::array<Interval, 3> contract_mul(const Interval& x, const Interval& y, const Interval& z);

/// x * x = y.
std::array<Interval, 2> contract_sq(const Interval& x, const Interval& y);

/// x = c.
Interval contract_const(double c, const Interval& x);

/// Narrows `box` in place by constraint `c`, whose arguments sit at box
/// positions `idx`. Repeated arguments are contracted against the diagonal
/// relation they induce. Returns a bit mask over argument positions whose
/// variable changed; the box may have become empty.
std::uint8_t apply_in_place(const PrimitiveConstraint& c, const std::array<std::size_t, 3>& idx,
                            Box& box);

/// Contractor of `c` lifted to the scope of `p`: project, contract,
/// cylindrify, join. Throws ContractViolation if an argument is out of scope.
Box apply_lifted(const PrimitiveConstraint& c, const Box& p);

/// Intersection of every lifted contractor applied to the same box `p`.
Box big_gamma(const Csp& csp, const Box& p);

}  // namespace icsolve

#endif  // ICSOLVE_CONTRACTOR_HPP_
