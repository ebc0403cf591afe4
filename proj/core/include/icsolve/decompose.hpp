// Flattening of equations into primitive constraints.

#ifndef ICSOLVE_DECOMPOSE_HPP_
#define ICSOLVE_DECOMPOSE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "icsolve/csp.hpp"
#include "icsolve/parser.hpp"

namespace icsolve {

/// Rewrites every equation into sum/mul/sq/const constraints.
///
/// Each distinct subexpression (commutative operands compared up to order)
/// gets one auxiliary variable _t0, _t1, ... An equation `v = e` binds e's
/// root directly to v instead of introducing an auxiliary. Differences and
/// negations become sums; x^k expands by repeated squaring. Inexact decimal
/// constants become auxiliaries whose initial domain is the outward-rounded
/// literal.
Csp decompose(const Problem& problem);

/// parse_problem followed by decompose.
Csp load_problem(std::string_view text);

/// Problem text (declarations and source equations) that decomposes to the
/// same CSP.
std::string canonical_text(const Csp& csp);

}  // namespace icsolve

#endif  // ICSOLVE_DECOMPOSE_HPP_
