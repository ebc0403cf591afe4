// Directed rounding of elementary floating-point operations without touching
// the hardware rounding mode.
//
// Each function returns the round-to-nearest result when it is exact and the
// adjacent float in the requested direction otherwise. Exactness is decided
// with error-free transformations (TwoSum, FMA residuals), so for finite,
// non-underflowing operands the results coincide with IEEE round-down /
// round-up. Near the underflow threshold the residual may not be
// representable; there the result is unconditionally widened by one ULP.
//
// Infinite operands follow the enclosure convention used by interval bounds:
// 0 * inf = 0, and indeterminate sums resolve toward the requested infinity.

#ifndef ICSOLVE_ROUNDING_HPP_
#define ICSOLVE_ROUNDING_HPP_

namespace icsolve::rounding {

double next_up(double x);
double next_down(double x);

double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
// Division by a zero divisor is read as division by 0+ (a positive
// infinitesimal): the sign of the dividend decides the infinity, 0/0+ = 0.
double div_down(double a, double b);
double div_up(double a, double b);
double sqrt_down(double a);
double sqrt_up(double a);

}  // namespace icsolve::rounding

#endif  // ICSOLVE_ROUNDING_HPP_
