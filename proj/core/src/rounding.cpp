#include "icsolve/rounding.hpp"

#include <cmath>
#include <limits>

namespace icsolve::rounding {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = std::numeric_limits<double>::max();

// Below this magnitude an FMA residual may itself round, so exactness
// cannot be decided and results are widened.
const double kTiny = std::ldexp(1.0, -968);

// Error term of a + b for finite operands with a finite sum (Knuth TwoSum).
double two_sum_error(double a, double b, double s) {
  const double bb = s - a;
  return (a - (s - bb)) + (b - bb);
}

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sign of the exact value minus the rounded product.
int product_residual_sign(double a, double b, double p) {
  return sign_of(std::fma(a, b, -p));
}

}  // namespace

double next_up(double x) { return std::nextafter(x, kInf); }
double next_down(double x) { return std::nextafter(x, -kInf); }

double add_down(double a, double b) {
  if (a == -kInf || b == -kInf) return -kInf;
  if (std::isinf(a) || std::isinf(b)) return kInf;
  const double s = a + b;
  if (std::isinf(s)) return s > 0 ? kMax : -kInf;
  return two_sum_error(a, b, s) < 0 ? next_down(s) : s;
}

double add_up(double a, double b) {
  if (a == kInf || b == kInf) return kInf;
  if (std::isinf(a) || std::isinf(b)) return -kInf;
  const double s = a + b;
  if (std::isinf(s)) return s < 0 ? -kMax : kInf;
  return two_sum_error(a, b, s) > 0 ? next_up(s) : s;
}

double sub_down(double a, double b) { return add_down(a, -b); }
double sub_up(double a, double b) { return add_up(a, -b); }

double mul_down(double a, double b) {
  if (a == 0 || b == 0) return 0.0;
  if (std::isinf(a) || std::isinf(b)) {
    return sign_of(a) * sign_of(b) > 0 ? kInf : -kInf;
  }
  const double p = a * b;
  if (std::isinf(p)) return p > 0 ? kMax : -kInf;
  if (std::fabs(p) < kTiny) return next_down(p);
  return product_residual_sign(a, b, p) < 0 ? next_down(p) : p;
}

double mul_up(double a, double b) {
  if (a == 0 || b == 0) return 0.0;
  if (std::isinf(a) || std::isinf(b)) {
    return sign_of(a) * sign_of(b) > 0 ? kInf : -kInf;
  }
  const double p = a * b;
  if (std::isinf(p)) return p < 0 ? -kMax : kInf;
  if (std::fabs(p) < kTiny) return next_up(p);
  return product_residual_sign(a, b, p) > 0 ? next_up(p) : p;
}

namespace {

// Shared special cases of directed division; returns true when `out` is set.
bool div_special(double a, double b, bool down, double& out) {
  if (b == 0) {
    out = a > 0 ? kInf : (a < 0 ? -kInf : 0.0);
    return true;
  }
  if (a == 0) {
    out = 0.0;
    return true;
  }
  if (std::isinf(a) && std::isinf(b)) {
    out = down ? -kInf : kInf;
    return true;
  }
  if (std::isinf(a)) {
    out = sign_of(a) * sign_of(b) > 0 ? kInf : -kInf;
    return true;
  }
  if (std::isinf(b)) {
    out = 0.0;
    return true;
  }
  return false;
}

// Sign of the exact quotient minus the rounded one.
int quotient_residual_sign(double a, double b, double q) {
  return sign_of(std::fma(-q, b, a)) * sign_of(b);
}

}  // namespace

double div_down(double a, double b) {
  double out = 0;
  if (div_special(a, b, true, out)) return out;
  const double q = a / b;
  if (std::isinf(q)) return q > 0 ? kMax : -kInf;
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return next_down(q);
  return quotient_residual_sign(a, b, q) < 0 ? next_down(q) : q;
}

double div_up(double a, double b) {
  double out = 0;
  if (div_special(a, b, false, out)) return out;
  const double q = a / b;
  if (std::isinf(q)) return q < 0 ? -kMax : kInf;
  if (std::fabs(q) < kTiny || std::fabs(a) < kTiny) return next_up(q);
  return quotient_residual_sign(a, b, q) > 0 ? next_up(q) : q;
}

double sqrt_down(double a) {
  if (a <= 0) return 0.0;
  if (std::isinf(a)) return kInf;
  const double r = std::sqrt(a);
  if (a < kTiny) return std::fmax(0.0, next_down(r));
  return std::fma(r, r, -a) > 0 ? next_down(r) : r;
}

double sqrt_up(double a) {
  if (a <= 0) return 0.0;
  if (std::isinf(a)) return kInf;
  const double r = std::sqrt(a);
  if (a < kTiny) return next_up(r);
  return std::fma(r, r, -a) < 0 ? next_up(r) : r;
}

}  // namespace icsolve::rounding
