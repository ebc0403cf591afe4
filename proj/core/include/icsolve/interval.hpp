// Closed real intervals with double bounds and outward-rounded arithmetic.

#ifndef ICSOLVE_INTERVAL_HPP_
#define ICSOLVE_INTERVAL_HPP_

#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace icsolve {

/// A closed interval [lo, hi] of reals, or the empty interval.
///
/// Bounds may be infinite; an infinite bound is open, so +inf is never a
/// member of [0, +inf]. Negative zero is normalized to +0 so that equality of
/// intervals is bit-exact equality of their bounds. The empty interval has a
/// single representation.
class Interval {
 public:
  /// The whole real line.
  constexpr Interval() = default;
  /// Throws ContractViolation on NaN bounds, lo > hi, lo = +inf or hi = -inf.
  Interval(double lo, double hi);

  static Interval empty() { return Interval(kEmptyTag{}); }
  static Interval entire() { return Interval(); }
  static Interval point(double x) { return Interval(x, x); }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool is_empty() const { return lo_ > hi_; }
  bool is_point() const { return lo_ == hi_; }
  bool is_bounded() const;

  /// Real membership; infinities are never members.
  bool contains(double x) const;
  /// Set inclusion (the empty interval is a subset of everything).
  bool subset_of(const Interval& other) const;

  bool operator==(const Interval& other) const = default;

 private:
  struct kEmptyTag {};
  explicit constexpr Interval(kEmptyTag)
      : lo_(std::numeric_limits<double>::infinity()),
        hi_(-std::numeric_limits<double>::infinity()) {}

  double lo_ = -std::numeric_limits<double>::infinity();
  double hi_ = std::numeric_limits<double>::infinity();
};

Interval intersect(const Interval& a, const Interval& b);
/// Smallest interval containing both arguments.
Interval hull(const Interval& a, const Interval& b);

Interval add_outward(const Interval& a, const Interval& b);
Interval sub_outward(const Interval& a, const Interval& b);
Interval mul_outward(const Interval& a, const Interval& b);
Interval neg(const Interval& a);
/// Image of x -> x*x; the lower bound is exactly 0 when a straddles 0.
Interval sq_outward(const Interval& a);
/// Image of x -> sqrt(x) over the nonnegative part of a.
Interval sqrt_outer(const Interval& a);

/// hi - lo rounded up; +inf if either bound is infinite. Empty has width 0.
double width(const Interval& a);

/// A finite split point strictly inside `a` whenever `a` holds at least
/// three finite floats. Half-infinite intervals yield +-max/2 (or +-max when
/// that is not inside). Throws ContractViolation on the empty interval.
double midpoint(const Interval& a);

/// True when `a` holds at least three finite floats, i.e. it can be cut at
/// midpoint(a) into two strictly smaller closed halves.
bool is_splittable(const Interval& a);

/// Shortest round-trip decimal for a bound: "inf", "-inf" or e.g. "0.1".
std::string format_bound(double x);
/// "[lo,hi]" or "empty".
std::string to_string(const Interval& a);
std::ostream& operator<<(std::ostream& os, const Interval& a);

/// Parses a bound produced by format_bound.
std::optional<double> parse_bound(std::string_view text);

}  // namespace icsolve

#endif  // ICSOLVE_INTERVAL_HPP_
