#include "icsolve/interval.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "icsolve/error.hpp"
#include "icsolve/rounding.hpp"

namespace icsolve {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = std::numeric_limits<double>::max();

double normalize_zero(double x) { return x == 0 ? 0.0 : x; }

}  // namespace

Interval::Interval(double lo, double hi) : lo_(normalize_zero(lo)), hi_(normalize_zero(hi)) {
  if (std::isnan(lo) || std::isnan(hi)) {
    throw ContractViolation("interval bound is NaN");
  }
  if (lo > hi) {
    throw ContractViolation("interval lower bound exceeds upper bound");
  }
  if (lo == kInf || hi == -kInf) {
    throw ContractViolation("interval bound infinity on the wrong side");
  }
}

bool Interval::is_bounded() const {
  return is_empty() || (std::isfinite(lo_) && std::isfinite(hi_));
}

bool Interval::contains(double x) const {
  return std::isfinite(x) && lo_ <= x && x <= hi_;
}

bool Interval::subset_of(const Interval& other) const {
  if (is_empty()) return true;
  if (other.is_empty()) return false;
  return other.lo_ <= lo_ && hi_ <= other.hi_;
}

Interval intersect(const Interval& a, const Interval& b) {
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) return Interval::empty();
  return Interval(lo, hi);
}

Interval hull(const Interval& a, const Interval& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval add_outward(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return Interval(rounding::add_down(a.lo(), b.lo()), rounding::add_up(a.hi(), b.hi()));
}

Interval sub_outward(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  return Interval(rounding::sub_down(a.lo(), b.hi()), rounding::sub_up(a.hi(), b.lo()));
}

Interval mul_outward(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  const std::array<std::pair<double, double>, 4> corners{{
      {a.lo(), b.lo()},
      {a.lo(), b.hi()},
      {a.hi(), b.lo()},
      {a.hi(), b.hi()},
  }};
  double lo = kInf;
  double hi = -kInf;
  for (const auto& [x, y] : corners) {
    lo = std::min(lo, rounding::mul_down(x, y));
    hi = std::max(hi, rounding::mul_up(x, y));
  }
  return Interval(lo, hi);
}

Interval neg(const Interval& a) {
  if (a.is_empty()) return a;
  return Interval(-a.hi(), -a.lo());
}

Interval sq_outward(const Interval& a) {
  if (a.is_empty()) return a;
  if (a.lo() >= 0) {
    return Interval(rounding::mul_down(a.lo(), a.lo()), rounding::mul_up(a.hi(), a.hi()));
  }
  if (a.hi() <= 0) {
    return Interval(rounding::mul_down(a.hi(), a.hi()), rounding::mul_up(a.lo(), a.lo()));
  }
  const double m = std::max(-a.lo(), a.hi());
  return Interval(0.0, rounding::mul_up(m, m));
}

Interval sqrt_outer(const Interval& a) {
  const Interval nonneg = intersect(a, Interval(0.0, kInf));
  if (nonneg.is_empty()) return nonneg;
  return Interval(rounding::sqrt_down(nonneg.lo()), rounding::sqrt_up(nonneg.hi()));
}

double width(const Interval& a) {
  if (a.is_empty()) return 0.0;
  return rounding::sub_up(a.hi(), a.lo());
}

double midpoint(const Interval& a) {
  if (a.is_empty()) throw ContractViolation("midpoint of the empty interval");
  const double lo = a.lo();
  const double hi = a.hi();
  if (lo == -kInf && hi == kInf) return 0.0;
  if (lo == -kInf) {
    for (double c : {-kMax / 2, -kMax}) {
      if (c < hi) return c;
    }
    return hi;
  }
  if (hi == kInf) {
    for (double c : {kMax / 2, kMax}) {
      if (c > lo) return c;
    }
    return lo;
  }
  const double diff = hi - lo;
  double m = std::isfinite(diff) ? lo + diff / 2 : lo / 2 + hi / 2;
  if (m <= lo && lo < hi) m = rounding::next_up(lo);
  if (m >= hi && lo < hi) m = rounding::next_down(hi);
  return normalize_zero(m);
}

bool is_splittable(const Interval& a) {
  if (a.is_empty()) return false;
  const double lo = std::max(a.lo(), -kMax);
  const double hi = std::min(a.hi(), kMax);
  if (lo >= hi) return false;
  return rounding::next_up(rounding::next_up(lo)) <= hi;
}

std::string format_bound(double x) {
  if (x == kInf) return "inf";
  if (x == -kInf) return "-inf";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), normalize_zero(x));
  return std::string(buf.data(), end);
}

std::string to_string(const Interval& a) {
  if (a.is_empty()) return "empty";
  return "[" + format_bound(a.lo()) + "," + format_bound(a.hi()) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << to_string(a); }

std::optional<double> parse_bound(std::string_view text) {
  if (text == "inf" || text == "+inf") return kInf;
  if (text == "-inf") return -kInf;
  double value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace icsolve
