// Per-application records of contractor activity.

#ifndef ICSOLVE_TRACE_HPP_
#define ICSOLVE_TRACE_HPP_

#include <string>
#include <vector>

#include "icsolve/constraint.hpp"
#include "icsolve/interval.hpp"

namespace icsolve {

struct TraceRecord {
  int constraint_id = 0;
  ConstraintKind kind = ConstraintKind::kConst;
  std::vector<VarName> args;
  double value = 0.0;  // const only
  std::vector<Interval> before;  // one per argument position
  std::vector<Interval> after;
  bool changed = false;
};

/// `#2 sum(y,z,u) {y=[0.25,1], z=[0,1], u=[1,1]} -> {...} changed`
std::string to_text_line(const TraceRecord& r);
/// One JSON object per line:
/// {"id":2,"kind":"sum","args":[...],"in":{...},"out":{...},"changed":true}
std::string to_json_line(const TraceRecord& r);

}  // namespace icsolve

#endif  // ICSOLVE_TRACE_HPP_
