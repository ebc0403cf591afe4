#include "icsolve/trace.hpp"

#include <set>

#include "icsolve/json_io.hpp"

namespace icsolve {
namespace {

// Distinct argument positions in first-occurrence order.
std::vector<std::size_t> distinct_positions(const TraceRecord& r) {
  std::vector<std::size_t> out;
  std::set<VarName> seen;
  for (std::size_t k = 0; k < r.args.size(); ++k) {
    if (seen.insert(r.args[k]).second) out.push_back(k);
  }
  return out;
}

std::string slice_text(const TraceRecord& r, const std::vector<Interval>& values) {
  std::string out = "{";
  bool first = true;
  for (auto k : distinct_positions(r)) {
    if (!first) out += ", ";
    first = false;
    out += r.args[k] + "=" + to_string(values[k]);
  }
  return out + "}";
}

nlohmann::json slice_json(const TraceRecord& r, const std::vector<Interval>& values) {
  nlohmann::json out = nlohmann::json::object();
  for (auto k : distinct_positions(r)) out[r.args[k]] = to_json(values[k]);
  return out;
}

}  // namespace

std::string to_text_line(const TraceRecord& r) {
  std::string name(kind_name(r.kind));
  name += "(";
  if (r.kind == ConstraintKind::kConst) name += format_bound(r.value) + ",";
  for (std::size_t k = 0; k < r.args.size(); ++k) name += (k ? "," : "") + r.args[k];
  name += ")";
  return "#" + std::to_string(r.constraint_id) + " " + name + " " + slice_text(r, r.before) +
         " -> " + slice_text(r, r.after) + (r.changed ? " changed" : " unchanged");
}

std::string to_json_line(const TraceRecord& r) {
  nlohmann::json j;
  j["id"] = r.constraint_id;
  j["kind"] = std::string(kind_name(r.kind));
  j["args"] = r.args;
  if (r.kind == ConstraintKind::kConst) j["value"] = r.value;
  j["in"] = slice_json(r, r.before);
  j["out"] = slice_json(r, r.after);
  j["changed"] = r.changed;
  return j.dump();
}

}  // namespace icsolve
