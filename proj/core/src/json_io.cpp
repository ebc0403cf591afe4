#include "icsolve/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace icsolve {
namespace {

nlohmann::json bound_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double bound_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto v = parse_bound(j.get<std::string>());
    if (v) return *v;
  }
  throw std::invalid_argument("malformed interval bound: " + j.dump());
}

}  // namespace

nlohmann::json to_json(const Interval& a) {
  if (a.is_empty()) return nullptr;
  return nlohmann::json::array({bound_to_json(a.lo()), bound_to_json(a.hi())});
}

nlohmann::json to_json(const Box& b, std::span<const VarName> vars) {
  if (b.is_empty()) return nullptr;
  nlohmann::json out = nlohmann::json::object();
  for (const auto& v : vars) out[v] = to_json(b.at(v));
  return out;
}

nlohmann::json to_json(const Box& b) { return to_json(b, b.vars()); }

Interval interval_from_json(const nlohmann::json& j) {
  if (j.is_null()) return Interval::empty();
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("interval must be a two-element array: " + j.dump());
  }
  return Interval(bound_from_json(j[0]), bound_from_json(j[1]));
}

Box box_from_json(const nlohmann::json& j, const VarSet& scope) {
  if (j.is_null()) return Box::empty_over(scope);
  if (!j.is_object()) throw std::invalid_argument("box must be an object: " + j.dump());
  std::vector<std::pair<VarName, Interval>> bindings;
  for (const auto& [name, value] : j.items()) bindings.emplace_back(name, interval_from_json(value));
  return Box(bindings);
}

}  // namespace icsolve
