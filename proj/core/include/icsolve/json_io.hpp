// JSON forms of intervals and boxes.
//
// An interval is a two-element array [lo, hi]; finite bounds are numbers
// written with shortest round-trip digits, infinite bounds are the strings
// "-inf" / "inf". The empty interval is null. A box is an object keyed by
// variable name, or null when empty.

#ifndef ICSOLVE_JSON_IO_HPP_
#define ICSOLVE_JSON_IO_HPP_

#include <span>

#include <nlohmann/json.hpp>

#include "icsolve/box.hpp"
#include "icsolve/interval.hpp"

namespace icsolve {

nlohmann::json to_json(const Interval& a);
nlohmann::json to_json(const Box& b);
nlohmann::json to_json(const Box& b, std::span<const VarName> vars);

/// Throws std::invalid_argument on malformed input.
Interval interval_from_json(const nlohmann::json& j);
/// `scope` is needed to rebuild an empty box, which is serialized as null.
Box box_from_json(const nlohmann::json& j, const VarSet& scope);

}  // namespace icsolve

#endif  // ICSOLVE_JSON_IO_HPP_
