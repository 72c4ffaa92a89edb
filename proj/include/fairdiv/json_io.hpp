#pragma once

#include <string>

#include "json.hpp"

#include "fairdiv/cake.hpp"
#include "fairdiv/criteria.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/oracle.hpp"

namespace fairdiv {

using Json = nlohmann::ordered_json;

// Values serialize as JSON integers when integral (and small enough),
// otherwise as "a/b" strings. Parsing accepts integers, "a/b" strings and
// JSON floats (converted from their exact binary value).
Json value_to_json(const Value& v);
Value value_from_json(const Json& j);

// Goods render as 1-based names "g1".."gm"; parsing also accepts 0-based
// integer indices.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json allocation_to_json(const Allocation& alloc);
Allocation allocation_from_json(const Json& j);

Json report_to_json(const FairnessReport& rep);
Json theorem_report_to_json(const TheoremReport& rep);

Json cake_instance_to_json(const cake::CakeInstance& inst);
cake::CakeInstance cake_instance_from_json(const Json& j);
Json density_to_json(const cake::PiecewiseConstantDensity& d);
cake::PiecewiseConstantDensity density_from_json(const Json& j);
Json interval_allocation_to_json(const cake::IntervalAllocation& alloc);
cake::IntervalAllocation interval_allocation_from_json(const Json& j);

Json trace_to_json(const struct Trace& trace);

// True when the JSON object looks like a cake instance rather than a goods
// instance (drives CLI dispatch).
bool looks_like_cake(const Json& j);

}  // namespace fairdiv
