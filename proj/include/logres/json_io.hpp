// SPDX-License-Identifier: MIT
#pragma once

#include <nlohmann/json.hpp>

#include "logres/driver.hpp"

namespace logres {

using Json = nlohmann::json;

// Rationals serialize as strings "p" or "p/q"; lattice points as integer
// arrays.  All serialization is deterministic (sorted keys).

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json point_to_json(const LatticePoint& v);
LatticePoint point_from_json(const Json& j);

Json chart_to_json(const LogChart& c);
ChartPtr chart_from_json(const Json& j);

Json ratpoint_to_json(const RatPoint& p);
RatPoint ratpoint_from_json(const Json& j, const LogChart& c);

Json invariant_to_json(const InvariantSeq& s);
Json center_to_json(const ToroidalCenter& c);
Json reduced_center_to_json(const ReducedCenter& c);
Json ideal_to_json(const Ideal& i);
Json tree_to_json(const ChartTree& t);

}  // namespace logres
