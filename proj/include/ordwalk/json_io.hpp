#pragma once

// JSON shapes shared by the CLI, the golden files and the Python module.
//
//   trace record  {"alpha": lit, "beta": lit, "points": [lit...], "rho2": n}
//   separation    {"beta": lit, "certificate": {lit: n, ...}}
//   report        {"anchors": [{"anchor": lit, "histogram": {"v": count}}],
//                  "maxFiber": n}

#include <json.hpp>

#include "ordwalk/space.hpp"
#include "ordwalk/walks.hpp"

namespace ordwalk {

using Json = nlohmann::ordered_json;

Json to_json(const WalkTrace& t);
WalkTrace trace_from_json(const Json& j);

Json to_json(const Separation& s);
Json to_json(const ConvergenceReport& r);
Json to_json(const CoherenceReport& r);

Json ordinal_list(const std::vector<Ordinal>& xs);
std::vector<Ordinal> ordinals_from_json(const Json& j);

}  // namespace ordwalk
