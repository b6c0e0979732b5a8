#pragma once

#include <string>

#include "dl/boundary2.hpp"
#include "dl/boundary_d.hpp"
#include "dl/verify.hpp"
#include "json.hpp"

namespace dl {

using Json = nlohmann::ordered_json;

/// {"h": k, "branch": {"j": a, ...}}
Json to_json(const TreeVertex& v);
TreeVertex tree_vertex_from_json(const Json& j, int q);

/// Array of tree vertices.
Json to_json(const DLVertex& v);
DLVertex dl_vertex_from_json(const Json& j, const GraphParams& params);

/// {"lamps": {"p": s, ...}, "pos": k}
Json to_json(const LampStand& g);
LampStand lamp_stand_from_json(const Json& j, int q);

/// {"side": 0|1, "head": {"p": s, ...}, "tail": [s, ...], "tail_from": p}
/// in lamp positions; the tail repeats away from the origin.
Json to_json(const BoundaryPoint& x);
BoundaryPoint boundary_point_from_json(const Json& j, int q);

Json to_json(const ClassIndex& c);

/// {"base": "<vertex>", "moves": "<word>"}
Json to_json(const Path& p);

/// {"base": "<vertex>", "prefix": "<word>", "up_tree": i, "up_labels": [...],
///  "down_tree": j}.  "base" may be omitted for the origin.
Json to_json(const RayDescriptor& r);
RayDescriptor ray_from_json(const Json& j, const GraphParams& params);

Json to_json(const TreeEnd& e);
Json to_json(const AsymptoticCertificate& c);
Json to_json(const SuiteReport& r);

/// Undirected graph on the ball, one node per vertex labelled with its
/// heights and one edge per adjacent pair inside the ball.
std::string to_dot(const Ball& b, const GraphParams& params);

/// Parses text as JSON, reporting `what` on failure.
Json parse_json(const std::string& text, const std::string& what);

}  // namespace dl
