#pragma once

#include "statespace/distinguish.hpp"
#include "statespace/linalg.hpp"
#include "statespace/polytope.hpp"
#include "statespace/symmetry.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace statespace {

// Insertion-ordered JSON keeps reports byte-stable.
using Json = nlohmann::ordered_json;

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Json point_list_to_json(const std::vector<Point>& points);

/// Polytope file format: {"dim": n, "vertices": [["p/q", ...], ...]}.
Json polytope_to_json(const VPolytope& poly);

struct LoadedPolytope {
    VPolytope poly;
    /// Input points dropped on load because they were duplicates or inside
    /// the hull of the others.
    std::vector<Point> removed;
};

/// Parses and reduces a polytope document; throws std::invalid_argument on
/// schema violations.
LoadedPolytope polytope_from_json(const Json& document);

Json witness_to_json(const DistinguishabilityWitness& witness);
Json witness_to_json(const HyperplaneWitness& witness);
Json decomposition_to_json(const Decomposition& d);
Json group_to_json(const AutomorphismGroup& group, const VPolytope& poly);

}  // namespace statespace
