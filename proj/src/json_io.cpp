#include "statespace/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace statespace {

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of scalars");
    Vec v;
    for (const auto& entry : j) {
        if (entry.is_string()) {
            v.push_back(parse_rational(entry.get<std::string>()));
        } else if (entry.is_number_integer()) {
            v.push_back(Rational(entry.get<long>()));
        } else {
            throw std::invalid_argument("scalars must be strings like \"p/q\"");
        }
    }
    return v;
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(m.row(r)));
    return out;
}

Json point_list_to_json(const std::vector<Point>& points) {
    Json out = Json::array();
    for (const auto& p : points) out.push_back(vec_to_json(p));
    return out;
}

Json polytope_to_json(const VPolytope& poly) {
    Json out;
    out["dim"] = poly.dim();
    out["vertices"] = point_list_to_json(poly.vertices());
    return out;
}

LoadedPolytope polytope_from_json(const Json& document) {
    if (!document.is_object() || !document.contains("dim") ||
        !document.contains("vertices")) {
        throw std::invalid_argument("polytope document needs \"dim\" and \"vertices\"");
    }
    if (!document["dim"].is_number_integer()) {
        throw std::invalid_argument("\"dim\" must be an integer");
    }
    const std::size_t dim = document["dim"].get<std::size_t>();
    if (dim == 0) throw std::invalid_argument("\"dim\" must be positive");
    if (!document["vertices"].is_array() || document["vertices"].empty()) {
        throw std::invalid_argument("\"vertices\" must be a non-empty array");
    }
    std::vector<Point> points;
    for (const auto& row : document["vertices"]) {
        Point p = vec_from_json(row);
        if (p.size() != dim) throw std::invalid_argument("dimension mismatch");
        points.push_back(std::move(p));
    }
    LoadedPolytope loaded{VPolytope::hull_of(points), {}};
    const auto& kept = loaded.poly.vertices();
    for (const auto& p : points) {
        if (std::find(kept.begin(), kept.end(), p) == kept.end()) {
            loaded.removed.push_back(p);
        }
    }
    return loaded;
}

Json witness_to_json(const DistinguishabilityWitness& witness) {
    Json effects = Json::array();
    for (const auto& e : witness.effects) {
        Json entry;
        entry["gradient"] = vec_to_json(e.gradient);
        entry["offset"] = to_string(e.offset);
        effects.push_back(std::move(entry));
    }
    Json out;
    out["effects"] = std::move(effects);
    return out;
}

Json witness_to_json(const HyperplaneWitness& witness) {
    Json planes = Json::array();
    for (const auto& h : witness.hyperplanes) {
        Json entry;
        entry["normal"] = vec_to_json(h.normal);
        entry["level"] = to_string(h.level);
        planes.push_back(std::move(entry));
    }
    Json out;
    out["hyperplanes"] = std::move(planes);
    out["dependence"] = vec_to_json(witness.dependence);
    return out;
}

Json decomposition_to_json(const Decomposition& d) {
    Json terms = Json::array();
    for (const auto& t : d.terms) {
        Json entry;
        entry["vertex"] = vec_to_json(t.vertex);
        entry["weight"] = to_string(t.weight);
        terms.push_back(std::move(entry));
    }
    Json out;
    out["terms"] = std::move(terms);
    return out;
}

Json group_to_json(const AutomorphismGroup& group, const VPolytope& poly) {
    Json out;
    out["order"] = group.order();
    Json orbits = Json::array();
    for (const auto& orbit : vertex_orbits(group, poly.vertex_count())) {
        orbits.push_back(orbit);
    }
    out["orbits"] = std::move(orbits);
    Json generators = Json::array();
    for (const auto idx : greedy_generators(group)) {
        Json g;
        g["vertex_permutation"] = group.vertex_permutations[idx];
        g["linear"] = matrix_to_json(group.elements[idx].linear);
        g["translation"] = vec_to_json(group.elements[idx].translation);
        generators.push_back(std::move(g));
    }
    out["generators"] = std::move(generators);
    out["invariant_gram"] = matrix_to_json(invariant_gram(group));
    return out;
}

}  // namespace statespace
