#include "statespace/classification.hpp"
#include "statespace/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using statespace::Json;

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null:
            return py::none();
        case Json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float:
            return py::float_(j.get<double>());
        case Json::value_t::string:
            return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& entry : j) out.append(json_to_py(entry));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (const auto& [key, entry] : j.items()) {
                out[py::str(key)] = json_to_py(entry);
            }
            return out;
        }
        default:
            return py::none();
    }
}

Json py_to_json(py::handle h) {
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) return h.cast<long long>();
    if (py::isinstance<py::float_>(h)) return h.cast<double>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        Json out = Json::array();
        for (auto item : h.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    if (py::isinstance<py::dict>(h)) {
        Json out = Json::object();
        for (auto item : h.cast<py::dict>()) {
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        }
        return out;
    }
    throw py::value_error("unsupported value in JSON conversion");
}

statespace::VPolytope polytope_from_py(py::handle document) {
    return statespace::polytope_from_json(py_to_json(document)).poly;
}

statespace::Point point_from_py(py::handle point) {
    return statespace::vec_from_json(py_to_json(point));
}

std::vector<statespace::ModelPoint> model_points_from_py(py::handle points) {
    std::vector<statespace::ModelPoint> out;
    for (auto entry : points.cast<py::sequence>()) {
        statespace::Vec coords;
        for (auto c : entry.cast<py::sequence>()) {
            if (py::isinstance<py::str>(c)) {
                coords.push_back(
                    statespace::parse_decimal_or_rational(c.cast<std::string>()));
            } else {
                // Doubles arrive exact: scale by a power of two.
                coords.push_back(statespace::Rational(c.cast<double>()));
            }
        }
        out.push_back(statespace::ModelPoint::of_exact(std::move(coords)));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_statespace, m) {
    m.doc() = "Exact convex-geometry toolkit: distinguishability certificates, "
              "affine symmetry groups, and state-space classification.";

    m.def("gen", [](const std::string& kind, py::args args) {
        statespace::VPolytope poly = [&]() {
            if (kind == "simplex") return statespace::make_simplex(args[0].cast<std::size_t>());
            if (kind == "cube") return statespace::make_cube(args[0].cast<std::size_t>());
            if (kind == "cross_polytope") {
                return statespace::make_cross_polytope(args[0].cast<std::size_t>());
            }
            if (kind == "affinely_regular_polygon") {
                return statespace::make_affinely_regular_polygon(args[0].cast<std::size_t>());
            }
            if (kind == "prism") {
                return statespace::make_prism(polytope_from_py(args[0]));
            }
            if (kind == "random") {
                return statespace::make_random_polytope(args[0].cast<std::size_t>(),
                                                        args[1].cast<std::size_t>(),
                                                        args[2].cast<std::uint64_t>());
            }
            throw py::value_error("unknown generator '" + kind + "'");
        }();
        return json_to_py(statespace::polytope_to_json(poly));
    }, py::arg("kind"), "Generate a polytope document, e.g. gen('simplex', 3)");

    m.def("analyze", [](py::handle document, std::uint64_t seed, std::size_t trials) {
        const statespace::LoadedPolytope loaded =
            statespace::polytope_from_json(py_to_json(document));
        return json_to_py(statespace::analyze_report("<python>", loaded, seed, trials));
    }, py::arg("polytope"), py::arg("seed") = 12021, py::arg("trials") = 100);

    m.def("classify", [](py::handle document) {
        return statespace::to_string(statespace::classify(polytope_from_py(document)));
    }, py::arg("polytope"));

    m.def("automorphism_group", [](py::handle document) {
        const auto poly = polytope_from_py(document);
        return json_to_py(statespace::group_to_json(statespace::automorphism_group(poly), poly));
    }, py::arg("polytope"));

    m.def("distinguishable", [](py::handle document, py::handle points) -> py::object {
        const auto poly = polytope_from_py(document);
        std::vector<statespace::Point> pts;
        for (auto entry : points.cast<py::sequence>()) pts.push_back(point_from_py(entry));
        const auto witness = statespace::distinguishable(poly, pts);
        if (!witness) return py::none();
        Json out = statespace::witness_to_json(*witness);
        if (pts.size() >= 2) {
            out["hyperplane_witness"] = statespace::witness_to_json(
                statespace::hyperplane_witness_from_effects(poly, pts, *witness));
        }
        return json_to_py(out);
    }, py::arg("polytope"), py::arg("points"));

    m.def("max_distinguishable", [](py::handle document) {
        const auto sets = statespace::max_distinguishable(polytope_from_py(document));
        py::dict out;
        out["max_size"] = sets.max_size;
        out["maximal_sets"] = py::cast(sets.maximal);
        out["all_sets"] = py::cast(sets.all);
        return out;
    }, py::arg("polytope"));

    m.def("decompose", [](py::handle document, py::handle point) -> py::object {
        const auto d = statespace::decompose(polytope_from_py(document), point_from_py(point));
        if (!d) return py::none();
        return json_to_py(statespace::decomposition_to_json(*d));
    }, py::arg("polytope"), py::arg("point"));

    m.def("verify", [](std::size_t trials, std::uint64_t seed) {
        return json_to_py(
            statespace::verify_report(statespace::default_corpus(), trials, seed));
    }, py::arg("trials") = 100, py::arg("seed") = 12021);

    m.def("ball_distinguishable", [](std::size_t dim, py::handle points) {
        return statespace::ball_distinguishable(statespace::BallModel{dim},
                                                model_points_from_py(points));
    }, py::arg("dim"), py::arg("points"));

    m.def("ball_decompose", [](std::size_t dim, py::handle point) {
        py::list one;
        one.append(point);
        const auto d = statespace::ball_decompose(statespace::BallModel{dim},
                                                  model_points_from_py(one).front());
        py::list terms;
        for (const auto& t : d.terms) {
            py::dict entry;
            entry["point"] = py::cast(t.point);
            entry["weight"] = t.weight;
            entry["exact_weight"] = t.exact_weight
                ? py::object(py::str(statespace::to_string(*t.exact_weight)))
                : py::object(py::none());
            terms.append(entry);
        }
        return terms;
    }, py::arg("dim"), py::arg("point"));

    m.def("cylinder_distinguishable", [](py::handle points) {
        return statespace::cylinder_distinguishable(statespace::CylinderModel{},
                                                    model_points_from_py(points));
    }, py::arg("points"));

    m.def("cylinder_decompose", [](py::handle point) -> py::object {
        py::list one;
        one.append(point);
        const auto d = statespace::cylinder_decompose(statespace::CylinderModel{},
                                                      model_points_from_py(one).front());
        if (!d) return py::none();
        py::list terms;
        for (const auto& t : d->terms) {
            py::dict entry;
            entry["point"] = py::cast(t.point);
            entry["weight"] = t.weight;
            entry["exact_weight"] = t.exact_weight
                ? py::object(py::str(statespace::to_string(*t.exact_weight)))
                : py::object(py::none());
            terms.append(entry);
        }
        return terms;
    }, py::arg("point"));

    m.def("model_report", [](const std::string& model, std::size_t dim, std::uint64_t seed) {
        if (model == "ball") {
            return json_to_py(statespace::model_report(statespace::BallModel{dim}, seed));
        }
        if (model == "cylinder") {
            return json_to_py(statespace::model_report(statespace::CylinderModel{}, seed));
        }
        throw py::value_error("model must be 'ball' or 'cylinder'");
    }, py::arg("model"), py::arg("dim") = 3, py::arg("seed") = 12021);
}
