#include "statespace/report.hpp"

#include <cmath>
#include <sstream>

namespace statespace {

namespace {

// Display-only orthonormalization: a floating Cholesky factor U with
// U^T U ~ M, so x -> U x carries the group onto standard isometries. The
// normative statement stays the exact M-invariance check.
Json cholesky_display(const Matrix& gram) {
    const std::size_t n = gram.rows();
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r][c] = gram.at(r, c).convert_to<double>();
    std::vector<std::vector<double>> lower(n, std::vector<double>(n, 0.0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c <= r; ++c) {
            double sum = m[r][c];
            for (std::size_t k = 0; k < c; ++k) sum -= lower[r][k] * lower[c][k];
            lower[r][c] = (r == c) ? std::sqrt(sum) : sum / lower[c][c];
        }
    }
    double residual = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            double entry = 0.0;
            for (std::size_t k = 0; k < n; ++k) entry += lower[r][k] * lower[c][k];
            residual = std::max(residual, std::abs(entry - m[r][c]));
        }
    }
    Json factor = Json::array();
    for (std::size_t c = 0; c < n; ++c) {
        Json row = Json::array();
        for (std::size_t r = 0; r < n; ++r) row.push_back(lower[r][c]);
        factor.push_back(std::move(row));
    }
    Json out;
    out["basis_change"] = std::move(factor);  // upper-triangular U = L^T
    out["residual_within_1e-12"] = residual <= 1e-12;
    return out;
}

Json conditions_to_json(const ConditionTriple& c) {
    Json out;
    out["extreme_transitive"] = c.extreme_transitive;
    out["pair_transitive"] = c.pair_transitive;
    out["two_decomposable"] = c.two_decomposable;
    out["evidence"] = c.evidence;
    return out;
}

Json characterization_to_json(const CharacterizationReport& rep) {
    Json out;
    Json conds;
    conds["extreme_transitive"] =
        Json{{"value", rep.extreme_transitive.value}, {"evidence", rep.extreme_transitive.evidence}};
    conds["pair_transitive"] =
        Json{{"value", rep.pair_transitive.value}, {"evidence", rep.pair_transitive.evidence}};
    conds["two_decomposable"] =
        Json{{"value", rep.two_decomposable.value}, {"evidence", rep.two_decomposable.evidence}};
    out["conditions"] = std::move(conds);
    if (rep.counterexample) {
        out["counterexample"] = *rep.counterexample;
    } else {
        out["counterexample"] = nullptr;
    }
    return out;
}

}  // namespace

Json analyze_report(const std::string& input_name, const LoadedPolytope& loaded,
                    std::uint64_t seed, std::size_t trials) {
    const VPolytope& poly = loaded.poly;
    Json report;
    report["report_version"] = 1;
    report["input"] = Json{{"name", input_name},
                           {"dim", poly.dim()},
                           {"vertex_count", poly.vertex_count()},
                           {"removed_points", point_list_to_json(loaded.removed)}};
    report["seed"] = seed;
    report["trials"] = trials;
    report["intrinsic_dim"] = poly.intrinsic_dim();
    report["vertices"] = point_list_to_json(poly.vertices());

    const AutomorphismGroup group = automorphism_group(poly);
    Json automorphisms = group_to_json(group, poly);
    automorphisms["vertex_transitive"] = is_vertex_transitive(group, poly);
    report["automorphism_group"] = std::move(automorphisms);

    const FixedPointReport fp = fixed_point(poly, group);
    report["fixed_point"] = Json{{"point", vec_to_json(fp.point)},
                                 {"unique", fp.unique},
                                 {"interior", fp.interior}};

    const Matrix gram = invariant_gram(group);
    report["invariant_gram"] =
        Json{{"matrix", matrix_to_json(gram)},
             {"positive_definite", leading_minors_positive(gram)},
             {"group_is_isometric_under_gram", verify_m_orthogonal(group, gram)},
             {"group_is_isometric_under_identity",
              verify_m_orthogonal(group, Matrix::identity(poly.dim()))},
             {"orthonormalization", cholesky_display(gram)}};

    const DistinguishableSets cache = max_distinguishable(poly);
    Json maximal = Json::array();
    for (const auto& s : cache.maximal) maximal.push_back(s);
    report["distinguishability"] = Json{{"max_size", cache.max_size},
                                        {"maximal_sets", std::move(maximal)},
                                        {"distinguishable_subsets", cache.all.size()}};

    const auto verdict = decomposability_verdict(poly, trials, seed, &cache);
    Json decomposability;
    decomposability["trials"] = verdict.trials;
    decomposability["decomposable_count"] = verdict.decomposable_count;
    decomposability["decomposable"] = !verdict.counterexample.has_value();
    decomposability["counterexample"] =
        verdict.counterexample ? vec_to_json(*verdict.counterexample) : Json(nullptr);
    report["decomposability"] = std::move(decomposability);

    report["classification"] = to_string(classify(poly));
    return report;
}

Json verify_report(const std::vector<CorpusItem>& corpus, std::size_t trials,
                   std::uint64_t seed) {
    const SuiteReport suite = classification_suite(corpus, trials, seed);
    Json report;
    report["report_version"] = 1;
    report["seed"] = seed;
    report["trials"] = trials;
    Json rows = Json::array();
    for (const auto& row : suite.rows) {
        Json r;
        r["name"] = row.name;
        r["kind"] = row.is_polytope ? "polytope" : "model";
        r["dim"] = row.dim;
        r["label"] = to_string(row.label);
        if (row.is_polytope) {
            r["vertex_count"] = row.vertex_numbers;
            r["automorphism_order"] = row.automorphism_order;
            r["vertex_transitive"] = row.vertex_transitive;
            r["max_distinguishable_size"] = row.max_distinguishable_size;
            r["sampled_decomposable"] = row.sampled_decomposable;
            r["decomposability_counterexample"] =
                row.decomposability_counterexample
                    ? vec_to_json(*row.decomposability_counterexample)
                    : Json(nullptr);
        }
        r["conditions"] = conditions_to_json(row.conditions);
        r["violations"] = row.violations;
        rows.push_back(std::move(r));
    }
    report["rows"] = std::move(rows);
    const RedundancyProbe probe = probe_pair_condition_redundancy(suite);
    report["redundancy_probe"] =
        Json{{"satisfying", probe.satisfying},
             {"counterexample", probe.counterexample ? Json(*probe.counterexample)
                                                     : Json(nullptr)}};
    report["violations"] = suite.violations;
    report["ok"] = suite.violations.empty() && !probe.counterexample;
    return report;
}

Json model_report(const BallModel& model, std::uint64_t seed) {
    Json out;
    out["report_version"] = 1;
    out["model"] = model.dim == 2 ? "disk" : "ball";
    out["dim"] = model.dim;
    out["tau"] = model.tau;
    out["seed"] = seed;
    out.update(characterization_to_json(characterization_report(model, seed)));
    return out;
}

Json model_report(const CylinderModel& model, std::uint64_t seed) {
    Json out;
    out["report_version"] = 1;
    out["model"] = "cylinder";
    out["dim"] = 3;
    out["tau"] = model.tau;
    out["seed"] = seed;
    out.update(characterization_to_json(characterization_report(model, seed)));
    return out;
}

namespace {

void render_value(const Json& value, const std::string& indent, std::ostringstream& out);

void render_object(const Json& value, const std::string& indent, std::ostringstream& out) {
    for (const auto& [key, entry] : value.items()) {
        out << indent << key << ":";
        if (entry.is_object() || (entry.is_array() && !entry.empty() &&
                                  (entry.front().is_object() || entry.front().is_array()))) {
            out << "\n";
            render_value(entry, indent + "  ", out);
        } else {
            out << " ";
            render_value(entry, "", out);
        }
    }
}

void render_value(const Json& value, const std::string& indent, std::ostringstream& out) {
    if (value.is_object()) {
        render_object(value, indent, out);
    } else if (value.is_array()) {
        if (value.empty()) {
            out << indent << "[]\n";
            return;
        }
        if (value.front().is_object() || value.front().is_array()) {
            for (const auto& entry : value) {
                if (entry.is_object()) {
                    out << indent << "-\n";
                    render_value(entry, indent + "  ", out);
                } else {
                    out << indent << "- " << entry.dump() << "\n";
                }
            }
        } else {
            out << indent << value.dump() << "\n";
        }
    } else {
        out << indent << value.dump() << "\n";
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream out;
    render_value(report, "", out);
    return out.str();
}

}  // namespace statespace
