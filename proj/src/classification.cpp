#include "statespace/classification.hpp"

#include <stdexcept>

namespace statespace {

std::string to_string(const ClassLabel& label) {
    switch (label.kind) {
        case ClassLabel::Kind::Simplex:
            return "Simplex(" + std::to_string(label.dim) + ")";
        case ClassLabel::Kind::VertexTransitivePolytope:
            return "VertexTransitivePolytope";
        case ClassLabel::Kind::AsymmetricPolytope:
            return "AsymmetricPolytope";
        case ClassLabel::Kind::Ball:
            return "Ball(" + std::to_string(label.dim) + ")";
        case ClassLabel::Kind::Disk:
            return "Disk";
        case ClassLabel::Kind::Cylinder:
            return "Cylinder";
    }
    return "?";
}

ClassLabel classify(const VPolytope& poly) {
    const std::size_t d = poly.intrinsic_dim();
    if (poly.vertex_count() == d + 1) {
        // d+1 extreme points of affine rank d are affinely independent.
        return {ClassLabel::Kind::Simplex, d};
    }
    const AutomorphismGroup group = automorphism_group(poly);
    if (is_vertex_transitive(group, poly)) {
        return {ClassLabel::Kind::VertexTransitivePolytope, d};
    }
    return {ClassLabel::Kind::AsymmetricPolytope, d};
}

ClassLabel classify(const BallModel& model) {
    if (model.dim == 2) return {ClassLabel::Kind::Disk, 2};
    return {ClassLabel::Kind::Ball, model.dim};
}

ClassLabel classify(const CylinderModel&) { return {ClassLabel::Kind::Cylinder, 3}; }

std::vector<CorpusItem> default_corpus() {
    std::vector<CorpusItem> corpus;
    corpus.push_back({"triangle", make_affinely_regular_polygon(3)});
    corpus.push_back({"square", make_affinely_regular_polygon(4)});
    corpus.push_back({"rectangle", VPolytope::from_vertices({
                                       {Rational(-1), Rational(-2)},
                                       {Rational(-1), Rational(2)},
                                       {Rational(1), Rational(-2)},
                                       {Rational(1), Rational(2)},
                                   })});
    corpus.push_back({"hexagon", make_affinely_regular_polygon(6)});
    corpus.push_back({"simplex3", make_simplex(3)});
    corpus.push_back({"cube", make_cube(3)});
    corpus.push_back({"cross_polytope3", make_cross_polytope(3)});
    corpus.push_back({"prism_square", make_prism(make_affinely_regular_polygon(4))});
    corpus.push_back({"prism_hexagon", make_prism(make_affinely_regular_polygon(6))});
    corpus.push_back({"random_polygon_a", make_random_polytope(2, 6, 101)});
    corpus.push_back({"random_polygon_b", make_random_polytope(2, 7, 202)});
    corpus.push_back({"random_polytope_c", make_random_polytope(3, 8, 303)});
    corpus.push_back({"disk", BallModel{2}});
    corpus.push_back({"ball3", BallModel{3}});
    corpus.push_back({"cylinder", CylinderModel{}});
    return corpus;
}

namespace {

SuiteRow polytope_row(const std::string& name, const VPolytope& poly,
                      std::size_t trials, std::uint64_t seed) {
    SuiteRow row;
    row.name = name;
    row.is_polytope = true;
    row.dim = poly.intrinsic_dim();
    row.vertex_numbers = poly.vertex_count();
    row.label = classify(poly);

    const AutomorphismGroup group = automorphism_group(poly);
    row.automorphism_order = group.order();
    row.vertex_transitive = is_vertex_transitive(group, poly);

    const DistinguishableSets cache = max_distinguishable(poly);
    row.max_distinguishable_size = cache.max_size;

    const auto full = decomposability_verdict(poly, trials, seed, &cache);
    row.sampled_decomposable = !full.counterexample.has_value();
    row.decomposability_counterexample = full.counterexample;

    std::vector<std::vector<std::size_t>> pairs;
    for (const auto& s : cache.all) {
        if (s.size() == 2) pairs.push_back(s);
    }
    const auto two = decomposability_verdict(poly, trials, seed, &cache, 2);
    row.conditions.extreme_transitive = row.vertex_transitive;
    row.conditions.pair_transitive = pair_transitive_distinguishable(group, pairs);
    row.conditions.two_decomposable = !two.counterexample.has_value();
    row.conditions.evidence = "transitivity exact; 2-decomposability sampled over " +
                              std::to_string(trials) + " seeded points";

    const bool is_simplex = row.label.kind == ClassLabel::Kind::Simplex;
    if (row.sampled_decomposable && !is_simplex) {
        row.violations.push_back(
            name + ": sampling found no counterexample on a non-simplex");
    }
    if (is_simplex && !row.sampled_decomposable) {
        row.violations.push_back(name + ": a simplex sample failed to decompose");
    }
    if (is_simplex && !row.vertex_transitive) {
        row.violations.push_back(name + ": simplex not vertex-transitive");
    }
    // A 1-simplex is the one-dimensional ball, so only higher-dimensional
    // polytopes may not satisfy all three conditions.
    if (row.dim >= 2 && row.conditions.extreme_transitive &&
        row.conditions.pair_transitive && row.conditions.two_decomposable) {
        row.violations.push_back(
            name + ": a polytope satisfies all three ball conditions");
    }
    return row;
}

SuiteRow model_row(const std::string& name, const CorpusObject& object,
                   std::uint64_t seed) {
    SuiteRow row;
    row.name = name;
    row.is_polytope = false;
    CharacterizationReport rep;
    bool expect_all = false;
    if (const auto* ball = std::get_if<BallModel>(&object)) {
        row.dim = ball->dim;
        row.label = classify(*ball);
        rep = characterization_report(*ball, seed);
        expect_all = true;
    } else {
        row.dim = 3;
        row.label = classify(std::get<CylinderModel>(object));
        rep = characterization_report(std::get<CylinderModel>(object), seed);
    }
    row.conditions.extreme_transitive = rep.extreme_transitive.value;
    row.conditions.pair_transitive = rep.pair_transitive.value;
    row.conditions.two_decomposable = rep.two_decomposable.value;
    row.conditions.evidence = rep.extreme_transitive.evidence + " | " +
                              rep.pair_transitive.evidence + " | " +
                              rep.two_decomposable.evidence;
    const bool all = row.conditions.extreme_transitive &&
                     row.conditions.pair_transitive && row.conditions.two_decomposable;
    if (expect_all && !all) {
        row.violations.push_back(name + ": a ball fails a ball condition");
    }
    if (!expect_all && all) {
        row.violations.push_back(name + ": the cylinder satisfies all three ball conditions");
    }
    return row;
}

}  // namespace

SuiteReport classification_suite(const std::vector<CorpusItem>& corpus,
                                 std::size_t trials, std::uint64_t seed) {
    SuiteReport report;
    report.trials = trials;
    report.seed = seed;
    for (const auto& item : corpus) {
        if (const auto* poly = std::get_if<VPolytope>(&item.object)) {
            report.rows.push_back(polytope_row(item.name, *poly, trials, seed));
        } else {
            report.rows.push_back(model_row(item.name, item.object, seed));
        }
        for (const auto& v : report.rows.back().violations) {
            report.violations.push_back(v);
        }
    }
    return report;
}

RedundancyProbe probe_pair_condition_redundancy(const SuiteReport& report) {
    RedundancyProbe probe;
    for (const auto& row : report.rows) {
        if (!(row.conditions.extreme_transitive && row.conditions.two_decomposable)) {
            continue;
        }
        probe.satisfying.push_back(row.name);
        const bool ball_like = row.label.kind == ClassLabel::Kind::Ball ||
                               row.label.kind == ClassLabel::Kind::Disk ||
                               (row.label.kind == ClassLabel::Kind::Simplex && row.dim == 1);
        if (!ball_like && !probe.counterexample) probe.counterexample = row.name;
    }
    return probe;
}

}  // namespace statespace
