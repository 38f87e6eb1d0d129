#include "statespace/classification.hpp"

#include <doctest.h>

using namespace statespace;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

}  // namespace

TEST_CASE("classification labels") {
    CHECK(to_string(classify(make_simplex(2))) == "Simplex(2)");
    CHECK(to_string(classify(make_simplex(3))) == "Simplex(3)");
    CHECK(to_string(classify(make_affinely_regular_polygon(4))) ==
          "VertexTransitivePolytope");
    CHECK(to_string(classify(make_cube(3))) == "VertexTransitivePolytope");
    const auto bent = VPolytope::from_vertices({{q(-1), q(-1)},
                                                {q(-1), q(1)},
                                                {q(1), q(-1)},
                                                {q(2), q(1)}});
    CHECK(to_string(classify(bent)) == "AsymmetricPolytope");
    CHECK(to_string(classify(BallModel{2})) == "Disk");
    CHECK(to_string(classify(BallModel{3})) == "Ball(3)");
    CHECK(to_string(classify(BallModel{5})) == "Ball(5)");
    CHECK(to_string(classify(CylinderModel{})) == "Cylinder");
    // A segment is a 1-simplex even when embedded in the plane.
    CHECK(to_string(classify(VPolytope::from_vertices({{q(0), q(0)}, {q(1), q(1)}}))) ==
          "Simplex(1)");
}

TEST_CASE("default corpus composition") {
    const auto corpus = default_corpus();
    CHECK(corpus.size() == 15);
    std::size_t polytopes = 0, models = 0;
    for (const auto& item : corpus) {
        if (std::holds_alternative<VPolytope>(item.object)) {
            ++polytopes;
            const auto& poly = std::get<VPolytope>(item.object);
            CHECK(poly.is_full_dimensional());
            CHECK(poly.intrinsic_dim() >= 2);
        } else {
            ++models;
        }
    }
    CHECK(polytopes == 12);
    CHECK(models == 3);
}

TEST_CASE("classification suite holds on a fast sub-corpus") {
    std::vector<CorpusItem> corpus;
    corpus.push_back({"triangle", make_affinely_regular_polygon(3)});
    corpus.push_back({"square", make_affinely_regular_polygon(4)});
    corpus.push_back({"simplex3", make_simplex(3)});
    corpus.push_back({"disk", BallModel{2}});
    corpus.push_back({"cylinder", CylinderModel{}});
    const auto report = classification_suite(corpus, 40, 7);
    CHECK(report.violations.empty());

    REQUIRE(report.rows.size() == 5);
    const auto& triangle = report.rows[0];
    CHECK(triangle.label == ClassLabel{ClassLabel::Kind::Simplex, 2});
    CHECK(triangle.sampled_decomposable);
    CHECK(triangle.conditions.extreme_transitive);
    CHECK(triangle.conditions.pair_transitive);
    CHECK_FALSE(triangle.conditions.two_decomposable);

    const auto& square = report.rows[1];
    CHECK_FALSE(square.sampled_decomposable);
    CHECK(square.conditions.extreme_transitive);
    CHECK_FALSE(square.conditions.pair_transitive);
    CHECK_FALSE(square.conditions.two_decomposable);

    const auto& disk = report.rows[3];
    CHECK(disk.conditions.extreme_transitive);
    CHECK(disk.conditions.pair_transitive);
    CHECK(disk.conditions.two_decomposable);

    const auto& cylinder = report.rows[4];
    CHECK(cylinder.conditions.extreme_transitive);
    CHECK_FALSE(cylinder.conditions.two_decomposable);

    const auto probe = probe_pair_condition_redundancy(report);
    CHECK_FALSE(probe.counterexample);
    CHECK(probe.satisfying == std::vector<std::string>{"disk"});
}

TEST_CASE("redundancy probe flags the degenerate segment as a ball") {
    std::vector<CorpusItem> corpus;
    corpus.push_back({"segment", VPolytope::from_vertices({{q(0)}, {q(1)}})});
    corpus.push_back({"disk", BallModel{2}});
    const auto report = classification_suite(corpus, 20, 3);
    const auto probe = probe_pair_condition_redundancy(report);
    // The segment satisfies transitivity and 2-decomposability; being the
    // one-dimensional ball it is not a counterexample.
    CHECK(probe.satisfying == std::vector<std::string>{"segment", "disk"});
    CHECK_FALSE(probe.counterexample);
    CHECK(report.violations.empty());
}
