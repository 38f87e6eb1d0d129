#include "statespace/json_io.hpp"
#include "statespace/report.hpp"

#include <doctest.h>

using namespace statespace;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

}  // namespace

TEST_CASE("polytope document round trip") {
    const auto square = make_affinely_regular_polygon(4);
    const Json doc = polytope_to_json(square);
    CHECK(doc["dim"] == 2);
    CHECK(doc["vertices"].size() == 4);
    const auto loaded = polytope_from_json(doc);
    CHECK(loaded.poly == square);
    CHECK(loaded.removed.empty());
    CHECK(polytope_to_json(loaded.poly) == doc);
}

TEST_CASE("loading reduces to extreme points and notes removals") {
    const Json doc = {
        {"dim", 2},
        {"vertices", Json::array({Json::array({"-1", "-1"}), Json::array({"1", "-1"}),
                                  Json::array({"-1", "1"}), Json::array({"1", "1"}),
                                  Json::array({"0", "0"}), Json::array({"1/2", "1/2"})})}};
    const auto loaded = polytope_from_json(doc);
    CHECK(loaded.poly.vertex_count() == 4);
    CHECK(loaded.removed.size() == 2);
}

TEST_CASE("schema violations rejected") {
    CHECK_THROWS_AS(polytope_from_json(Json{{"vertices", Json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(polytope_from_json(Json{{"dim", 2}, {"vertices", Json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        polytope_from_json(Json{{"dim", 2},
                                {"vertices", Json::array({Json::array({"1"})})}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        polytope_from_json(Json{{"dim", 2},
                                {"vertices", Json::array({Json::array({"x", "y"})})}}),
        std::invalid_argument);
}

TEST_CASE("scalar vectors round trip") {
    const Vec v{q(1, 3), q(-7, 2), q(4)};
    CHECK(vec_from_json(vec_to_json(v)) == v);
    CHECK(vec_to_json(v).dump() == R"(["1/3","-7/2","4"])");
}

TEST_CASE("witness serialization") {
    const auto square = make_affinely_regular_polygon(4);
    const std::vector<Point> pair{{q(-1), q(0)}, {q(1), q(0)}};
    const auto w = distinguishable(square, pair);
    REQUIRE(w);
    const Json wj = witness_to_json(*w);
    CHECK(wj["effects"].size() == 2);
    const auto hw = hyperplane_witness_from_effects(square, pair, *w);
    const Json hj = witness_to_json(hw);
    CHECK(hj["hyperplanes"].size() == 2);
    CHECK(hj["dependence"].size() == 2);

    const auto d = decompose(square, {q(0), q(0)});
    REQUIRE(d);
    const Json dj = decomposition_to_json(*d);
    CHECK(dj["terms"].size() == 2);
    CHECK(dj["terms"][0]["weight"] == "1/2");
}

TEST_CASE("group serialization") {
    const auto square = make_affinely_regular_polygon(4);
    const auto group = automorphism_group(square);
    const Json gj = group_to_json(group, square);
    CHECK(gj["order"] == 8);
    CHECK(gj["orbits"].size() == 1);
    CHECK(gj["generators"].size() >= 1);
    CHECK(gj["invariant_gram"].size() == 2);
}

TEST_CASE("analyze report fields and determinism") {
    const auto loaded = polytope_from_json(polytope_to_json(make_affinely_regular_polygon(4)));
    const Json a = analyze_report("square", loaded, 11, 25);
    CHECK(a["report_version"] == 1);
    CHECK(a["seed"] == 11);
    CHECK(a["automorphism_group"]["order"] == 8);
    CHECK(a["automorphism_group"]["vertex_transitive"] == true);
    CHECK(a["fixed_point"]["unique"] == true);
    CHECK(a["fixed_point"]["interior"] == true);
    CHECK(a["invariant_gram"]["positive_definite"] == true);
    CHECK(a["invariant_gram"]["group_is_isometric_under_gram"] == true);
    CHECK(a["distinguishability"]["max_size"] == 2);
    CHECK(a["decomposability"]["decomposable"] == false);
    CHECK(a["classification"] == "VertexTransitivePolytope");
    const Json b = analyze_report("square", loaded, 11, 25);
    CHECK(a.dump() == b.dump());
    CHECK_FALSE(render_text(a).empty());
}

TEST_CASE("verify report on a sub-corpus") {
    std::vector<CorpusItem> corpus;
    corpus.push_back({"triangle", make_affinely_regular_polygon(3)});
    corpus.push_back({"ball3", BallModel{3}});
    const Json r1 = verify_report(corpus, 25, 11);
    const Json r2 = verify_report(corpus, 25, 11);
    CHECK(r1.dump() == r2.dump());
    CHECK(r1["ok"] == true);
    CHECK(r1["rows"].size() == 2);
}
