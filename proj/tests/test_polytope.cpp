#include "statespace/polytope.hpp"

#include <doctest.h>

#include <random>

using namespace statespace;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

VPolytope unit_square() {
    return VPolytope::from_vertices({{q(-1), q(-1)},
                                     {q(-1), q(1)},
                                     {q(1), q(-1)},
                                     {q(1), q(1)}});
}

}  // namespace

TEST_CASE("extreme point extraction") {
    SUBCASE("square corners plus center") {
        const std::vector<Point> pts{{q(-1), q(-1)}, {q(-1), q(1)}, {q(1), q(-1)},
                                     {q(1), q(1)},   {q(0), q(0)}};
        const auto ext = extreme_points(pts);
        CHECK(ext.size() == 4);
        for (const auto& p : ext) CHECK_FALSE(p == Point{q(0), q(0)});
    }
    SUBCASE("collinear points reduce to endpoints") {
        const auto ext = extreme_points({{q(0), q(0)}, {q(1), q(0)}, {q(2), q(0)}});
        CHECK(ext == std::vector<Point>{{q(0), q(0)}, {q(2), q(0)}});
    }
    SUBCASE("cube vertices all retained") {
        const auto cube = make_cube(3);
        CHECK(extreme_points(cube.vertices()) == cube.vertices());
    }
    SUBCASE("idempotent and hull preserving") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Point> pts;
            for (int i = 0; i < 8; ++i) {
                pts.push_back({q(static_cast<long>(rng() % 9) - 4),
                               q(static_cast<long>(rng() % 9) - 4)});
            }
            const auto ext = extreme_points(pts);
            CHECK(extreme_points(ext) == ext);
            const auto poly = VPolytope::from_vertices(ext);
            for (const auto& p : pts) {
                const auto verdict = contains(poly, p);
                CHECK(verdict.location != Containment::Outside);
                // The certificate reproduces the point exactly.
                Vec combo(poly.dim(), q(0));
                Rational total = 0;
                for (std::size_t i = 0; i < verdict.weights.size(); ++i) {
                    combo = combo + verdict.weights[i] * poly.vertices()[i];
                    total += verdict.weights[i];
                    CHECK(verdict.weights[i] >= 0);
                }
                CHECK(total == 1);
                CHECK(combo == p);
            }
        }
    }
}

TEST_CASE("vertex validation") {
    CHECK_THROWS_AS(VPolytope::from_vertices({{q(0)}, {q(0)}}), std::invalid_argument);
    CHECK_THROWS_AS(VPolytope::from_vertices({{q(0), q(0)},
                                              {q(2), q(0)},
                                              {q(1), q(0)}}),
                    std::invalid_argument);
}

TEST_CASE("membership with interiority") {
    const auto triangle = make_simplex(2);
    SUBCASE("centroid is interior with uniform weights") {
        const Point centroid{q(1, 3), q(1, 3)};
        const auto verdict = contains(triangle, centroid);
        CHECK(verdict.location == Containment::RelativeInterior);
        CHECK(verdict.weights == Vec{q(1, 3), q(1, 3), q(1, 3)});
    }
    SUBCASE("vertices are boundary") {
        for (const auto& v : triangle.vertices()) {
            CHECK(contains(triangle, v).location == Containment::Boundary);
        }
    }
    SUBCASE("outside point") {
        CHECK(contains(unit_square(), {q(2), q(0)}).location == Containment::Outside);
    }
    SUBCASE("single-vertex polytope") {
        const auto point = VPolytope::from_vertices({{q(5), q(7)}});
        CHECK(contains(point, {q(5), q(7)}).location == Containment::RelativeInterior);
        CHECK(contains(point, {q(5), q(8)}).location == Containment::Outside);
    }
    SUBCASE("positive combinations of all vertices are relative-interior") {
        std::mt19937_64 rng(29);
        for (const auto& poly : {make_simplex(3), make_cube(2), make_cross_polytope(3)}) {
            for (int trial = 0; trial < 5; ++trial) {
                const auto p = random_interior_point(poly, rng);
                CHECK(contains(poly, p).location == Containment::RelativeInterior);
            }
        }
    }
    SUBCASE("boundary of a lower-dimensional face") {
        const auto square = unit_square();
        CHECK(contains(square, {q(1), q(0)}).location == Containment::Boundary);
        CHECK(contains(square, {q(0), q(0)}).location == Containment::RelativeInterior);
    }
}

TEST_CASE("supporting hyperplane queries") {
    const auto square = unit_square();
    const auto verify_conditions = [](const VPolytope& poly, const Hyperplane& h,
                                      const std::vector<Point>& contain,
                                      const std::vector<Point>& exclude) {
        for (const auto& p : contain) CHECK(dot(h.normal, p) == h.level);
        // Orientation: vertices weakly on one side, excluded points strictly
        // off beyond a unit of the canonical scale.
        Rational side = 0;
        for (const auto& v : poly.vertices()) {
            const Rational value = dot(h.normal, v) - h.level;
            if (value != 0) {
                CHECK((side == 0 || (side > 0) == (value > 0)));
                side = value;
            }
        }
        for (const auto& r : exclude) {
            const Rational value = dot(h.normal, r) - h.level;
            CHECK(value != 0);
            if (side != 0) CHECK((value > 0) == (side > 0));
        }
    };
    SUBCASE("corner against opposite corner") {
        const std::vector<Point> contain{{q(1), q(1)}};
        const std::vector<Point> exclude{{q(1), q(-1)}};
        const auto h = supporting_hyperplane(square, contain, exclude);
        REQUIRE(h);
        verify_conditions(square, *h, contain, exclude);
    }
    SUBCASE("diagonal pair admits no supporting hyperplane") {
        CHECK_FALSE(supporting_hyperplane(square, {{q(1), q(1)}, {q(-1), q(-1)}}, {}));
        // Cross-check: the midpoint of that diagonal is interior.
        CHECK(contains(square, {q(0), q(0)}).location == Containment::RelativeInterior);
    }
    SUBCASE("triangle edge") {
        const auto triangle = make_simplex(2);
        const std::vector<Point> edge{{q(0), q(1)}, {q(1), q(0)}};
        const auto h = supporting_hyperplane(triangle, edge, {{q(0), q(0)}});
        REQUIRE(h);
        // The hyperplane through both edge endpoints is the edge's line.
        CHECK(*h == Hyperplane::make({q(1), q(1)}, q(1)));
    }
    SUBCASE("single vertex with empty exclusion") {
        const auto h = supporting_hyperplane(square, {{q(1), q(1)}}, {});
        REQUIRE(h);
        verify_conditions(square, *h, {{q(1), q(1)}}, {});
    }
}

TEST_CASE("generators") {
    SUBCASE("hexagon orbit") {
        const auto hexagon = make_affinely_regular_polygon(6);
        const std::vector<Point> expected{{q(-1), q(-1)}, {q(-1), q(0)}, {q(0), q(-1)},
                                          {q(0), q(1)},   {q(1), q(0)},  {q(1), q(1)}};
        CHECK(hexagon.vertices() == expected);
    }
    SUBCASE("triangle and square orbits") {
        CHECK(make_affinely_regular_polygon(3).vertex_count() == 3);
        CHECK(make_affinely_regular_polygon(4).vertex_count() == 4);
    }
    SUBCASE("unrealizable orders rejected") {
        CHECK_THROWS_WITH_AS(make_affinely_regular_polygon(5),
                             "no exact rational realization; use the models module or float corpus",
                             std::invalid_argument);
        CHECK_THROWS_AS(make_affinely_regular_polygon(8), std::invalid_argument);
    }
    SUBCASE("simplex is affinely independent") {
        const auto s = make_simplex(3);
        CHECK(s.vertex_count() == 4);
        CHECK(is_affinely_independent(s.vertices()));
        CHECK(s.intrinsic_dim() == 3);
    }
    SUBCASE("prism over the square polygon") {
        const auto prism = make_prism(make_affinely_regular_polygon(4));
        CHECK(prism.vertex_count() == 8);
        CHECK(prism.dim() == 3);
        CHECK(prism.intrinsic_dim() == 3);
    }
    SUBCASE("prism rejects non-planar bases") {
        const auto segment = VPolytope::from_vertices({{q(0), q(0)}, {q(1), q(1)}});
        CHECK_THROWS_WITH_AS(make_prism(segment), "prism base must be 2-dimensional",
                             std::invalid_argument);
    }
    SUBCASE("cube and cross-polytope sizes") {
        CHECK(make_cube(2).vertex_count() == 4);
        CHECK(make_cube(3).vertex_count() == 8);
        CHECK(make_cross_polytope(3).vertex_count() == 6);
    }
    SUBCASE("random generation is deterministic in the seed") {
        const auto a = make_random_polytope(2, 6, 42);
        const auto b = make_random_polytope(2, 6, 42);
        CHECK(a == b);
        const auto c = make_random_polytope(2, 6, 43);
        CHECK_FALSE(a == c);
    }
}

TEST_CASE("affine transform of a polytope") {
    const auto square = unit_square();
    Matrix shear(2, 2);
    shear.at(0, 0) = q(1); shear.at(0, 1) = q(1);
    shear.at(1, 0) = q(0); shear.at(1, 1) = q(1);
    const auto image = transform(AffineMap{shear, {q(2), q(0)}}, square);
    CHECK(image.vertex_count() == 4);
    Matrix singular(2, 2);
    CHECK_THROWS_WITH_AS(transform(AffineMap{singular, Vec(2, q(0))}, square),
                         "not invertible", std::invalid_argument);
}
