#include "statespace/polytope.hpp"

#include "statespace/linprog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace statespace {

namespace {

void require_uniform_dimension(const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    for (const auto& p : points) {
        if (p.size() != points.front().size()) {
            throw std::invalid_argument("dimension mismatch");
        }
    }
}

// Feasibility of p in the convex hull of `generators`.
std::optional<Vec> hull_weights(const std::vector<Point>& generators, const Point& p) {
    const std::size_t k = generators.size();
    const std::size_t n = p.size();
    LinearProgram lp(k);
    lp.eq(Vec(k, Rational(1)), Rational(1));
    for (std::size_t c = 0; c < n; ++c) {
        Vec row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = generators[i][c];
        lp.eq(std::move(row), p[c]);
    }
    for (std::size_t i = 0; i < k; ++i) {
        Vec row(k, Rational(0));
        row[i] = 1;
        lp.ge(std::move(row), Rational(0));
    }
    return feasible_point(lp.num_vars, lp.constraints);
}

}  // namespace

std::vector<Point> extreme_points(const std::vector<Point>& points) {
    require_uniform_dimension(points);
    std::set<Point> distinct(points.begin(), points.end());
    std::vector<Point> candidates(distinct.begin(), distinct.end());
    std::vector<Point> survivors;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::vector<Point> others;
        others.reserve(candidates.size() - 1);
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            if (j != i) others.push_back(candidates[j]);
        }
        if (others.empty() || !hull_weights(others, candidates[i])) {
            survivors.push_back(candidates[i]);
        }
    }
    // std::set iteration is already lexicographic; keep it explicit anyway.
    std::sort(survivors.begin(), survivors.end());
    return survivors;
}

VPolytope VPolytope::from_vertices(std::vector<Point> vertices) {
    require_uniform_dimension(vertices);
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i] == vertices[i - 1]) {
            throw std::invalid_argument("duplicate vertex");
        }
    }
    const std::vector<Point> reduced = extreme_points(vertices);
    if (reduced.size() != vertices.size()) {
        throw std::invalid_argument("vertex list contains non-extreme points");
    }
    VPolytope poly;
    poly.dim_ = vertices.front().size();
    poly.intrinsic_dim_ = affine_rank(vertices);
    poly.vertices_ = std::move(vertices);
    return poly;
}

VPolytope VPolytope::hull_of(const std::vector<Point>& points) {
    return from_vertices(extreme_points(points));
}

Point VPolytope::barycenter() const {
    Vec sum(dim_, Rational(0));
    for (const auto& v : vertices_) sum = sum + v;
    const Rational inv = Rational(1) / Rational(static_cast<long>(vertices_.size()));
    return inv * sum;
}

ContainmentVerdict contains(const VPolytope& poly, const Point& p) {
    if (p.size() != poly.dim()) throw std::invalid_argument("dimension mismatch");
    const auto& verts = poly.vertices();
    const auto base = hull_weights(verts, p);
    if (!base) return ContainmentVerdict{Containment::Outside, {}};

    // Basis of the affine hull's direction space: the nonzero rows of the
    // echelonized difference matrix span it; we re-derive it via rank by
    // peeling independent difference vectors greedily.
    std::vector<Vec> directions;
    {
        std::vector<Vec> chosen;
        for (std::size_t i = 1; i < verts.size(); ++i) {
            chosen.push_back(verts[i] - verts[0]);
            if (rank(Matrix::from_rows(chosen)) != chosen.size()) {
                chosen.pop_back();
            }
        }
        directions = std::move(chosen);
    }

    const std::size_t k = verts.size();
    for (const auto& d : directions) {
        for (const int sign : {1, -1}) {
            // max t s.t. p + sign*t*d in hull, 0 <= t <= 1.
            LinearProgram lp(k + 1);
            Vec ones(k + 1, Rational(1));
            ones[k] = 0;
            lp.eq(std::move(ones), Rational(1));
            for (std::size_t c = 0; c < poly.dim(); ++c) {
                Vec row(k + 1);
                for (std::size_t i = 0; i < k; ++i) row[i] = verts[i][c];
                row[k] = Rational(-sign) * d[c];
                lp.eq(std::move(row), p[c]);
            }
            for (std::size_t i = 0; i <= k; ++i) {
                Vec row(k + 1, Rational(0));
                row[i] = 1;
                lp.ge(std::move(row), Rational(0));
            }
            {
                Vec row(k + 1, Rational(0));
                row[k] = 1;
                lp.le(std::move(row), Rational(1));
            }
            Vec objective(k + 1, Rational(0));
            objective[k] = 1;
            lp.maximize(std::move(objective));
            const auto outcome = solve(lp);
            const auto* f = std::get_if<LPFeasible>(&outcome);
            if (!f) throw std::logic_error("interiority probe must be feasible");
            if (*f->objective_value == 0) {
                return ContainmentVerdict{Containment::Boundary, *base};
            }
        }
    }
    return ContainmentVerdict{Containment::RelativeInterior, *base};
}

bool in_hull(const VPolytope& poly, const Point& p) {
    if (p.size() != poly.dim()) throw std::invalid_argument("dimension mismatch");
    return hull_weights(poly.vertices(), p).has_value();
}

std::optional<Hyperplane> supporting_hyperplane(const VPolytope& poly,
                                                const std::vector<Point>& contain,
                                                const std::vector<Point>& exclude) {
    if (contain.empty()) throw std::invalid_argument("empty point set");
    for (const auto& p : contain) {
        if (p.size() != poly.dim()) throw std::invalid_argument("dimension mismatch");
        for (const auto& q : exclude) {
            if (q.size() != poly.dim()) throw std::invalid_argument("dimension mismatch");
            if (p == q) throw std::invalid_argument("contain and exclude sets overlap");
        }
    }
    const std::size_t n = poly.dim();
    // Variables: normal v (n entries), then the level c.
    const auto base_lp = [&]() {
        LinearProgram lp(n + 1);
        for (const auto& p : contain) {
            Vec row(n + 1);
            for (std::size_t c = 0; c < n; ++c) row[c] = p[c];
            row[n] = -1;
            lp.eq(std::move(row), Rational(0));
        }
        for (const auto& q : poly.vertices()) {
            Vec row(n + 1);
            for (std::size_t c = 0; c < n; ++c) row[c] = q[c];
            row[n] = -1;
            lp.le(std::move(row), Rational(0));
        }
        for (const auto& r : exclude) {
            Vec row(n + 1);
            for (std::size_t c = 0; c < n; ++c) row[c] = r[c];
            row[n] = -1;
            lp.le(std::move(row), Rational(-1));
        }
        return lp;
    };
    const auto to_hyperplane = [&](const Vec& assignment) {
        Vec normal(assignment.begin(), assignment.begin() + n);
        return Hyperplane::make(std::move(normal), assignment[n]);
    };
    if (!exclude.empty()) {
        // The exclusion rows already force a nonzero normal.
        const LinearProgram lp = base_lp();
        if (const auto x = feasible_point(lp.num_vars, lp.constraints)) {
            return to_hyperplane(*x);
        }
        return std::nullopt;
    }
    for (std::size_t d = 0; d < n; ++d) {
        for (const int sign : {1, -1}) {
            LinearProgram lp = base_lp();
            Vec row(n + 1, Rational(0));
            row[d] = 1;
            lp.eq(std::move(row), Rational(sign));
            if (const auto x = feasible_point(lp.num_vars, lp.constraints)) {
                return to_hyperplane(*x);
            }
        }
    }
    return std::nullopt;
}

VPolytope make_simplex(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    std::vector<Point> vertices;
    vertices.push_back(Vec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(n, Rational(0));
        v[i] = 1;
        vertices.push_back(std::move(v));
    }
    return VPolytope::from_vertices(std::move(vertices));
}

VPolytope make_cube(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    std::vector<Point> vertices;
    for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << n); ++mask) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = (mask >> i) & 1 ? Rational(1) : Rational(-1);
        }
        vertices.push_back(std::move(v));
    }
    return VPolytope::from_vertices(std::move(vertices));
}

VPolytope make_cross_polytope(std::size_t n) {
    if (n == 0) throw std::invalid_argument("dimension must be positive");
    std::vector<Point> vertices;
    for (std::size_t i = 0; i < n; ++i) {
        for (const int s : {1, -1}) {
            Vec v(n, Rational(0));
            v[i] = s;
            vertices.push_back(std::move(v));
        }
    }
    return VPolytope::from_vertices(std::move(vertices));
}

VPolytope make_affinely_regular_polygon(std::size_t m) {
    // Rational rotations exist only for orders 1, 2, 3, 4, 6; the polygon
    // generators are the three nontrivial ones.
    Matrix rot(2, 2);
    switch (m) {
        case 3:
            rot.at(0, 0) = 0; rot.at(0, 1) = -1;
            rot.at(1, 0) = 1; rot.at(1, 1) = -1;
            break;
        case 4:
            rot.at(0, 0) = 0; rot.at(0, 1) = -1;
            rot.at(1, 0) = 1; rot.at(1, 1) = 0;
            break;
        case 6:
            rot.at(0, 0) = 1; rot.at(0, 1) = -1;
            rot.at(1, 0) = 1; rot.at(1, 1) = 0;
            break;
        default:
            throw std::invalid_argument(
                "no exact rational realization; use the models module or float corpus");
    }
    std::vector<Point> vertices;
    Vec v = {Rational(1), Rational(0)};
    for (std::size_t i = 0; i < m; ++i) {
        vertices.push_back(v);
        v = rot * v;
    }
    return VPolytope::from_vertices(std::move(vertices));
}

VPolytope make_prism(const VPolytope& base, const Rational& top) {
    if (base.dim() != 2 || base.intrinsic_dim() != 2) {
        throw std::invalid_argument("prism base must be 2-dimensional");
    }
    if (top == 0) throw std::invalid_argument("prism height must be nonzero");
    std::vector<Point> vertices;
    for (const auto& v : base.vertices()) {
        vertices.push_back({v[0], v[1], Rational(0)});
        vertices.push_back({v[0], v[1], top});
    }
    return VPolytope::from_vertices(std::move(vertices));
}

VPolytope make_random_polytope(std::size_t n, std::size_t count, std::uint64_t seed) {
    if (n == 0 || count == 0) throw std::invalid_argument("empty point set");
    std::mt19937_64 rng(seed);
    std::vector<Point> points;
    for (std::size_t i = 0; i < count; ++i) {
        Vec v(n);
        for (std::size_t c = 0; c < n; ++c) {
            // Avoid std::uniform_int_distribution: its output is
            // implementation-defined, plain modulo is reproducible.
            const long num = static_cast<long>(rng() % 41) - 20;
            const long den = static_cast<long>(rng() % 10) + 1;
            v[c] = Rational(num, den);
        }
        points.push_back(std::move(v));
    }
    return VPolytope::hull_of(points);
}

VPolytope transform(const AffineMap& map, const VPolytope& poly) {
    if (!inverse(map.linear)) throw std::invalid_argument("not invertible");
    std::vector<Point> images;
    images.reserve(poly.vertex_count());
    for (const auto& v : poly.vertices()) images.push_back(map(v));
    return VPolytope::from_vertices(std::move(images));
}

Point random_interior_point(const VPolytope& poly, std::mt19937_64& rng) {
    Vec weights(poly.vertex_count());
    Rational total = 0;
    for (auto& w : weights) {
        w = Rational(static_cast<long>(rng() % 100) + 1);
        total += w;
    }
    Vec p(poly.dim(), Rational(0));
    for (std::size_t i = 0; i < weights.size(); ++i) {
        p = p + (weights[i] / total) * poly.vertices()[i];
    }
    return p;
}

}  // namespace statespace
