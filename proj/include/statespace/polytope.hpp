#pragma once

#include "statespace/geometry.hpp"
#include "statespace/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace statespace {

enum class Containment { Outside, Boundary, RelativeInterior };

struct ContainmentVerdict {
    Containment location = Containment::Outside;
    /// Convex-combination certificate over the polytope's vertices;
    /// empty when Outside. Weights are >= 0, sum to 1 and reproduce the
    /// query point exactly.
    Vec weights;
};

/// A polytope in V-representation: the list of its extreme points, kept in
/// lexicographic order. Construction validates that the points are pairwise
/// distinct and that none lies in the hull of the others.
class VPolytope {
  public:
    /// Validating constructor; throws std::invalid_argument when a point is
    /// redundant or duplicated.
    static VPolytope from_vertices(std::vector<Point> vertices);

    /// Convex-hull constructor: reduces an arbitrary point set with
    /// extreme_points first.
    static VPolytope hull_of(const std::vector<Point>& points);

    std::size_t dim() const { return dim_; }
    std::size_t intrinsic_dim() const { return intrinsic_dim_; }
    bool is_full_dimensional() const { return intrinsic_dim_ == dim_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }

    Point barycenter() const;

    bool operator==(const VPolytope&) const = default;

  private:
    VPolytope() = default;
    std::size_t dim_ = 0;
    std::size_t intrinsic_dim_ = 0;
    std::vector<Point> vertices_;
};

/// The unique minimal subset of `points` with the same convex hull,
/// in lexicographic order. A point is dropped iff it is an exact convex
/// combination of the remaining distinct points.
std::vector<Point> extreme_points(const std::vector<Point>& points);

/// Exact membership with interiority. A point is RelativeInterior iff it
/// can be moved by a positive step in both directions along every basis
/// direction of the affine hull while staying in the hull.
ContainmentVerdict contains(const VPolytope& poly, const Point& p);

/// Membership only (one feasibility LP, no interiority probes).
bool in_hull(const VPolytope& poly, const Point& p);

/// A hyperplane H = {<v,x> = c} with <v,p> = c for all p in `contain`,
/// <v,q> <= c for every vertex q, and the scale-normalized strict exclusion
/// <v,r> <= c - 1 for all r in `exclude`; nothing when no such hyperplane
/// exists. With `exclude` empty, the trivial zero normal is ruled out by
/// solving under the normalizations v_d = +/-1.
std::optional<Hyperplane> supporting_hyperplane(const VPolytope& poly,
                                                const std::vector<Point>& contain,
                                                const std::vector<Point>& exclude);

// Generator corpus. All vertex lists are exact.
VPolytope make_simplex(std::size_t n);
VPolytope make_cube(std::size_t n);
VPolytope make_cross_polytope(std::size_t n);

/// Orbit of (1,0) under the rational rotation of order m. Only m in
/// {3, 4, 6} admit exact rational realizations; anything else throws
/// "no exact rational realization; use the models module or float corpus".
VPolytope make_affinely_regular_polygon(std::size_t m);

/// Product base x {0, top}; the base must be a full-dimensional polygon.
VPolytope make_prism(const VPolytope& base, const Rational& top = Rational(1));

/// Hull of `count` points with small random rational coordinates drawn from
/// a seeded deterministic generator.
VPolytope make_random_polytope(std::size_t n, std::size_t count, std::uint64_t seed);

/// A seeded point with positive weights on every vertex: relative-interior
/// by construction.
Point random_interior_point(const VPolytope& poly, std::mt19937_64& rng);

/// Image polytope under an invertible affine map (extreme points map to
/// extreme points). Throws "not invertible" on a singular linear part.
VPolytope transform(const AffineMap& map, const VPolytope& poly);

}  // namespace statespace
