#pragma once

#include "statespace/linalg.hpp"
#include "statespace/rational.hpp"

#include <cstddef>
#include <vector>

namespace statespace {

/// Affine functional x -> <gradient, x> + offset.
struct AffineFunctional {
    Vec gradient;
    Rational offset;

    Rational operator()(const Point& p) const { return dot(gradient, p) + offset; }
    bool operator==(const AffineFunctional&) const = default;
};

/// Affine self-map x -> linear * x + translation.
struct AffineMap {
    Matrix linear;
    Vec translation;

    Point operator()(const Point& p) const { return linear * p + translation; }
    std::size_t dim() const { return translation.size(); }
    bool operator==(const AffineMap&) const = default;

    static AffineMap identity(std::size_t n);
};

/// The set {x : <normal, x> = level}, stored in canonical scaling: the first
/// nonzero entry of the normal is 1, so equality of hyperplanes is plain
/// field equality. Unoriented.
struct Hyperplane {
    Vec normal;
    Rational level;

    bool contains(const Point& p) const { return dot(normal, p) == level; }
    bool operator==(const Hyperplane&) const = default;
    bool operator<(const Hyperplane& other) const {
        if (normal != other.normal) return normal < other.normal;
        return level < other.level;
    }

    /// Canonicalizes (and validates) a normal/level pair.
    /// Throws std::invalid_argument on a zero normal.
    static Hyperplane make(Vec normal, Rational level);
};

/// Dimension of the affine hull of the given points.
/// Throws on an empty input ("empty point set") or mixed ambient
/// dimensions ("dimension mismatch").
std::size_t affine_rank(const std::vector<Point>& points);

/// True iff affine_rank(points) == points.size() - 1.
bool is_affinely_independent(const std::vector<Point>& points);

/// The unique affine map sending frame[k] to images[k]. The frame must be
/// affinely independent and span the ambient space (n+1 points in
/// dimension n); otherwise throws "frame not affinely independent".
AffineMap affine_map_from_frame(const std::vector<Point>& frame,
                                const std::vector<Point>& images);

/// compose(a, b): apply b first, then a.
AffineMap compose(const AffineMap& a, const AffineMap& b);

/// Exact inverse; throws "not invertible" when the linear part is singular.
AffineMap invert(const AffineMap& a);

}  // namespace statespace
