#pragma once

#include "statespace/geometry.hpp"
#include "statespace/polytope.hpp"
#include "statespace/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace statespace {

/// Certificate that a list of points is jointly distinguishable by one
/// measurement: one affine effect per point, each nonnegative on the whole
/// polytope, summing identically to 1, with effect i equal to 1 at point i
/// (which forces it to 0 at the other points).
struct DistinguishabilityWitness {
    std::vector<AffineFunctional> effects;
};

/// The dual geometric certificate: one supporting hyperplane per point,
/// where hyperplane i contains every point except point i, and the normals
/// admit a linear dependence with every coefficient nonzero.
struct HyperplaneWitness {
    std::vector<Hyperplane> hyperplanes;
    Vec dependence;
};

struct WeightedVertex {
    Point vertex;
    Rational weight;
};

/// A convex combination of distinguishable extreme points with strictly
/// positive weights reproducing the decomposed point exactly.
struct Decomposition {
    std::vector<WeightedVertex> terms;
};

/// Decides distinguishability of points of the polytope by one exact LP
/// over the effect coefficients. Returns the witness when feasible.
/// Throws "point not in set" when a point lies outside the polytope, and
/// std::invalid_argument on duplicated points.
std::optional<DistinguishabilityWitness> distinguishable(const VPolytope& poly,
                                                         const std::vector<Point>& points);

/// Exact re-check of every witness invariant.
bool verify_distinguishability_witness(const VPolytope& poly,
                                       const std::vector<Point>& points,
                                       const DistinguishabilityWitness& witness);

/// Converts an effect witness (>= 2 points) into the hyperplane form:
/// hyperplane i is the zero set of effect i, and the dependence
/// coefficients are read off the gradients' vanishing sum. The result is
/// guaranteed to pass verify_hyperplane_witness.
HyperplaneWitness hyperplane_witness_from_effects(const VPolytope& poly,
                                                  const std::vector<Point>& points,
                                                  const DistinguishabilityWitness& witness);

struct WitnessCheck {
    bool ok = false;
    std::string reason;  // empty when ok
};

/// Exact structural verification of a hyperplane witness: each hyperplane
/// supports the polytope, misses exactly its own point, contains the
/// others; the normals are linearly dependent while every proper subset of
/// them is independent.
WitnessCheck verify_hyperplane_witness(const VPolytope& poly,
                                       const std::vector<Point>& points,
                                       const HyperplaneWitness& witness);

/// Every distinguishable vertex-index subset of the polytope, found by
/// breadth-first enumeration over sizes with monotonicity pruning (a set
/// can only be distinguishable if all its subsets are).
struct DistinguishableSets {
    std::size_t max_size = 0;
    /// All maximum-size distinguishable subsets (sorted index tuples).
    std::vector<std::vector<std::size_t>> maximal;
    /// Every distinguishable subset, ordered by size then lexicographically.
    std::vector<std::vector<std::size_t>> all;
};

/// Exhaustive search up to size dim+2. Sizes beyond dim+1 can never be
/// distinguishable; finding one throws std::logic_error, as does reaching
/// size dim+1 on a non-simplex.
DistinguishableSets max_distinguishable(const VPolytope& poly);

/// First decomposition of p over distinguishable vertex subsets in
/// canonical order (size, then lexicographic), or nothing. Zero weights are
/// dropped and the support re-checked. Throws "point not in set" when p is
/// outside.
std::optional<Decomposition> decompose(const VPolytope& poly, const Point& p,
                                       const DistinguishableSets* cache = nullptr);

/// Exhaustive listing over all distinguishable supports.
std::vector<Decomposition> decompose_all(const VPolytope& poly, const Point& p,
                                         const DistinguishableSets* cache = nullptr);

struct DecomposabilityReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t decomposable_count = 0;
    std::optional<Point> counterexample;
};

/// Samples seeded relative-interior points and attempts to decompose each;
/// with max_support < dim+1 the decomposition search is truncated to
/// supports of that size (used for the 2-decomposability probes).
DecomposabilityReport decomposability_verdict(const VPolytope& poly, std::size_t trials,
                                              std::uint64_t seed,
                                              const DistinguishableSets* cache = nullptr,
                                              std::size_t max_support = 0);

bool verify_decomposition(const VPolytope& poly, const Point& p, const Decomposition& d);

}  // namespace statespace
