#pragma once

#include "statespace/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace statespace {

/// Point of an analytic model: double coordinates plus the exact rational
/// coordinates when the caller has them (decimal CLI input is exact).
struct ModelPoint {
    std::vector<double> coords;
    std::optional<Vec> exact;

    static ModelPoint of(std::vector<double> coords) { return {std::move(coords), {}}; }
    static ModelPoint of_exact(Vec coords);
};

/// Unit ball centered at the origin; extreme set = unit sphere.
struct BallModel {
    std::size_t dim = 2;
    double tau = 1e-9;
};

/// Canonical cylinder {x^2 + y^2 <= 1, 0 <= z <= 1}; extreme set = the two
/// boundary circles.
struct CylinderModel {
    double tau = 1e-9;
};

struct ModelTerm {
    std::vector<double> point;
    double weight = 0;
    /// Present when the weight is derivable exactly from rational input.
    std::optional<Rational> exact_weight;
};

struct ModelDecomposition {
    std::vector<ModelTerm> terms;
};

/// Sphere points are distinguishable exactly when alone or mutually
/// antipodal: the tangent hyperplane at a sphere point touches only that
/// point, so parallel supporting hyperplanes exist only at antipodes.
/// Throws "not an extreme point of the ball" for off-sphere input.
bool ball_distinguishable(const BallModel& model, const std::vector<ModelPoint>& points);

/// Decomposition along the diameter through p; the center falls back to the
/// canonical axis +/- e1. Throws when |p| > 1 + tau.
ModelDecomposition ball_decompose(const BallModel& model, const ModelPoint& p);

/// Closed-form rule for the cylinder's extreme points: singletons; pairs
/// with one point on each boundary circle (the planes z=0, z=1 witness);
/// same-circle pairs antipodal in (x,y) (vertical tangent planes witness);
/// nothing of size >= 3. Throws "not an extreme point of the cylinder".
bool cylinder_distinguishable(const CylinderModel& model,
                              const std::vector<ModelPoint>& points);

/// Searches the distinguishable families in canonical order: singleton,
/// same-circle antipodal pair, then top-bottom pairs (the weight is forced
/// to the z-coordinate; the two unit endpoints are recovered by a circle
/// intersection). Throws when p is outside the cylinder.
std::optional<ModelDecomposition> cylinder_decompose(const CylinderModel& model,
                                                     const ModelPoint& p);

struct ConditionReport {
    bool value = false;
    std::string evidence;
};

/// The three ball-characterization conditions: transitivity on extreme
/// points, transitivity on ordered distinguishable pairs, and
/// 2-decomposability. Analytic verdicts backed by seeded sampling.
struct CharacterizationReport {
    ConditionReport extreme_transitive;
    ConditionReport pair_transitive;
    ConditionReport two_decomposable;
    std::optional<std::vector<double>> counterexample;
};

CharacterizationReport characterization_report(const BallModel& model, std::uint64_t seed);
CharacterizationReport characterization_report(const CylinderModel& model, std::uint64_t seed);

/// Uniform double in [0,1) from the top 53 bits; identical on every
/// platform for a fixed seed.
double uniform_unit(std::mt19937_64& rng);

/// Rejection-sampled point of the unit ball (optionally normalized to the
/// sphere); deterministic for a fixed seed.
std::vector<double> random_ball_point(std::size_t dim, std::mt19937_64& rng,
                                      bool on_sphere);

}  // namespace statespace
