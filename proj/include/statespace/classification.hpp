#pragma once

#include "statespace/distinguish.hpp"
#include "statespace/models.hpp"
#include "statespace/polytope.hpp"
#include "statespace/symmetry.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace statespace {

struct ClassLabel {
    enum class Kind {
        Simplex,
        VertexTransitivePolytope,
        AsymmetricPolytope,
        Ball,
        Disk,
        Cylinder,
    };
    Kind kind;
    std::size_t dim = 0;

    bool operator==(const ClassLabel&) const = default;
};

std::string to_string(const ClassLabel& label);

/// Polytopes: Simplex iff vertex count equals intrinsic dimension + 1;
/// otherwise vertex-transitive or asymmetric by the automorphism group
/// (full-dimensional input required for the group computation).
ClassLabel classify(const VPolytope& poly);
ClassLabel classify(const BallModel& model);
ClassLabel classify(const CylinderModel& model);

using CorpusObject = std::variant<VPolytope, BallModel, CylinderModel>;

struct CorpusItem {
    std::string name;
    CorpusObject object;
};

/// The fixed evaluation corpus: exact polygons and polytopes, two prisms,
/// three seeded random polytopes, the disk, the 3-ball and the cylinder.
std::vector<CorpusItem> default_corpus();

struct ConditionTriple {
    bool extreme_transitive = false;
    bool pair_transitive = false;
    bool two_decomposable = false;
    std::string evidence;
};

struct SuiteRow {
    std::string name;
    bool is_polytope = false;
    std::size_t dim = 0;
    ClassLabel label{ClassLabel::Kind::Simplex, 0};
    // Polytope-only fields.
    std::size_t vertex_numbers = 0;
    std::size_t automorphism_order = 0;
    bool vertex_transitive = false;
    std::size_t max_distinguishable_size = 0;
    bool sampled_decomposable = false;
    std::optional<Point> decomposability_counterexample;
    ConditionTriple conditions;
    std::vector<std::string> violations;
};

struct SuiteReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<SuiteRow> rows;
    /// Flattened list over all rows; empty iff every consistency
    /// implication held.
    std::vector<std::string> violations;
};

/// Runs the per-item checks: the sampled-decomposability/simplex
/// implication both ways, and the three ball-characterization conditions
/// (exact for polytopes, analytic plus sampling for the models) with the
/// requirement that only balls satisfy all three.
SuiteReport classification_suite(const std::vector<CorpusItem>& corpus,
                                 std::size_t trials, std::uint64_t seed);

struct RedundancyProbe {
    /// Names of corpus items satisfying extreme-transitivity together with
    /// 2-decomposability.
    std::vector<std::string> satisfying;
    /// Satisfying items that are not balls (nor the degenerate segment):
    /// would witness that the pair condition is not redundant.
    std::optional<std::string> counterexample;
};

/// Probes whether extreme-transitivity plus 2-decomposability already pins
/// down the balls on this corpus (the pair condition would then be
/// redundant). One-dimensional simplices count as balls.
RedundancyProbe probe_pair_condition_redundancy(const SuiteReport& report);

}  // namespace statespace
