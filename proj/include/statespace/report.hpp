#pragma once

#include "statespace/classification.hpp"
#include "statespace/json_io.hpp"

#include <cstdint>
#include <string>

namespace statespace {

/// Full single-polytope analysis: extreme points, automorphism group,
/// transitivity, fixed point, invariant Gram, maximal distinguishable sets,
/// sampled decomposability and the classification label.
Json analyze_report(const std::string& input_name, const LoadedPolytope& loaded,
                    std::uint64_t seed, std::size_t trials);

/// Corpus-wide consistency run (classification suite + redundancy probe).
/// `ok` ends up false iff any implication was violated.
Json verify_report(const std::vector<CorpusItem>& corpus, std::size_t trials,
                   std::uint64_t seed);

/// Characterization report of an analytic model as JSON.
Json model_report(const BallModel& model, std::uint64_t seed);
Json model_report(const CylinderModel& model, std::uint64_t seed);

/// Plain-text rendering of any report produced above.
std::string render_text(const Json& report);

}  // namespace statespace
