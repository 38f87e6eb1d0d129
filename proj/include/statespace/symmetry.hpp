#pragma once

#include "statespace/distinguish.hpp"
#include "statespace/geometry.hpp"
#include "statespace/linalg.hpp"
#include "statespace/polytope.hpp"

#include <cstddef>
#include <vector>

namespace statespace {

/// The finite group of bijective affine self-maps permuting the vertex set,
/// in canonical order (lexicographic by induced vertex permutation). The
/// identity is element 0; closure and inverses are verified exactly at
/// construction time.
struct AutomorphismGroup {
    std::vector<AffineMap> elements;
    std::vector<std::vector<std::size_t>> vertex_permutations;

    std::size_t order() const { return elements.size(); }
};

/// Enumerates the group by mapping a fixed affine frame of vertices onto
/// every ordered vertex tuple and keeping the maps that permute the vertex
/// set. Requires a full-dimensional polytope ("not full-dimensional;
/// re-embed" otherwise).
AutomorphismGroup automorphism_group(const VPolytope& poly);

/// Orbits of the vertex indices under the group, each sorted, ordered by
/// smallest member.
std::vector<std::vector<std::size_t>> vertex_orbits(const AutomorphismGroup& group,
                                                    std::size_t vertex_count);

bool is_vertex_transitive(const AutomorphismGroup& group, const VPolytope& poly);

struct FixedPointReport {
    Point point;
    bool unique = false;
    bool interior = false;
};

/// The vertex barycenter: fixed by every element because automorphisms
/// permute the vertices. Uniqueness holds iff the common fixed subspace of
/// the linear parts is trivial; interiority is decided exactly.
FixedPointReport fixed_point(const VPolytope& poly, const AutomorphismGroup& group);

/// Group average of L^T L over the linear parts: an exact, positive
/// definite Gram matrix invariant under the whole group.
Matrix invariant_gram(const AutomorphismGroup& group);

/// True iff L^T M L = M exactly for every element: in the inner product
/// defined by M, the whole group acts by isometries.
bool verify_m_orthogonal(const AutomorphismGroup& group, const Matrix& gram);

/// True iff the diagonal group action on ordered distinguishable vertex
/// pairs has a single orbit. `pairs` are the distinguishable 2-subsets of
/// vertex indices (from max_distinguishable).
bool pair_transitive_distinguishable(const AutomorphismGroup& group,
                                     const std::vector<std::vector<std::size_t>>& pairs);

/// A minimal generating subset (greedy, in canonical element order);
/// element indices into group.elements.
std::vector<std::size_t> greedy_generators(const AutomorphismGroup& group);

}  // namespace statespace
