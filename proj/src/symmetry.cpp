#include "statespace/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace statespace {

namespace {

using Permutation = std::vector<std::size_t>;

Permutation compose_perms(const Permutation& a, const Permutation& b) {
    // Permutation of "apply b, then a", matching compose(map_a, map_b).
    Permutation r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Permutation invert_perm(const Permutation& a) {
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = i;
    return r;
}

void verify_group_axioms(const AutomorphismGroup& group) {
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < group.order(); ++i) {
        index[group.vertex_permutations[i]] = i;
    }
    if (index.size() != group.order()) {
        throw std::logic_error("automorphism group: duplicate elements");
    }
    Permutation id(group.vertex_permutations.front().size());
    std::iota(id.begin(), id.end(), 0);
    if (!index.count(id)) throw std::logic_error("automorphism group: identity missing");
    for (std::size_t i = 0; i < group.order(); ++i) {
        if (!index.count(invert_perm(group.vertex_permutations[i]))) {
            throw std::logic_error("automorphism group: inverse missing");
        }
        for (std::size_t j = 0; j < group.order(); ++j) {
            const auto it = index.find(
                compose_perms(group.vertex_permutations[i], group.vertex_permutations[j]));
            if (it == index.end()) {
                throw std::logic_error("automorphism group: not closed");
            }
            // The affine maps must compose consistently with the
            // permutations; an affine map is determined by its vertex images.
            const AffineMap composed = compose(group.elements[i], group.elements[j]);
            if (!(composed == group.elements[it->second])) {
                throw std::logic_error("automorphism group: map/permutation mismatch");
            }
        }
    }
}

}  // namespace

AutomorphismGroup automorphism_group(const VPolytope& poly) {
    if (!poly.is_full_dimensional()) {
        throw std::invalid_argument("not full-dimensional; re-embed");
    }
    const std::size_t n = poly.dim();
    const auto& verts = poly.vertices();
    const std::size_t vcount = verts.size();

    // Greedy affine frame of n+1 vertices.
    std::vector<std::size_t> frame;
    std::vector<Point> frame_points;
    for (std::size_t i = 0; i < vcount && frame.size() < n + 1; ++i) {
        frame_points.push_back(verts[i]);
        if (affine_rank(frame_points) == frame_points.size() - 1) {
            frame.push_back(i);
        } else {
            frame_points.pop_back();
        }
    }
    if (frame.size() != n + 1) {
        throw std::invalid_argument("not full-dimensional; re-embed");
    }
    // Precompute the inverse of the frame-difference matrix: the candidate
    // linear part is ImageDiffs * inverse(FrameDiffs).
    std::vector<Vec> frame_diffs;
    for (std::size_t i = 1; i <= n; ++i) {
        frame_diffs.push_back(frame_points[i] - frame_points[0]);
    }
    const Matrix frame_inv = *inverse(Matrix::from_columns(frame_diffs));

    std::map<Point, std::size_t> vertex_index;
    for (std::size_t i = 0; i < vcount; ++i) vertex_index[verts[i]] = i;
    const Point center = poly.barycenter();

    AutomorphismGroup group;
    std::vector<std::size_t> tuple;
    std::vector<bool> used(vcount, false);
    const auto try_tuple = [&]() {
        std::vector<Vec> image_diffs;
        for (std::size_t i = 1; i <= n; ++i) {
            image_diffs.push_back(verts[tuple[i]] - verts[tuple[0]]);
        }
        const Matrix linear = Matrix::from_columns(image_diffs) * frame_inv;
        const Vec translation = verts[tuple[0]] - linear * frame_points[0];
        const AffineMap candidate{linear, translation};
        // Necessary condition, cheap to test first: the barycenter is fixed.
        if (candidate(center) != center) return;
        Permutation perm(vcount);
        std::vector<bool> hit(vcount, false);
        for (std::size_t i = 0; i < vcount; ++i) {
            const auto it = vertex_index.find(candidate(verts[i]));
            if (it == vertex_index.end() || hit[it->second]) return;
            hit[it->second] = true;
            perm[i] = it->second;
        }
        group.elements.push_back(candidate);
        group.vertex_permutations.push_back(std::move(perm));
    };
    const auto enumerate = [&](auto&& self) -> void {
        if (tuple.size() == n + 1) {
            try_tuple();
            return;
        }
        for (std::size_t i = 0; i < vcount; ++i) {
            if (used[i]) continue;
            used[i] = true;
            tuple.push_back(i);
            self(self);
            tuple.pop_back();
            used[i] = false;
        }
    };
    enumerate(enumerate);

    // Canonical order: lexicographic on the induced vertex permutation.
    std::vector<std::size_t> order(group.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return group.vertex_permutations[a] < group.vertex_permutations[b];
    });
    AutomorphismGroup sorted;
    for (auto i : order) {
        sorted.elements.push_back(group.elements[i]);
        sorted.vertex_permutations.push_back(group.vertex_permutations[i]);
    }
    verify_group_axioms(sorted);
    return sorted;
}

std::vector<std::vector<std::size_t>> vertex_orbits(const AutomorphismGroup& group,
                                                    std::size_t vertex_count) {
    std::vector<std::size_t> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& perm : group.vertex_permutations) {
        for (std::size_t i = 0; i < vertex_count; ++i) {
            const std::size_t a = find(i);
            const std::size_t b = find(perm[i]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < vertex_count; ++i) buckets[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> orbits;
    for (auto& [root, members] : buckets) orbits.push_back(std::move(members));
    return orbits;
}

bool is_vertex_transitive(const AutomorphismGroup& group, const VPolytope& poly) {
    return vertex_orbits(group, poly.vertex_count()).size() == 1;
}

FixedPointReport fixed_point(const VPolytope& poly, const AutomorphismGroup& group) {
    FixedPointReport report;
    report.point = poly.barycenter();
    for (const auto& g : group.elements) {
        if (g(report.point) != report.point) {
            throw std::logic_error("barycenter not fixed by an automorphism");
        }
    }
    // The fixed set is point + kernel of sum(L_g - I); the averaging
    // projector argument makes this kernel exactly the common fixed
    // subspace of the group.
    const std::size_t n = poly.dim();
    Matrix sum(n, n);
    for (const auto& g : group.elements) {
        sum = sum + (g.linear - Matrix::identity(n));
    }
    report.unique = kernel_basis(sum).empty();
    report.interior =
        contains(poly, report.point).location == Containment::RelativeInterior;
    return report;
}

Matrix invariant_gram(const AutomorphismGroup& group) {
    if (group.order() == 0) throw std::invalid_argument("empty group");
    const std::size_t n = group.elements.front().dim();
    Matrix sum(n, n);
    for (const auto& g : group.elements) {
        sum = sum + g.linear.transposed() * g.linear;
    }
    const Rational inv = Rational(1) / Rational(static_cast<long>(group.order()));
    return inv * sum;
}

bool verify_m_orthogonal(const AutomorphismGroup& group, const Matrix& gram) {
    for (const auto& g : group.elements) {
        if (!(g.linear.transposed() * gram * g.linear == gram)) return false;
    }
    return true;
}

bool pair_transitive_distinguishable(const AutomorphismGroup& group,
                                     const std::vector<std::vector<std::size_t>>& pairs) {
    std::set<std::pair<std::size_t, std::size_t>> ordered;
    for (const auto& p : pairs) {
        if (p.size() != 2) throw std::invalid_argument("pairs must have size 2");
        ordered.insert({p[0], p[1]});
        ordered.insert({p[1], p[0]});
    }
    if (ordered.size() <= 1) return true;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
    for (const auto& p : ordered) id.emplace(p, id.size());
    std::vector<std::size_t> parent(id.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& perm : group.vertex_permutations) {
        for (const auto& [pair, idx] : id) {
            const std::pair<std::size_t, std::size_t> image{perm[pair.first],
                                                            perm[pair.second]};
            const auto it = id.find(image);
            if (it == id.end()) {
                // Automorphisms preserve distinguishability, so the image of
                // a distinguishable pair must itself be in the list.
                throw std::logic_error("group action does not preserve distinguishable pairs");
            }
            const std::size_t a = find(idx);
            const std::size_t b = find(it->second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
    return roots.size() == 1;
}

std::vector<std::size_t> greedy_generators(const AutomorphismGroup& group) {
    std::set<Permutation> generated;
    Permutation id(group.vertex_permutations.front().size());
    std::iota(id.begin(), id.end(), 0);
    generated.insert(id);
    std::vector<std::size_t> generators;
    const auto close = [&]() {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<Permutation> current(generated.begin(), generated.end());
            for (const auto& a : current) {
                for (auto gi : generators) {
                    const auto c = compose_perms(group.vertex_permutations[gi], a);
                    if (generated.insert(c).second) grew = true;
                }
            }
        }
    };
    for (std::size_t i = 0; i < group.order(); ++i) {
        if (generated.size() == group.order()) break;
        if (generated.count(group.vertex_permutations[i])) continue;
        generators.push_back(i);
        close();
    }
    return generators;
}

}  // namespace statespace
