#include "statespace/distinguish.hpp"

#include "statespace/linprog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace statespace {

namespace {

// Variables of the distinguishability LP: for each point i a gradient
// block of n entries followed by the offset, so effect i occupies columns
// [i*(n+1), (i+1)*(n+1)).
std::optional<DistinguishabilityWitness> solve_effect_lp(const VPolytope& poly,
                                                         const std::vector<Point>& points) {
    const std::size_t n = poly.dim();
    const std::size_t k = points.size();
    const std::size_t block = n + 1;
    LinearProgram lp(k * block);
    // Gradients sum to the zero vector, offsets to 1: the effects sum
    // identically to 1 on the whole ambient space.
    for (std::size_t c = 0; c < n; ++c) {
        Vec row(k * block, Rational(0));
        for (std::size_t i = 0; i < k; ++i) row[i * block + c] = 1;
        lp.eq(std::move(row), Rational(0));
    }
    {
        Vec row(k * block, Rational(0));
        for (std::size_t i = 0; i < k; ++i) row[i * block + n] = 1;
        lp.eq(std::move(row), Rational(1));
    }
    // Nonnegativity on every vertex suffices on the hull.
    for (const auto& v : poly.vertices()) {
        for (std::size_t i = 0; i < k; ++i) {
            Vec row(k * block, Rational(0));
            for (std::size_t c = 0; c < n; ++c) row[i * block + c] = v[c];
            row[i * block + n] = 1;
            lp.ge(std::move(row), Rational(0));
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        Vec row(k * block, Rational(0));
        for (std::size_t c = 0; c < n; ++c) row[i * block + c] = points[i][c];
        row[i * block + n] = 1;
        lp.eq(std::move(row), Rational(1));
    }
    const auto x = feasible_point(lp.num_vars, lp.constraints);
    if (!x) return std::nullopt;
    DistinguishabilityWitness w;
    for (std::size_t i = 0; i < k; ++i) {
        AffineFunctional e;
        e.gradient.assign(x->begin() + i * block, x->begin() + i * block + n);
        e.offset = (*x)[i * block + n];
        w.effects.push_back(std::move(e));
    }
    return w;
}

std::vector<std::size_t> sorted_indices(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::optional<DistinguishabilityWitness> distinguishable(const VPolytope& poly,
                                                         const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    for (const auto& p : points) {
        if (!in_hull(poly, p)) {
            throw std::invalid_argument("point not in set");
        }
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                throw std::invalid_argument("points must be pairwise distinct");
            }
        }
    }
    auto witness = solve_effect_lp(poly, points);
    if (witness && !verify_distinguishability_witness(poly, points, *witness)) {
        throw std::logic_error("distinguishability witness failed self-check");
    }
    return witness;
}

bool verify_distinguishability_witness(const VPolytope& poly,
                                       const std::vector<Point>& points,
                                       const DistinguishabilityWitness& witness) {
    const std::size_t k = points.size();
    if (witness.effects.size() != k || k == 0) return false;
    const std::size_t n = poly.dim();
    Vec gradient_sum(n, Rational(0));
    Rational offset_sum = 0;
    for (const auto& e : witness.effects) {
        if (e.gradient.size() != n) return false;
        gradient_sum = gradient_sum + e.gradient;
        offset_sum += e.offset;
    }
    if (!is_zero(gradient_sum) || offset_sum != 1) return false;
    for (const auto& e : witness.effects) {
        for (const auto& v : poly.vertices()) {
            if (e(v) < 0) return false;
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (witness.effects[i](points[i]) != 1) return false;
        for (std::size_t j = 0; j < k; ++j) {
            if (j != i && witness.effects[i](points[j]) != 0) return false;
        }
    }
    return true;
}

HyperplaneWitness hyperplane_witness_from_effects(const VPolytope& poly,
                                                  const std::vector<Point>& points,
                                                  const DistinguishabilityWitness& witness) {
    if (points.size() < 2) {
        throw std::invalid_argument("hyperplane witness needs at least two points");
    }
    if (!verify_distinguishability_witness(poly, points, witness)) {
        throw std::invalid_argument("invalid distinguishability witness");
    }
    HyperplaneWitness hw;
    for (const auto& e : witness.effects) {
        if (is_zero(e.gradient)) {
            // A valid witness on >= 2 points cannot have a constant effect:
            // it takes both values 0 and 1.
            throw std::invalid_argument("effect constant; no hyperplane");
        }
        // Zero set of the effect; the canonical scale divisor is the
        // dependence coefficient that keeps the gradients' sum at zero.
        Rational scale = 0;
        for (const auto& g : e.gradient) {
            if (g != 0) {
                scale = g;
                break;
            }
        }
        hw.hyperplanes.push_back(Hyperplane::make(e.gradient, -e.offset));
        hw.dependence.push_back(scale);
    }
    const auto check = verify_hyperplane_witness(poly, points, hw);
    if (!check.ok) {
        throw std::logic_error("hyperplane witness failed self-check: " + check.reason);
    }
    return hw;
}

WitnessCheck verify_hyperplane_witness(const VPolytope& poly,
                                       const std::vector<Point>& points,
                                       const HyperplaneWitness& witness) {
    const std::size_t k = points.size();
    if (k < 2 || witness.hyperplanes.size() != k || witness.dependence.size() != k) {
        return {false, "size mismatch"};
    }
    const std::size_t n = poly.dim();
    for (const auto& h : witness.hyperplanes) {
        if (h.normal.size() != n || is_zero(h.normal)) return {false, "bad normal"};
    }
    for (std::size_t i = 0; i < k; ++i) {
        const auto& h = witness.hyperplanes[i];
        Rational lo = dot(h.normal, poly.vertices().front());
        Rational hi = lo;
        for (const auto& v : poly.vertices()) {
            const Rational value = dot(h.normal, v);
            lo = std::min(lo, value);
            hi = std::max(hi, value);
        }
        if (h.level != lo && h.level != hi) return {false, "not supporting"};
        if (h.contains(points[i])) return {false, "point on own hyperplane"};
        for (std::size_t j = 0; j < k; ++j) {
            if (j != i && !h.contains(points[j])) {
                return {false, "point off other hyperplane"};
            }
        }
    }
    Vec combination(n, Rational(0));
    bool any_nonzero = false;
    for (std::size_t i = 0; i < k; ++i) {
        combination = combination + witness.dependence[i] * witness.hyperplanes[i].normal;
        any_nonzero = any_nonzero || witness.dependence[i] != 0;
    }
    if (!any_nonzero || !is_zero(combination)) return {false, "normals not dependent"};
    for (std::size_t skip = 0; skip < k; ++skip) {
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < k; ++i) {
            if (i != skip) rows.push_back(witness.hyperplanes[i].normal);
        }
        if (rank(Matrix::from_rows(rows)) != k - 1) {
            return {false, "proper subset dependent"};
        }
    }
    return {true, ""};
}

DistinguishableSets max_distinguishable(const VPolytope& poly) {
    const std::size_t vcount = poly.vertex_count();
    const std::size_t bound = poly.intrinsic_dim() + 1;
    DistinguishableSets result;
    std::set<std::vector<std::size_t>> previous_level;

    std::vector<std::vector<std::size_t>> level_sets;
    for (std::size_t size = 1; size <= std::min(bound + 1, vcount); ++size) {
        level_sets.clear();
        // Lexicographic enumeration of size-subsets whose proper subsets all
        // passed the previous level.
        std::vector<std::size_t> subset;
        const auto admissible = [&](const std::vector<std::size_t>& s) {
            if (s.size() <= 1) return true;
            std::vector<std::size_t> sub;
            for (std::size_t skip = 0; skip < s.size(); ++skip) {
                sub.clear();
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i != skip) sub.push_back(s[i]);
                }
                if (!previous_level.count(sub)) return false;
            }
            return true;
        };
        const auto recurse = [&](auto&& self, std::size_t next) -> void {
            if (subset.size() == size) {
                if (!admissible(subset)) return;
                std::vector<Point> pts;
                for (auto i : subset) pts.push_back(poly.vertices()[i]);
                if (distinguishable(poly, pts)) level_sets.push_back(subset);
                return;
            }
            for (std::size_t i = next; i < vcount; ++i) {
                subset.push_back(i);
                self(self, i + 1);
                subset.pop_back();
            }
        };
        recurse(recurse, 0);
        if (level_sets.empty()) break;
        if (size > bound) {
            throw std::logic_error("distinguishable set larger than dim+1 found");
        }
        result.max_size = size;
        result.maximal = level_sets;
        for (const auto& s : level_sets) result.all.push_back(s);
        previous_level.clear();
        previous_level.insert(level_sets.begin(), level_sets.end());
    }
    if (result.max_size == bound) {
        const bool simplex = poly.vertex_count() == bound &&
                             is_affinely_independent(poly.vertices());
        if (!simplex) {
            throw std::logic_error("maximal distinguishable size reached on a non-simplex");
        }
    }
    return result;
}

bool verify_decomposition(const VPolytope& poly, const Point& p, const Decomposition& d) {
    if (d.terms.empty()) return false;
    Rational total = 0;
    Vec combo(poly.dim(), Rational(0));
    std::vector<Point> support;
    for (const auto& term : d.terms) {
        if (term.weight <= 0) return false;
        const auto& verts = poly.vertices();
        if (std::find(verts.begin(), verts.end(), term.vertex) == verts.end()) return false;
        total += term.weight;
        combo = combo + term.weight * term.vertex;
        support.push_back(term.vertex);
    }
    if (total != 1 || combo != p) return false;
    return distinguishable(poly, support).has_value();
}

namespace {

std::vector<Decomposition> decompose_impl(const VPolytope& poly, const Point& p,
                                          const DistinguishableSets* cache,
                                          bool first_only, std::size_t max_support) {
    if (!in_hull(poly, p)) {
        throw std::invalid_argument("point not in set");
    }
    DistinguishableSets local;
    if (!cache) {
        local = max_distinguishable(poly);
        cache = &local;
    }
    std::vector<Decomposition> found;
    std::set<std::vector<std::size_t>> known(cache->all.begin(), cache->all.end());
    for (const auto& subset : cache->all) {
        if (max_support != 0 && subset.size() > max_support) continue;
        std::vector<Point> pts;
        for (auto i : subset) pts.push_back(poly.vertices()[i]);
        const auto weights = [&]() -> std::optional<Vec> {
            LinearProgram lp(subset.size());
            lp.eq(Vec(subset.size(), Rational(1)), Rational(1));
            for (std::size_t c = 0; c < poly.dim(); ++c) {
                Vec row(subset.size());
                for (std::size_t i = 0; i < subset.size(); ++i) row[i] = pts[i][c];
                lp.eq(std::move(row), p[c]);
            }
            for (std::size_t i = 0; i < subset.size(); ++i) {
                Vec row(subset.size(), Rational(0));
                row[i] = 1;
                lp.ge(std::move(row), Rational(0));
            }
            return feasible_point(lp.num_vars, lp.constraints);
        }();
        if (!weights) continue;
        Decomposition d;
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            if ((*weights)[i] > 0) {
                d.terms.push_back({pts[i], (*weights)[i]});
                support.push_back(subset[i]);
            }
        }
        // Dropping zero weights shrinks the support; a subset of a
        // distinguishable set stays distinguishable, re-checked via the cache.
        if (!known.count(sorted_indices(support))) {
            throw std::logic_error("support of decomposition not distinguishable");
        }
        // Deduplicate: a smaller support already reported wins.
        bool duplicate = false;
        for (const auto& existing : found) {
            if (existing.terms.size() == d.terms.size()) {
                bool same = true;
                for (std::size_t i = 0; i < d.terms.size(); ++i) {
                    if (existing.terms[i].vertex != d.terms[i].vertex ||
                        existing.terms[i].weight != d.terms[i].weight) {
                        same = false;
                        break;
                    }
                }
                duplicate = duplicate || same;
            }
        }
        if (duplicate) continue;
        found.push_back(std::move(d));
        if (first_only) break;
    }
    return found;
}

}  // namespace

std::optional<Decomposition> decompose(const VPolytope& poly, const Point& p,
                                       const DistinguishableSets* cache) {
    auto all = decompose_impl(poly, p, cache, true, 0);
    if (all.empty()) return std::nullopt;
    return std::move(all.front());
}

std::vector<Decomposition> decompose_all(const VPolytope& poly, const Point& p,
                                         const DistinguishableSets* cache) {
    return decompose_impl(poly, p, cache, false, 0);
}

DecomposabilityReport decomposability_verdict(const VPolytope& poly, std::size_t trials,
                                              std::uint64_t seed,
                                              const DistinguishableSets* cache,
                                              std::size_t max_support) {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    DistinguishableSets local;
    if (!cache) {
        local = max_distinguishable(poly);
        cache = &local;
    }
    DecomposabilityReport report;
    report.trials = trials;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const Point p = random_interior_point(poly, rng);
        const auto d = decompose_impl(poly, p, cache, true, max_support);
        if (!d.empty()) {
            ++report.decomposable_count;
        } else if (!report.counterexample) {
            report.counterexample = p;
        }
    }
    return report;
}

}  // namespace statespace
