#include "statespace/linalg.hpp"
#include "statespace/linprog.hpp"

#include <doctest.h>

#include <optional>
#include <random>

using namespace statespace;

namespace {

Rational q(long num, long den = 1) { return Rational(num, den); }

// Independent optimum oracle: enumerate every basic point (n active
// constraints treated as equalities), keep the feasible ones, take the best
// objective value. Valid for bounded feasible regions, where some vertex is
// optimal. No simplex machinery involved.
std::optional<Rational> brute_force_optimum(const LinearProgram& lp) {
    const std::size_t n = lp.num_vars;
    const std::size_t m = lp.constraints.size();
    std::optional<Rational> best;
    std::vector<std::size_t> pick;
    const auto consider = [&](const Vec& x) {
        if (!satisfies(lp, x)) return;
        const Rational value = dot(lp.objective->coeffs, x);
        if (!best) {
            best = value;
        } else if (lp.objective->sense == Sense::Maximize) {
            best = std::max(*best, value);
        } else {
            best = std::min(*best, value);
        }
    };
    const auto recurse = [&](auto&& self, std::size_t next) -> void {
        if (pick.size() == n) {
            Matrix a(n, n);
            Vec b(n);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    a.at(r, c) = lp.constraints[pick[r]].coeffs[c];
                }
                b[r] = lp.constraints[pick[r]].rhs;
            }
            if (const auto x = solve_linear(a, b)) consider(*x);
            return;
        }
        for (std::size_t i = next; i < m; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    recurse(recurse, 0);
    return best;
}

}  // namespace

TEST_CASE("bounded maximization") {
    LinearProgram lp(1);
    lp.ge({q(1)}, q(0));
    lp.le({q(1)}, q(1));
    lp.maximize({q(1)});
    const auto out = solve(lp);
    const auto* f = std::get_if<LPFeasible>(&out);
    REQUIRE(f);
    CHECK(f->assignment == Vec{q(1)});
    CHECK(*f->objective_value == q(1));
    CHECK(verify_optimality(lp, f->assignment, f->dual_values));
}

TEST_CASE("infeasible system yields a checkable certificate") {
    LinearProgram lp(1);
    lp.ge({q(1)}, q(0));
    lp.le({q(1)}, q(-1));
    const auto out = solve(lp);
    const auto* inf = std::get_if<LPInfeasible>(&out);
    REQUIRE(inf);
    CHECK(verify_infeasibility(lp, inf->farkas));
}

TEST_CASE("unbounded objective yields a checkable ray") {
    LinearProgram lp(2);
    lp.ge({q(1), q(0)}, q(0));
    lp.ge({q(0), q(1)}, q(0));
    lp.maximize({q(1), q(1)});
    const auto out = solve(lp);
    const auto* ub = std::get_if<LPUnbounded>(&out);
    REQUIRE(ub);
    CHECK(verify_ray(lp, ub->ray));
}

TEST_CASE("triangle centroid weights are forced by symmetry") {
    LinearProgram lp(3);
    lp.eq({q(1), q(1), q(1)}, q(1));
    lp.eq({q(0), q(1), q(0)}, q(1, 3));
    lp.eq({q(0), q(0), q(1)}, q(1, 3));
    for (int i = 0; i < 3; ++i) {
        Vec row(3, q(0));
        row[i] = 1;
        lp.ge(std::move(row), q(0));
    }
    const auto out = solve(lp);
    const auto* f = std::get_if<LPFeasible>(&out);
    REQUIRE(f);
    CHECK(f->assignment == Vec{q(1, 3), q(1, 3), q(1, 3)});
}

TEST_CASE("feasible_point basics") {
    CHECK(feasible_point(1, {}).has_value());
    std::vector<LinearConstraint> conflicting{{{q(1)}, Relation::Equal, q(2)},
                                              {{q(1)}, Relation::Equal, q(3)}};
    CHECK_FALSE(feasible_point(1, conflicting));
}

TEST_CASE("classic cycling instance terminates under Bland's rule") {
    LinearProgram lp(4);
    lp.le({q(1, 4), q(-60), q(-1, 25), q(9)}, q(0));
    lp.le({q(1, 2), q(-90), q(-1, 50), q(3)}, q(0));
    lp.le({q(0), q(0), q(1), q(0)}, q(1));
    for (int i = 0; i < 4; ++i) {
        Vec row(4, q(0));
        row[i] = 1;
        lp.ge(std::move(row), q(0));
    }
    lp.minimize({q(-3, 4), q(150), q(-1, 50), q(6)});
    const auto out = solve(lp);
    const auto* f = std::get_if<LPFeasible>(&out);
    REQUIRE(f);
    CHECK(verify_optimality(lp, f->assignment, f->dual_values));
    // Expected optimum recomputed by the vertex-enumeration oracle.
    const auto oracle = brute_force_optimum(lp);
    REQUIRE(oracle);
    CHECK(*f->objective_value == *oracle);
    CHECK(*oracle == q(-1, 20));
}

TEST_CASE("redundant equality rows are tolerated") {
    LinearProgram lp(2);
    lp.eq({q(1), q(1)}, q(1));
    lp.eq({q(1), q(1)}, q(1));
    lp.eq({q(2), q(2)}, q(2));
    lp.maximize({q(1), q(-1)});
    SUBCASE("unbounded along the constraint line") {
        const auto out = solve(lp);
        const auto* ub = std::get_if<LPUnbounded>(&out);
        REQUIRE(ub);
        CHECK(verify_ray(lp, ub->ray));
    }
    SUBCASE("bounded once capped") {
        lp.le({q(1), q(0)}, q(3));
        const auto out = solve(lp);
        const auto* f = std::get_if<LPFeasible>(&out);
        REQUIRE(f);
        CHECK(*f->objective_value == q(5));  // x=3, y=-2
        CHECK(verify_optimality(lp, f->assignment, f->dual_values));
    }
}

TEST_CASE("malformed rows rejected") {
    LinearProgram lp(2);
    lp.le({q(1)}, q(0));
    CHECK_THROWS_WITH_AS(solve(lp), "dimension mismatch", std::invalid_argument);
}

TEST_CASE("randomized certificate soundness and duality spot-check") {
    std::mt19937_64 rng(91);
    const auto random_small = [&]() {
        return q(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
    };
    int optimal_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + rng() % 2;
        LinearProgram lp(n);
        const std::size_t rows = 2 + rng() % 4;
        for (std::size_t r = 0; r < rows; ++r) {
            Vec row(n);
            for (auto& x : row) x = random_small();
            const auto rel = static_cast<Relation>(rng() % 3);
            lp.add(std::move(row), rel, random_small());
        }
        // Box rows keep feasible instances bounded, so the vertex oracle
        // applies whenever the LP is feasible.
        for (std::size_t j = 0; j < n; ++j) {
            Vec hi(n, q(0)), lo(n, q(0));
            hi[j] = 1;
            lo[j] = 1;
            lp.le(std::move(hi), q(25));
            lp.ge(std::move(lo), q(-25));
        }
        Vec objective(n);
        for (auto& x : objective) x = random_small();
        if (rng() % 2) {
            lp.maximize(std::move(objective));
        } else {
            lp.minimize(std::move(objective));
        }
        const auto out = solve(lp);
        if (const auto* f = std::get_if<LPFeasible>(&out)) {
            ++optimal_seen;
            CHECK(satisfies(lp, f->assignment));
            REQUIRE(f->objective_value);
            CHECK(verify_optimality(lp, f->assignment, f->dual_values));
            const auto oracle = brute_force_optimum(lp);
            REQUIRE(oracle);
            CHECK(*f->objective_value == *oracle);
        } else if (const auto* inf = std::get_if<LPInfeasible>(&out)) {
            ++infeasible_seen;
            CHECK(verify_infeasibility(lp, inf->farkas));
        } else {
            FAIL("boxed LP cannot be unbounded");
        }
    }
    // The generator must exercise both outcomes.
    CHECK(optimal_seen > 10);
    CHECK(infeasible_seen > 10);
}
