#pragma once

#include "statespace/rational.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace statespace {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Maximize, Minimize };

struct LinearConstraint {
    Vec coeffs;
    Relation relation;
    Rational rhs;
};

struct Objective {
    Vec coeffs;
    Sense sense;
};

/// Exact linear program. Variables are free (unbounded both ways) unless
/// explicitly constrained by rows.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<LinearConstraint> constraints;
    std::optional<Objective> objective;

    explicit LinearProgram(std::size_t vars = 0) : num_vars(vars) {}

    void add(Vec coeffs, Relation relation, Rational rhs) {
        constraints.push_back({std::move(coeffs), relation, std::move(rhs)});
    }
    void le(Vec coeffs, Rational rhs) { add(std::move(coeffs), Relation::LessEq, std::move(rhs)); }
    void ge(Vec coeffs, Rational rhs) { add(std::move(coeffs), Relation::GreaterEq, std::move(rhs)); }
    void eq(Vec coeffs, Rational rhs) { add(std::move(coeffs), Relation::Equal, std::move(rhs)); }
    void maximize(Vec coeffs) { objective = Objective{std::move(coeffs), Sense::Maximize}; }
    void minimize(Vec coeffs) { objective = Objective{std::move(coeffs), Sense::Minimize}; }
};

struct LPFeasible {
    Vec assignment;
    /// Present iff the LP has an objective (and the optimum is attained).
    std::optional<Rational> objective_value;
    /// Optimality certificate, one multiplier per constraint; present iff
    /// objective_value is. See verify_optimality for the exact conditions.
    Vec dual_values;
};

struct LPInfeasible {
    /// One multiplier per constraint: >= 0 on LessEq rows, <= 0 on
    /// GreaterEq rows, free on Equal rows, with sum(farkas_i * a_i) = 0 and
    /// sum(farkas_i * b_i) < 0. Combining the rows with these weights
    /// yields the exact contradiction 0 <= negative.
    Vec farkas;
};

struct LPUnbounded {
    /// Direction in original variable space: preserves every constraint
    /// from any feasible point and strictly improves the objective.
    Vec ray;
};

using LPOutcome = std::variant<LPFeasible, LPInfeasible, LPUnbounded>;

/// Two-phase primal simplex over exact rationals with Bland's rule.
/// Every returned certificate is re-checked by substitution before being
/// handed back; a failed self-check throws std::logic_error.
LPOutcome solve(const LinearProgram& lp);

/// Phase-1 wrapper: any exact feasible assignment, or nothing.
std::optional<Vec> feasible_point(std::size_t num_vars,
                                  const std::vector<LinearConstraint>& constraints);

bool satisfies(const LinearProgram& lp, const Vec& x);
bool verify_infeasibility(const LinearProgram& lp, const Vec& farkas);
bool verify_ray(const LinearProgram& lp, const Vec& ray);
bool verify_optimality(const LinearProgram& lp, const Vec& x, const Vec& duals);

}  // namespace statespace
