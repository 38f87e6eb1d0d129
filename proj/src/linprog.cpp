#include "statespace/linprog.hpp"

#include <stdexcept>
#include <utility>

namespace statespace {

namespace {

// Column layout: for each original variable j the split pair u_j = 2j,
// w_j = 2j+1 (x_j = u_j - w_j); then one slack per inequality row; then one
// artificial per Equal/GreaterEq row. Rows are normalized to rhs >= 0.
struct Tableau {
    std::size_t num_cols = 0;
    std::size_t first_artificial = 0;
    std::vector<std::vector<Rational>> rows;  // coefficient part
    std::vector<Rational> rhs;
    std::vector<std::size_t> basis;     // basic column per row
    std::vector<bool> active;           // redundant rows become inactive
    std::vector<int> sigma;             // +1 / -1: row flipped for rhs >= 0
    std::vector<std::size_t> unit_col;  // column that is e_r in the initial tableau
    std::vector<Relation> normalized_rel;

    void pivot(std::size_t row, std::size_t col, std::vector<Rational>& cost) {
        auto& prow = rows[row];
        const Rational p = prow[col];
        if (p != 1) {
            for (auto& v : prow) {
                if (v != 0) v /= p;
            }
            rhs[row] /= p;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || !active[r]) continue;
            const Rational f = rows[r][col];
            if (f == 0) continue;
            auto& target = rows[r];
            for (std::size_t c = 0; c < num_cols; ++c) {
                if (prow[c] != 0) target[c] -= f * prow[c];
            }
            rhs[r] -= f * rhs[row];
        }
        const Rational fc = cost[col];
        if (fc != 0) {
            for (std::size_t c = 0; c < num_cols; ++c) {
                if (prow[c] != 0) cost[c] -= fc * prow[c];
            }
            cost[num_cols] -= fc * rhs[row];
        }
        basis[row] = col;
    }

    // Bland's rule: entering = smallest eligible column with negative
    // reduced cost; leaving = ratio-test minimum, ties broken by the
    // smallest basic column index. Returns false at optimality; throws on
    // an unbounded phase (callers that can face unboundedness check first).
    bool bland_step(std::vector<Rational>& cost, bool allow_artificial,
                    std::size_t* unbounded_col) {
        const std::size_t limit = allow_artificial ? num_cols : first_artificial;
        std::size_t enter = limit;
        for (std::size_t c = 0; c < limit; ++c) {
            if (cost[c] < 0) {
                enter = c;
                break;
            }
        }
        if (enter == limit) return false;
        std::size_t leave = rows.size();
        Rational best_ratio;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r] || rows[r][enter] <= 0) continue;
            const Rational ratio = rhs[r] / rows[r][enter];
            if (leave == rows.size() || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == rows.size()) {
            if (unbounded_col == nullptr) {
                throw std::logic_error("simplex: unexpected unbounded phase");
            }
            *unbounded_col = enter;
            return false;
        }
        pivot(leave, enter, cost);
        return true;
    }
};

void check_dimensions(const LinearProgram& lp) {
    for (const auto& c : lp.constraints) {
        if (c.coeffs.size() != lp.num_vars) {
            throw std::invalid_argument("dimension mismatch");
        }
    }
    if (lp.objective && lp.objective->coeffs.size() != lp.num_vars) {
        throw std::invalid_argument("dimension mismatch");
    }
}

Tableau build_tableau(const LinearProgram& lp) {
    const std::size_t m = lp.constraints.size();
    const std::size_t structural = 2 * lp.num_vars;
    std::size_t num_slacks = 0;
    for (const auto& c : lp.constraints) {
        if (c.relation != Relation::Equal) ++num_slacks;
    }
    Tableau t;
    t.sigma.resize(m, 1);
    t.normalized_rel.resize(m);
    std::vector<Relation> normalized(m);
    std::size_t num_artificial = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        Relation rel = c.relation;
        if (c.rhs < 0) {
            t.sigma[i] = -1;
            if (rel == Relation::LessEq) rel = Relation::GreaterEq;
            else if (rel == Relation::GreaterEq) rel = Relation::LessEq;
        }
        normalized[i] = rel;
        t.normalized_rel[i] = rel;
        if (rel != Relation::LessEq) ++num_artificial;
    }
    t.num_cols = structural + num_slacks + num_artificial;
    t.first_artificial = structural + num_slacks;
    t.rows.assign(m, std::vector<Rational>(t.num_cols, Rational(0)));
    t.rhs.resize(m);
    t.basis.resize(m);
    t.active.assign(m, true);
    t.unit_col.resize(m);
    std::size_t slack_at = structural;
    std::size_t art_at = t.first_artificial;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        auto& row = t.rows[i];
        for (std::size_t j = 0; j < lp.num_vars; ++j) {
            const Rational v = Rational(t.sigma[i]) * c.coeffs[j];
            row[2 * j] = v;
            row[2 * j + 1] = -v;
        }
        t.rhs[i] = Rational(t.sigma[i]) * c.rhs;
        switch (normalized[i]) {
            case Relation::LessEq:
                row[slack_at] = 1;
                t.basis[i] = slack_at;
                t.unit_col[i] = slack_at;
                ++slack_at;
                break;
            case Relation::GreaterEq:
                row[slack_at] = -1;
                ++slack_at;
                row[art_at] = 1;
                t.basis[i] = art_at;
                t.unit_col[i] = art_at;
                ++art_at;
                break;
            case Relation::Equal:
                row[art_at] = 1;
                t.basis[i] = art_at;
                t.unit_col[i] = art_at;
                ++art_at;
                break;
        }
    }
    return t;
}

Vec extract_assignment(const LinearProgram& lp, const Tableau& t) {
    std::vector<Rational> col_value(t.num_cols, Rational(0));
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (t.active[r]) col_value[t.basis[r]] = t.rhs[r];
    }
    Vec x(lp.num_vars);
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        x[j] = col_value[2 * j] - col_value[2 * j + 1];
    }
    return x;
}

// Row duals read off the final cost row through each row's unit column.
Vec row_duals(const Tableau& t, const std::vector<Rational>& cost,
              const std::vector<Rational>& unit_col_cost) {
    Vec y(t.rows.size(), Rational(0));
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        if (!t.active[r]) continue;
        y[r] = unit_col_cost[r] - cost[t.unit_col[r]];
    }
    return y;
}

}  // namespace

bool satisfies(const LinearProgram& lp, const Vec& x) {
    if (x.size() != lp.num_vars) return false;
    for (const auto& c : lp.constraints) {
        const Rational lhs = dot(c.coeffs, x);
        switch (c.relation) {
            case Relation::LessEq:
                if (lhs > c.rhs) return false;
                break;
            case Relation::Equal:
                if (lhs != c.rhs) return false;
                break;
            case Relation::GreaterEq:
                if (lhs < c.rhs) return false;
                break;
        }
    }
    return true;
}

bool verify_infeasibility(const LinearProgram& lp, const Vec& farkas) {
    if (farkas.size() != lp.constraints.size()) return false;
    Vec combo(lp.num_vars, Rational(0));
    Rational bound = 0;
    for (std::size_t i = 0; i < farkas.size(); ++i) {
        const auto& c = lp.constraints[i];
        if (c.relation == Relation::LessEq && farkas[i] < 0) return false;
        if (c.relation == Relation::GreaterEq && farkas[i] > 0) return false;
        if (farkas[i] == 0) continue;
        for (std::size_t j = 0; j < lp.num_vars; ++j) {
            combo[j] += farkas[i] * c.coeffs[j];
        }
        bound += farkas[i] * c.rhs;
    }
    return is_zero(combo) && bound < 0;
}

bool verify_ray(const LinearProgram& lp, const Vec& ray) {
    if (!lp.objective || ray.size() != lp.num_vars || is_zero(ray)) return false;
    for (const auto& c : lp.constraints) {
        const Rational d = dot(c.coeffs, ray);
        switch (c.relation) {
            case Relation::LessEq:
                if (d > 0) return false;
                break;
            case Relation::Equal:
                if (d != 0) return false;
                break;
            case Relation::GreaterEq:
                if (d < 0) return false;
                break;
        }
    }
    const Rational gain = dot(lp.objective->coeffs, ray);
    return lp.objective->sense == Sense::Maximize ? gain > 0 : gain < 0;
}

bool verify_optimality(const LinearProgram& lp, const Vec& x, const Vec& duals) {
    if (!lp.objective || duals.size() != lp.constraints.size()) return false;
    if (!satisfies(lp, x)) return false;
    const bool maximize = lp.objective->sense == Sense::Maximize;
    Vec combo(lp.num_vars, Rational(0));
    Rational dual_value = 0;
    for (std::size_t i = 0; i < duals.size(); ++i) {
        const auto& c = lp.constraints[i];
        switch (c.relation) {
            case Relation::LessEq:
                if (maximize ? duals[i] < 0 : duals[i] > 0) return false;
                break;
            case Relation::GreaterEq:
                if (maximize ? duals[i] > 0 : duals[i] < 0) return false;
                break;
            case Relation::Equal:
                break;
        }
        if (duals[i] == 0) continue;
        for (std::size_t j = 0; j < lp.num_vars; ++j) {
            combo[j] += duals[i] * c.coeffs[j];
        }
        dual_value += duals[i] * c.rhs;
    }
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        if (combo[j] != lp.objective->coeffs[j]) return false;
    }
    return dual_value == dot(lp.objective->coeffs, x);
}

LPOutcome solve(const LinearProgram& lp) {
    check_dimensions(lp);
    Tableau t = build_tableau(lp);
    const std::size_t m = lp.constraints.size();

    // Phase 1: minimize the sum of artificials, priced out against the
    // initial basis.
    std::vector<Rational> cost1(t.num_cols + 1, Rational(0));
    for (std::size_t c = t.first_artificial; c < t.num_cols; ++c) cost1[c] = 1;
    for (std::size_t r = 0; r < m; ++r) {
        if (t.basis[r] < t.first_artificial) continue;
        for (std::size_t c = 0; c < t.num_cols; ++c) cost1[c] -= t.rows[r][c];
        cost1[t.num_cols] -= t.rhs[r];
    }
    while (t.bland_step(cost1, true, nullptr)) {
    }
    // cost1 value = -(phase-1 objective)
    if (cost1[t.num_cols] != 0) {
        std::vector<Rational> unit_cost(m, Rational(0));
        for (std::size_t r = 0; r < m; ++r) {
            unit_cost[r] = t.unit_col[r] >= t.first_artificial ? Rational(1) : Rational(0);
        }
        const Vec y = row_duals(t, cost1, unit_cost);
        Vec farkas(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i) {
            farkas[i] = Rational(-t.sigma[i]) * y[i];
        }
        if (!verify_infeasibility(lp, farkas)) {
            throw std::logic_error("simplex: invalid infeasibility certificate");
        }
        return LPInfeasible{std::move(farkas)};
    }

    // Drive remaining artificials out of the basis; rows that cannot be
    // pivoted are redundant and become inactive.
    for (std::size_t r = 0; r < m; ++r) {
        if (!t.active[r] || t.basis[r] < t.first_artificial) continue;
        std::size_t col = t.first_artificial;
        for (std::size_t c = 0; c < t.first_artificial; ++c) {
            if (t.rows[r][c] != 0) {
                col = c;
                break;
            }
        }
        if (col == t.first_artificial) {
            t.active[r] = false;
        } else {
            t.pivot(r, col, cost1);
        }
    }

    if (!lp.objective) {
        Vec x = extract_assignment(lp, t);
        if (!satisfies(lp, x)) {
            throw std::logic_error("simplex: infeasible assignment returned");
        }
        return LPFeasible{std::move(x), std::nullopt, {}};
    }

    // Phase 2. Artificial columns stay in the tableau (they carry the row
    // duals) but are barred from entering.
    const bool maximize = lp.objective->sense == Sense::Maximize;
    std::vector<Rational> cost2(t.num_cols + 1, Rational(0));
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        const Rational cj = lp.objective->coeffs[j];
        cost2[2 * j] = maximize ? -cj : cj;
        cost2[2 * j + 1] = maximize ? cj : -cj;
    }
    for (std::size_t r = 0; r < m; ++r) {
        if (!t.active[r]) continue;
        const Rational f = cost2[t.basis[r]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < t.num_cols; ++c) cost2[c] -= f * t.rows[r][c];
        cost2[t.num_cols] -= f * t.rhs[r];
    }
    std::size_t unbounded_col = t.num_cols;
    while (t.bland_step(cost2, false, &unbounded_col)) {
    }
    if (unbounded_col != t.num_cols) {
        std::vector<Rational> direction(t.num_cols, Rational(0));
        direction[unbounded_col] = 1;
        for (std::size_t r = 0; r < m; ++r) {
            if (t.active[r]) direction[t.basis[r]] = -t.rows[r][unbounded_col];
        }
        Vec ray(lp.num_vars);
        for (std::size_t j = 0; j < lp.num_vars; ++j) {
            ray[j] = direction[2 * j] - direction[2 * j + 1];
        }
        if (!verify_ray(lp, ray)) {
            throw std::logic_error("simplex: invalid unboundedness ray");
        }
        return LPUnbounded{std::move(ray)};
    }

    Vec x = extract_assignment(lp, t);
    const Rational value = dot(lp.objective->coeffs, x);
    const Vec y = row_duals(t, cost2, Vec(m, Rational(0)));
    Vec duals(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        duals[i] = Rational(maximize ? -t.sigma[i] : t.sigma[i]) * y[i];
    }
    if (!verify_optimality(lp, x, duals)) {
        throw std::logic_error("simplex: invalid optimality certificate");
    }
    return LPFeasible{std::move(x), value, std::move(duals)};
}

std::optional<Vec> feasible_point(std::size_t num_vars,
                                  const std::vector<LinearConstraint>& constraints) {
    LinearProgram lp(num_vars);
    lp.constraints = constraints;
    const LPOutcome outcome = solve(lp);
    if (const auto* f = std::get_if<LPFeasible>(&outcome)) return f->assignment;
    return std::nullopt;
}

}  // namespace statespace
