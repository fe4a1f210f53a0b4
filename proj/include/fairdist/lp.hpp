#pragma once

#include <optional>
#include <vector>

#include "fairdist/rational.hpp"

namespace fairdist {

enum class Sense { Maximize, Minimize };
enum class Relation { Eq, Le, Ge };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpRow {
    std::vector<Rational> coeffs;
    Relation rel = Relation::Eq;
    Rational rhs;
};

// Generic exact LP. Variables carry optional bounds; nullopt means unbounded
// on that side. add_variable defaults to x >= 0 with no upper bound.
struct LinearProgram {
    Sense sense = Sense::Maximize;
    std::vector<Rational> objective;
    std::vector<std::optional<Rational>> lower;
    std::vector<std::optional<Rational>> upper;
    std::vector<LpRow> rows;

    int num_vars() const { return static_cast<int>(objective.size()); }
    int num_rows() const { return static_cast<int>(rows.size()); }

    int add_variable(Rational obj, std::optional<Rational> lo = Rational(0),
                     std::optional<Rational> hi = std::nullopt);
    void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs);
};

// Dual sign conventions, stated for the LP's own sense:
//   Maximize: dual_i >= 0 on <= rows, dual_i <= 0 on >= rows, free on = rows.
//   Minimize: flipped.
// `farkas` is filled when status = Infeasible (empty only when infeasibility
// stems from contradictory variable bounds): a per-row multiplier vector
// proving no feasible point exists; see verify_farkas.
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    std::vector<Rational> primal;  // per variable (Optimal)
    std::vector<Rational> dual;    // per row (Optimal)
    std::vector<Rational> farkas;  // per row (Infeasible)
};

// Exact two-phase dense simplex, Bland's rule, no tolerances anywhere.
// Deterministic: identical inputs produce identical bases and solutions.
LpSolution solve(const LinearProgram& lp);

// Exact verification, independent of solver internals: primal feasibility
// (rows and bounds), dual sign feasibility, reduced costs chargeable to
// finite bounds, and primal objective == dual objective. True only when all
// of these hold, which certifies optimality.
bool verify_certificate(const LinearProgram& lp, const LpSolution& sol);

// Exact check of an infeasibility certificate y: sign-compatible with the
// row relations (aggregating rows with weights y yields <t,x> <= s), yet
// min over the variable box of <t,x> exceeds s.
bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& farkas);

}  // namespace fairdist
