// Exact feasibility, per-variable bounds and uniqueness detection for a
// DelsarteSystem. Witnesses are re-checked against the full system before
// being returned, so a feasible report always carries a verified point.
#pragma once

#include <planecert/delsarte_system.hpp>
#include <planecert/simplex.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace planecert {

struct VariableBound {
    Rational min;
    Rational max;
    bool degenerate() const { return min == max; }
};

struct FeasibilityReport {
    enum class Status { feasible, infeasible };
    Status status = Status::infeasible;
    std::optional<ThetaVector> witness;  // includes the fixed identity entry
    std::vector<VariableBound> bounds;   // aligned with system variables; empty until computed
    std::optional<bool> unique;          // set once bounds are known
};

// Phase-1 feasibility only: status and witness.
FeasibilityReport solve_feasibility(const DelsarteSystem& s);

// Exact [min, max] of every variable over the feasible polytope (2n solves,
// run in parallel). Throws std::domain_error on an infeasible system.
std::vector<VariableBound> variable_bounds(const DelsarteSystem& s);

// True iff every variable interval is degenerate. Throws on infeasible.
bool is_unique(const DelsarteSystem& s);

// Feasibility, bounds and uniqueness in one report.
FeasibilityReport full_report(const DelsarteSystem& s);

// The LP behind the system: equality rows plus the character rows, over
// nonnegative variables. The variable_nonneg rows of the system are the
// LP's native bounds and add no rows here.
LpProblem system_lp(const DelsarteSystem& s);

}  // namespace planecert
