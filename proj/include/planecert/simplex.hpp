// Exact two-phase primal simplex over arbitrary-precision rationals.
//
// Minimizes c.x subject to mixed equality / >= rows with x >= 0. Bland's
// anti-cycling rule is used for both entering and leaving choices, so the
// solve always terminates and identical problems pivot identically. No
// floating point is involved at any stage.
#pragma once

#include <planecert/rational.hpp>

#include <vector>

namespace planecert {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpRow {
    enum class Sense { eq, ge };
    std::vector<Rational> coeffs;
    Sense sense = Sense::ge;
    Rational rhs;
};

struct LpProblem {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;  // minimized; empty means pure feasibility
    std::vector<LpRow> rows;
};

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational objective;       // valid when optimal
    std::vector<Rational> x;  // valid when optimal; exact vertex coordinates
};

LpSolution solve_lp(const LpProblem& problem);

}  // namespace planecert
