#include <planecert/simplex.hpp>

#include <limits>
#include <stdexcept>

namespace planecert {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau: rows of [A | b] with an explicit reduced-cost row.
// Column layout: structural variables, then surplus columns for >= rows,
// then artificial columns.
struct Tableau {
    std::size_t num_structural = 0;
    std::size_t num_total = 0;
    std::size_t first_artificial = 0;  // columns >= this are artificial
    std::vector<std::vector<Rational>> rows;  // each of size num_total + 1 (rhs last)
    std::vector<std::size_t> basis;           // basic column per row
    std::vector<Rational> cost;               // reduced-cost row, size num_total + 1

    Rational& rhs(std::size_t i) { return rows[i][num_total]; }

    void pivot(std::size_t r, std::size_t s) {
        auto& prow = rows[r];
        const Rational inv = 1 / prow[s];
        for (auto& v : prow) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            apply_elimination(rows[i], prow, s);
        }
        apply_elimination(cost, prow, s);
        basis[r] = s;
    }

    static void apply_elimination(std::vector<Rational>& row, const std::vector<Rational>& prow,
                                  std::size_t s) {
        if (row[s] == 0) return;
        const Rational factor = row[s];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (prow[j] != 0) row[j] -= factor * prow[j];
        }
        row[s] = 0;
    }

    // Price the basis out of a fresh cost vector (costs beyond its size are zero).
    void load_costs(const std::vector<Rational>& c) {
        cost.assign(num_total + 1, Rational(0));
        for (std::size_t j = 0; j < c.size(); ++j) cost[j] = c[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational cb = basis[i] < c.size() ? c[basis[i]] : Rational(0);
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= num_total; ++j)
                if (rows[i][j] != 0) cost[j] -= cb * rows[i][j];
        }
    }

    // Bland: entering = lowest-index column with negative reduced cost among
    // allowed columns; leaving = min ratio, ties broken by lowest basic index.
    // Returns optimal / unbounded.
    LpStatus run(std::size_t column_limit) {
        for (;;) {
            std::size_t enter = kNone;
            for (std::size_t j = 0; j < column_limit; ++j) {
                if (cost[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNone) return LpStatus::optimal;

            std::size_t leave = kNone;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rational ratio = rhs(i) / rows[i][enter];
                if (leave == kNone || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == kNone) return LpStatus::unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpSolution solve_lp(const LpProblem& input) {
    LpProblem problem = input;
    const std::size_t n = problem.num_vars;
    for (auto& row : problem.rows) {
        if (row.coeffs.size() != n) throw std::invalid_argument("solve_lp: row width mismatch");
        for (auto& c : row.coeffs) c.canonicalize();
        row.rhs.canonicalize();
    }
    if (!problem.objective.empty() && problem.objective.size() != n)
        throw std::invalid_argument("solve_lp: objective width mismatch");
    for (auto& c : problem.objective) c.canonicalize();

    const std::size_t m = problem.rows.size();
    std::size_t num_surplus = 0;
    for (const auto& row : problem.rows)
        if (row.sense == LpRow::Sense::ge) ++num_surplus;

    Tableau t;
    t.num_structural = n;

    // First pass decides which rows need artificials: a >= row whose rhs is
    // negative flips sign, making its surplus column the basic variable.
    std::vector<bool> needs_artificial(m, false);
    std::size_t num_artificial = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = problem.rows[i];
        const bool flipped = row.rhs < 0;
        const bool surplus_basic = row.sense == LpRow::Sense::ge && flipped;
        needs_artificial[i] = !surplus_basic;
        if (needs_artificial[i]) ++num_artificial;
    }

    t.first_artificial = n + num_surplus;
    t.num_total = n + num_surplus + num_artificial;
    t.rows.assign(m, std::vector<Rational>(t.num_total + 1, Rational(0)));
    t.basis.assign(m, kNone);

    std::size_t surplus_col = n;
    std::size_t artificial_col = t.first_artificial;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = problem.rows[i];
        const bool flip = row.rhs < 0;
        const Rational sign = flip ? Rational(-1) : Rational(1);
        for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = sign * row.coeffs[j];
        t.rhs(i) = sign * row.rhs;
        if (row.sense == LpRow::Sense::ge) {
            t.rows[i][surplus_col] = flip ? Rational(1) : Rational(-1);
            if (!needs_artificial[i]) t.basis[i] = surplus_col;
            ++surplus_col;
        }
        if (needs_artificial[i]) {
            t.rows[i][artificial_col] = 1;
            t.basis[i] = artificial_col;
            ++artificial_col;
        }
    }

    // Phase 1: minimize the sum of artificials.
    if (num_artificial > 0) {
        std::vector<Rational> phase1_cost(t.num_total, Rational(0));
        for (std::size_t j = t.first_artificial; j < t.num_total; ++j) phase1_cost[j] = 1;
        t.load_costs(phase1_cost);
        t.run(t.num_total);
        const Rational infeasibility = -t.cost[t.num_total];  // cost rhs tracks -z
        if (infeasibility != 0) return {LpStatus::infeasible, Rational(0), {}};

        // Drive leftover zero-level artificials out of the basis; a row with
        // no usable pivot is a redundant constraint and is dropped.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < t.first_artificial) {
                ++i;
                continue;
            }
            std::size_t col = kNone;
            for (std::size_t j = 0; j < t.first_artificial; ++j) {
                if (t.rows[i][j] != 0) {
                    col = j;
                    break;
                }
            }
            if (col == kNone) {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                t.pivot(i, col);
                ++i;
            }
        }
    }

    // Phase 2 over the original objective, artificial columns excluded.
    std::vector<Rational> cost(problem.objective);
    cost.resize(t.num_total, Rational(0));
    for (std::size_t j = t.first_artificial; j < t.num_total; ++j) cost[j] = 0;
    t.load_costs(cost);
    const LpStatus status = t.run(t.first_artificial);
    if (status == LpStatus::unbounded) return {LpStatus::unbounded, Rational(0), {}};

    LpSolution sol;
    sol.status = LpStatus::optimal;
    sol.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.rhs(i);
    sol.objective = 0;
    for (std::size_t j = 0; j < n && j < problem.objective.size(); ++j)
        sol.objective += problem.objective[j] * sol.x[j];
    return sol;
}

}  // namespace planecert
