#include <planecert/feasibility.hpp>

#include <atomic>
#include <stdexcept>
#include <thread>

namespace planecert {

namespace {

ThetaVector witness_theta(const DelsarteSystem& s, const std::vector<Rational>& x) {
    ThetaVector theta(s.d);
    theta.set(Partition::identity_class(s.d), s.theta_identity);
    for (std::size_t i = 0; i < s.variables.size(); ++i) theta.set(s.variables[i], x[i]);
    return theta;
}

}  // namespace

LpProblem system_lp(const DelsarteSystem& s) {
    LpProblem lp;
    lp.num_vars = s.variables.size();
    for (const auto& eq : s.equalities) lp.rows.push_back({eq.coeffs, LpRow::Sense::eq, eq.rhs});
    for (const auto& iq : s.inequalities) {
        if (iq.kind == InequalityKind::variable_nonneg) continue;
        lp.rows.push_back({iq.coeffs, LpRow::Sense::ge, iq.rhs});
    }
    return lp;
}

FeasibilityReport solve_feasibility(const DelsarteSystem& s) {
    FeasibilityReport report;
    const LpSolution sol = solve_lp(system_lp(s));
    if (sol.status != LpStatus::optimal) {
        report.status = FeasibilityReport::Status::infeasible;
        return report;
    }
    ThetaVector theta = witness_theta(s, sol.x);
    if (!evaluate_theta(theta, s).empty())
        throw std::logic_error("solve_feasibility: solver produced an invalid witness");
    report.status = FeasibilityReport::Status::feasible;
    report.witness = std::move(theta);
    return report;
}

std::vector<VariableBound> variable_bounds(const DelsarteSystem& s) {
    const LpProblem base = system_lp(s);
    {
        const LpSolution probe = solve_lp(base);
        if (probe.status != LpStatus::optimal)
            throw std::domain_error("variable_bounds: system is infeasible");
    }

    const std::size_t n = s.variables.size();
    std::vector<VariableBound> bounds(n);

    // 2n independent solves; the polytope is bounded (every variable sits
    // under an equality with unit coefficients), so each solve is optimal.
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t task = next.fetch_add(1);
            if (task >= 2 * n) return;
            const std::size_t var = task / 2;
            const bool maximize = task % 2 == 1;
            LpProblem lp = base;
            lp.objective.assign(n, Rational(0));
            lp.objective[var] = maximize ? Rational(-1) : Rational(1);
            const LpSolution sol = solve_lp(lp);
            if (sol.status != LpStatus::optimal)
                throw std::logic_error("variable_bounds: bound solve failed on a feasible system");
            if (maximize)
                bounds[var].max = -sol.objective;
            else
                bounds[var].min = sol.objective;
        }
    };

    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), 8);
    if (workers <= 1 || n <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w]() {
                try {
                    worker();
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return bounds;
}

bool is_unique(const DelsarteSystem& s) {
    const auto bounds = variable_bounds(s);
    for (const auto& b : bounds)
        if (!b.degenerate()) return false;
    return true;
}

FeasibilityReport full_report(const DelsarteSystem& s) {
    FeasibilityReport report = solve_feasibility(s);
    if (report.status != FeasibilityReport::Status::feasible) return report;
    report.bounds = variable_bounds(s);
    bool unique = true;
    for (const auto& b : report.bounds)
        if (!b.degenerate()) unique = false;
    report.unique = unique;
    return report;
}

}  // namespace planecert
