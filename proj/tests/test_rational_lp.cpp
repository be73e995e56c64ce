#include <doctest.h>

#include <planecert/feasibility.hpp>
#include <planecert/plane_oracle.hpp>
#include <planecert/simplex.hpp>

#include <random>
#include <vector>

using namespace planecert;

namespace {

LpRow ge(std::vector<Rational> coeffs, Rational rhs) {
    return {std::move(coeffs), LpRow::Sense::ge, std::move(rhs)};
}

LpRow eq(std::vector<Rational> coeffs, Rational rhs) {
    return {std::move(coeffs), LpRow::Sense::eq, std::move(rhs)};
}

}  // namespace

TEST_CASE("simplex solves a small LP to the exact vertex") {
    // min -x - y  s.t.  x + 2y <= 4, 3x + y <= 6, x,y >= 0
    LpProblem lp;
    lp.num_vars = 2;
    lp.objective = {-1, -1};
    lp.rows.push_back(ge({-1, -2}, -4));
    lp.rows.push_back(ge({-3, -1}, -6));

    const auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.x[0] == Rational(8, 5));
    CHECK(sol.x[1] == Rational(6, 5));
    CHECK(sol.objective == Rational(-14, 5));
}

TEST_CASE("simplex handles equality rows") {
    LpProblem lp;
    lp.num_vars = 2;
    lp.rows.push_back(eq({1, 1}, 1));
    lp.rows.push_back(eq({1, -1}, 1));
    const auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.x[0] == 1);
    CHECK(sol.x[1] == 0);
}

TEST_CASE("simplex status detection") {
    {
        LpProblem lp;  // x <= -1 with x >= 0
        lp.num_vars = 1;
        lp.rows.push_back(ge({-1}, 1));
        CHECK(solve_lp(lp).status == LpStatus::infeasible);
    }
    {
        LpProblem lp;  // min -x, x >= 1
        lp.num_vars = 1;
        lp.objective = {-1};
        lp.rows.push_back(ge({1}, 1));
        CHECK(solve_lp(lp).status == LpStatus::unbounded);
    }
    {
        LpProblem lp;  // redundant equality pair keeps phase 1 honest
        lp.num_vars = 2;
        lp.rows.push_back(eq({1, 1}, 2));
        lp.rows.push_back(eq({2, 2}, 4));
        const auto sol = solve_lp(lp);
        REQUIRE(sol.status == LpStatus::optimal);
        CHECK(sol.x[0] + sol.x[1] == 2);
    }
    {
        LpProblem lp;  // zero row with zero rhs is vacuous
        lp.num_vars = 1;
        lp.rows.push_back(eq({0}, 0));
        CHECK(solve_lp(lp).status == LpStatus::optimal);
    }
    {
        LpProblem lp;  // zero row with nonzero rhs cannot hold
        lp.num_vars = 1;
        lp.rows.push_back(eq({0}, 1));
        CHECK(solve_lp(lp).status == LpStatus::infeasible);
    }
}

TEST_CASE("randomized LPs built around a known feasible point") {
    std::mt19937_64 rng(42);
    auto coin = [&](long lo, long hi) { return static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo; };

    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(coin(1, 5));
        std::vector<Rational> point(n);
        for (auto& v : point) v = Rational(coin(0, 6)) / coin(1, 3);

        LpProblem lp;
        lp.num_vars = n;
        const std::size_t m = static_cast<std::size_t>(coin(1, 6));
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<Rational> coeffs(n);
            Rational value = 0;
            for (std::size_t j = 0; j < n; ++j) {
                coeffs[j] = coin(-4, 4);
                value += coeffs[j] * point[j];
            }
            if (coin(0, 1) == 0)
                lp.rows.push_back(eq(std::move(coeffs), value));
            else
                lp.rows.push_back(ge(std::move(coeffs), value - Rational(coin(0, 5))));
        }

        const auto sol = solve_lp(lp);
        REQUIRE(sol.status == LpStatus::optimal);
        for (const auto& row : lp.rows) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < n; ++j) lhs += row.coeffs[j] * sol.x[j];
            if (row.sense == LpRow::Sense::eq)
                CHECK(lhs == row.rhs);
            else
                CHECK(lhs >= row.rhs);
        }
        for (const auto& v : sol.x) CHECK(v >= 0);
    }
}

TEST_CASE("bland's rule terminates on beale's cycling example") {
    // cycles forever under the classic most-negative rule
    LpProblem lp;
    lp.num_vars = 4;
    lp.objective = {Rational(-3, 4), 150, Rational(-1, 50), 6};
    lp.rows.push_back(ge({Rational(-1, 4), 60, Rational(1, 25), -9}, 0));
    lp.rows.push_back(ge({Rational(-1, 2), 90, Rational(1, 50), -3}, 0));
    lp.rows.push_back(ge({0, 0, -1, 0}, -1));

    const auto sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.objective == Rational(-1, 20));
    CHECK(sol.x == std::vector<Rational>{Rational(1, 25), 0, 1, 0});
}

TEST_CASE("simplex is deterministic") {
    LpProblem lp;
    lp.num_vars = 3;
    lp.objective = {-1, -1, -1};
    lp.rows.push_back(ge({-1, -1, 0}, -2));
    lp.rows.push_back(ge({0, -1, -1}, -2));
    lp.rows.push_back(ge({-1, 0, -1}, -2));
    const auto a = solve_lp(lp);
    const auto b = solve_lp(lp);
    REQUIRE(a.status == LpStatus::optimal);
    CHECK(a.x == b.x);
    CHECK(a.objective == b.objective);
}

TEST_CASE("order 6 system has the published unique solution") {
    const auto s = build_system(6);
    const auto report = solve_feasibility(s);
    REQUIRE(report.status == FeasibilityReport::Status::feasible);
    REQUIRE(report.witness.has_value());

    const ThetaVector& w = *report.witness;
    CHECK(w.identity_entry() == 30);
    CHECK(w.at(Partition({3, 3})) == 150);
    CHECK(w.at(Partition({2, 2, 2})) == 0);
    CHECK(w.at(Partition({4, 2})) == 0);
    CHECK(w.at(Partition({6})) == 0);
    CHECK(w.at(Partition({3, 2, 1})) == 450);
    CHECK(w.at(Partition({5, 1})) == 270);
}

TEST_CASE("order 6 bounds pin every variable") {
    const auto s = build_system(6);
    const auto bounds = variable_bounds(s);
    REQUIRE(bounds.size() == 6);
    auto at = [&](const Partition& cls) { return bounds[s.variable_index(cls)]; };

    CHECK(at(Partition({3, 3})).min == 150);
    CHECK(at(Partition({3, 3})).max == 150);
    CHECK(at(Partition({3, 2, 1})).min == 450);
    CHECK(at(Partition({3, 2, 1})).max == 450);
    CHECK(at(Partition({5, 1})).min == 270);
    CHECK(at(Partition({5, 1})).max == 270);

    Rational zero_upper = at(Partition({2, 2, 2})).max + at(Partition({4, 2})).max + at(Partition({6})).max;
    CHECK(zero_upper == 0);
    CHECK(is_unique(s));
}

TEST_CASE("the hand derivation chain is reproduced mechanically") {
    // Summing the four character rows (5,2,3,-1,0,-1,0), (9,0,3,1,0,0,-1),
    // (9,0,-3,1,0,0,-1), (10,1,-2,0,1,-1,0) gives (33,3,1,1,1,-2,-2); with
    // x+y+z+v = 150 and a+b = 720 that forces x >= 150, hence x = 150 and
    // y = z = v = 0, after which the degree-5 and first degree-9 rows force
    // a <= 450 and b <= 270, which the sum a + b = 720 turns into equalities.
    const auto s = build_system(6);
    const std::vector<Partition> columns = {Partition::identity_class(6), Partition({3, 3}),
                                            Partition({2, 2, 2}),         Partition({4, 2}),
                                            Partition({6}),               Partition({3, 2, 1}),
                                            Partition({5, 1})};
    const std::vector<std::vector<std::int64_t>> wanted = {
        {5, 2, 3, -1, 0, -1, 0},
        {9, 0, 3, 1, 0, 0, -1},
        {9, 0, -3, 1, 0, 0, -1},
        {10, 1, -2, 0, 1, -1, 0},
    };
    std::vector<std::int64_t> sum(7, 0);
    int found = 0;
    for (const auto& mu : s.table.irreps) {
        std::vector<std::int64_t> row;
        for (const auto& c : columns) row.push_back(s.table.value(mu, c));
        for (const auto& w : wanted)
            if (row == w) {
                ++found;
                for (std::size_t i = 0; i < 7; ++i) sum[i] += row[i];
            }
    }
    CHECK(found == 4);
    CHECK(sum == std::vector<std::int64_t>{33, 3, 1, 1, 1, -2, -2});

    // 33*30 + 3x + (y+z+v) - 2(a+b) >= 0 with the equalities plugged in:
    // 990 + 2x + 150 - 1440 >= 0, so x >= 150; E2 caps x at 150.
    const Rational x_lower = Rational(1440 - 990 - 150) / 2;
    CHECK(x_lower == 150);

    const auto bounds = variable_bounds(s);
    CHECK(bounds[s.variable_index(Partition({3, 3}))].min == x_lower);
    // with x = 150, y = z = v = 0: 5*30 + 2*150 - a >= 0 and 9*30 - b >= 0
    CHECK(bounds[s.variable_index(Partition({3, 2, 1}))].max == 450);
    CHECK(bounds[s.variable_index(Partition({5, 1}))].max == 270);
}

TEST_CASE("witness always sits inside its own bounds") {
    for (int d : {3, 5, 7}) {
        const auto s = build_system(d);
        const auto report = full_report(s);
        REQUIRE(report.status == FeasibilityReport::Status::feasible);
        for (std::size_t i = 0; i < s.variables.size(); ++i) {
            const Rational value = report.witness->at(s.variables[i]);
            CHECK(report.bounds[i].min <= value);
            CHECK(value <= report.bounds[i].max);
        }
    }
}

TEST_CASE("uniqueness holds through d=6 and breaks at d=7") {
    for (int d = 2; d <= 6; ++d) CHECK(is_unique(build_system(d)));
    CHECK_FALSE(is_unique(build_system(7)));
}

TEST_CASE("the unique point at prime-power orders is the constructed plane's theta") {
    for (int q : {2, 3, 4, 5}) {
        const auto report = full_report(build_system(q));
        REQUIRE(report.unique.value_or(false));
        const auto plane_theta = theta_of_subset(build_plane(q).lines).theta;
        CHECK(report.witness->entries() == plane_theta.entries());
    }
}

TEST_CASE("an over-tightened system is infeasible") {
    auto s = build_system(6);
    s.equalities[0].rhs = 151;  // x+y+z+v can no longer meet the character rows
    const auto report = solve_feasibility(s);
    CHECK(report.status == FeasibilityReport::Status::infeasible);
    CHECK_FALSE(report.witness.has_value());
    CHECK_THROWS_AS(variable_bounds(s), std::domain_error);
    CHECK_THROWS_AS(is_unique(s), std::domain_error);
}

TEST_CASE("d=10 system is feasible but not unique") {
    const auto s = build_system(10);
    CHECK(solve_feasibility(s).status == FeasibilityReport::Status::feasible);
}
