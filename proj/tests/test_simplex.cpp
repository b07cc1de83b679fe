#include <random>

#include "doctest.h"
#include "tspgap/simplex.hpp"

using namespace tspgap;

namespace {

// Random LP that is feasible by construction: rows are anchored at a random
// interior point of the bound box.
LpProblem random_problem(std::mt19937& rng, int num_vars, int num_rows) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);

    LpProblem p = LpProblem::make(num_vars, 0.0, 1.0);
    for (int j = 0; j < num_vars; ++j) p.objective[j] = coef(rng);

    std::vector<double> anchor(num_vars);
    for (double& x : anchor) x = unit(rng);

    for (int r = 0; r < num_rows; ++r) {
        LpRow row;
        double activity = 0.0;
        for (int j = 0; j < num_vars; ++j) {
            if (unit(rng) < 0.4) continue;
            const double c = coef(rng);
            row.coeffs.emplace_back(j, c);
            activity += c * anchor[j];
        }
        if (row.coeffs.empty()) row.coeffs.emplace_back(0, 1.0), activity = anchor[0];
        if (unit(rng) < 0.3) {
            row.relation = RowRelation::Equal;
            row.rhs = activity;
        } else {
            row.relation = RowRelation::LessEqual;
            row.rhs = activity + unit(rng);
        }
        p.rows.push_back(std::move(row));
    }
    return p;
}

double row_activity(const LpRow& row, const Eigen::VectorXd& x) {
    double total = 0.0;
    for (const auto& [var, coef] : row.coeffs) total += coef * x[var];
    return total;
}

}  // namespace

TEST_CASE("single variable with a lower-bounding row") {
    LpProblem p = LpProblem::make(1, 0.0, 10.0);
    p.objective[0] = 1.0;
    p.rows.push_back({{{0, -1.0}}, RowRelation::LessEqual, -3.0});  // x >= 3
    const LpSolution sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.values[0] == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(sol.objective_value == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("box maximization via a coupling row") {
    LpProblem p = LpProblem::make(2, 0.0, 1.0);
    p.objective[0] = -1.0;
    p.objective[1] = -1.0;
    p.rows.push_back({{{0, 1.0}, {1, 1.0}}, RowRelation::LessEqual, 1.0});
    const LpSolution sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("unit square degree relaxation picks the four sides") {
    // Vertices 0..3 in square order; edges 01, 02, 03, 12, 13, 23.
    // Sides: 01, 12, 23, 03 (length 1); diagonals: 02, 13 (length sqrt 2).
    const double diag = std::sqrt(2.0);
    LpProblem p = LpProblem::make(6, 0.0, 1.0);
    const int e01 = 0, e02 = 1, e03 = 2, e12 = 3, e13 = 4, e23 = 5;
    p.objective << 1.0, diag, 1.0, 1.0, diag, 1.0;
    auto degree_row = [&](std::vector<int> edges) {
        LpRow row;
        row.relation = RowRelation::Equal;
        row.rhs = 2.0;
        for (int e : edges) row.coeffs.emplace_back(e, 1.0);
        return row;
    };
    p.rows.push_back(degree_row({e01, e02, e03}));
    p.rows.push_back(degree_row({e01, e12, e13}));
    p.rows.push_back(degree_row({e02, e12, e23}));
    p.rows.push_back(degree_row({e03, e13, e23}));

    const LpSolution sol = solve_lp(p);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(sol.values[e01] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(sol.values[e12] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(sol.values[e23] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(sol.values[e03] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(sol.values[e02] == doctest::Approx(0.0).epsilon(1e-7));
    CHECK(sol.values[e13] == doctest::Approx(0.0).epsilon(1e-7));
}

TEST_CASE("infeasible and unbounded statuses") {
    LpProblem infeasible = LpProblem::make(1, 0.0, 1.0);
    infeasible.rows.push_back({{{0, 1.0}}, RowRelation::Equal, 5.0});
    CHECK(solve_lp(infeasible).status == LpStatus::Infeasible);

    LpProblem unbounded = LpProblem::make(1, 0.0, std::numeric_limits<double>::infinity());
    unbounded.objective[0] = -1.0;
    CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);
}

TEST_CASE("warm start: non-binding and duplicate rows keep the objective") {
    std::mt19937 rng(11);
    LpProblem p = random_problem(rng, 6, 4);
    SimplexSolver solver(p);
    const LpSolution base = solver.solve();
    REQUIRE(base.status == LpStatus::Optimal);

    // A row satisfied with slack at the optimum.
    LpRow loose;
    loose.relation = RowRelation::LessEqual;
    loose.coeffs = {{0, 1.0}, {1, 1.0}};
    loose.rhs = base.values[0] + base.values[1] + 1.0;
    const LpSolution after_loose = solver.add_row_and_resolve(loose);
    REQUIRE(after_loose.status == LpStatus::Optimal);
    CHECK(after_loose.objective_value == doctest::Approx(base.objective_value).epsilon(1e-9));

    const LpSolution after_dup = solver.add_row_and_resolve(loose);
    REQUIRE(after_dup.status == LpStatus::Optimal);
    CHECK(after_dup.objective_value == doctest::Approx(base.objective_value).epsilon(1e-9));
}

TEST_CASE("warm start: a violated row strictly increases a minimization objective") {
    // min x0 with x0 free in [0,1], then force x0 >= 0.5.
    LpProblem p = LpProblem::make(2, 0.0, 1.0);
    p.objective << 1.0, 0.0;
    p.rows.push_back({{{0, 1.0}, {1, 1.0}}, RowRelation::LessEqual, 2.0});
    SimplexSolver solver(p);
    const LpSolution base = solver.solve();
    REQUIRE(base.status == LpStatus::Optimal);
    CHECK(base.objective_value == doctest::Approx(0.0));

    const LpSolution tightened = solver.add_row_and_resolve({{{0, -1.0}}, RowRelation::LessEqual, -0.5});
    REQUIRE(tightened.status == LpStatus::Optimal);
    CHECK(tightened.objective_value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("warm start equals cold solve over random cut sequences") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_int_distribution<int> var_count(3, 8);
    std::uniform_int_distribution<int> row_count(1, 5);
    std::uniform_int_distribution<int> cut_count(1, 4);

    for (int trial = 0; trial < 100; ++trial) {
        LpProblem p = random_problem(rng, var_count(rng), row_count(rng));
        SimplexSolver warm(p);
        LpSolution warm_sol = warm.solve();
        if (warm_sol.status != LpStatus::Optimal) continue;

        const int cuts = cut_count(rng);
        for (int c = 0; c < cuts; ++c) {
            LpRow row;
            row.relation = RowRelation::LessEqual;
            for (int j = 0; j < p.num_vars(); ++j)
                if (unit(rng) < 0.6) row.coeffs.emplace_back(j, coef(rng));
            if (row.coeffs.empty()) row.coeffs.emplace_back(0, 1.0);
            // Anchor near the current optimum so cuts are sometimes violated,
            // sometimes loose, but never make the box LP infeasible by much.
            row.rhs = row_activity(row, warm_sol.values) + coef(rng) * 0.1;

            p.rows.push_back(row);
            warm_sol = warm.add_row_and_resolve(row);
            const LpSolution cold_sol = solve_lp(p);
            REQUIRE(warm_sol.status == cold_sol.status);
            if (warm_sol.status != LpStatus::Optimal) break;
            CHECK(warm_sol.objective_value ==
                  doctest::Approx(cold_sol.objective_value).epsilon(1e-7));
        }
    }
}

TEST_CASE("optimal solutions satisfy rows and bounds; duality gap closes") {
    std::mt19937 rng(501);
    std::uniform_int_distribution<int> var_count(3, 9);
    std::uniform_int_distribution<int> row_count(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        const LpProblem p = random_problem(rng, var_count(rng), row_count(rng));
        SimplexSolver solver(p);
        const LpSolution sol = solver.solve();
        REQUIRE(sol.status == LpStatus::Optimal);

        for (int j = 0; j < p.num_vars(); ++j) {
            CHECK(sol.values[j] >= p.lower[j] - 1e-9);
            CHECK(sol.values[j] <= p.upper[j] + 1e-9);
        }
        for (const LpRow& row : p.rows) {
            const double activity = row_activity(row, sol.values);
            if (row.relation == RowRelation::Equal)
                CHECK(std::abs(activity - row.rhs) <= 1e-7);
            else
                CHECK(activity <= row.rhs + 1e-7);
        }
        CHECK(std::abs(solver.dual_objective() - sol.objective_value) <=
              1e-6 * (1.0 + std::abs(sol.objective_value)));
    }
}

TEST_CASE("determinism: identical inputs give identical pivots and outputs") {
    std::mt19937 rng(99);
    const LpProblem p = random_problem(rng, 8, 5);
    SimplexSolver a(p), b(p);
    const LpSolution sa = a.solve();
    const LpSolution sb = b.solve();
    REQUIRE(sa.status == sb.status);
    CHECK(sa.iterations == sb.iterations);
    CHECK(sa.objective_value == sb.objective_value);  // bitwise
    for (int j = 0; j < p.num_vars(); ++j) CHECK(sa.values[j] == sb.values[j]);
}
