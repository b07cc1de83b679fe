#pragma once

#include <Eigen/Dense>

#include <vector>

#include "tspgap/errors.hpp"

namespace tspgap {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class RowRelation { Equal, LessEqual };

// One constraint row: sparse coefficients over structural variables.
struct LpRow {
    std::vector<std::pair<int, double>> coeffs;
    RowRelation relation = RowRelation::Equal;
    double rhs = 0.0;
};

// Bounded-variable LP in row form, minimizing objective . x.
struct LpProblem {
    Eigen::VectorXd objective;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    std::vector<LpRow> rows;

    int num_vars() const { return static_cast<int>(objective.size()); }

    static LpProblem make(int num_vars, double lo = 0.0, double hi = 1.0);
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Eigen::VectorXd values;  // structural variables only
    double objective_value = 0.0;
    int iterations = 0;  // cumulative simplex pivots of the owning solver
};

// Primal/dual revised simplex with an explicit basis inverse. Dantzig
// pricing with a Bland fallback after 50 degenerate pivots; feasibility
// tolerance 1e-7, reduced-cost tolerance 1e-9, zero-pivot guard 1e-11.
// Deterministic: identical inputs produce identical pivot sequences.
class SimplexSolver {
public:
    explicit SimplexSolver(LpProblem problem);

    // Two-phase cold solve from the all-logical basis.
    LpSolution solve();

    // Appends a row and restores optimality with the dual simplex starting
    // from the current optimal basis.
    LpSolution add_row_and_resolve(const LpRow& row);

    // Dual objective at the current basis; equals the primal objective at
    // optimality and serves as the strong-duality probe in tests.
    double dual_objective() const;

    int total_pivots() const { return pivots_; }
    bool solved() const { return solved_; }

private:
    enum class VarStatus : char { Basic, AtLower, AtUpper };

    struct PriceResult {
        int var = -1;
        double reduced_cost = 0.0;
    };

    int num_rows() const { return static_cast<int>(rhs_.size()); }

    void append_logical(RowRelation rel);
    int ensure_artificial(int row, double sign);
    void reset_to_logical_basis();
    Eigen::VectorXd dual_prices(const Eigen::VectorXd& cost) const;
    double reduced_cost(int var, const Eigen::VectorXd& y, const Eigen::VectorXd& cost) const;
    Eigen::VectorXd ftran(int var) const;
    void eta_update(int pivot_row, const Eigen::VectorXd& w);
    void refactor();
    void recompute_basic_values();
    LpStatus primal_loop(const Eigen::VectorXd& cost);
    LpStatus dual_loop();
    bool drive_out_artificials();
    LpSolution extract(LpStatus status);
    double current_objective() const;

    // Problem data. Columns cover structural variables, one logical per row,
    // and phase-one artificials; cut rows append entries to existing columns.
    int num_struct_ = 0;
    std::vector<std::vector<std::pair<int, double>>> cols_;
    std::vector<double> lo_, hi_, cost_;
    std::vector<double> rhs_;
    std::vector<RowRelation> relation_;
    std::vector<int> logical_of_row_;
    std::vector<int> artificial_of_row_;
    std::vector<char> is_artificial_;

    // Basis state.
    std::vector<VarStatus> status_;
    std::vector<double> value_;
    std::vector<int> basis_;
    std::vector<int> row_of_var_;
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> binv_;

    int pivots_ = 0;
    int pivots_since_refactor_ = 0;
    bool solved_ = false;

    static constexpr double kFeasTol = 1e-7;
    static constexpr double kOptTol = 1e-9;
    static constexpr double kPivTol = 1e-11;
    static constexpr double kDegenStep = 1e-9;
    static constexpr int kBlandAfter = 50;
    static constexpr int kRefactorEvery = 128;
};

// Convenience wrapper for one-shot solves.
LpSolution solve_lp(const LpProblem& problem);

}  // namespace tspgap
