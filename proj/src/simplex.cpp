#include "tspgap/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tspgap {

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

LpProblem LpProblem::make(int num_vars, double lo, double hi) {
    LpProblem p;
    p.objective = Eigen::VectorXd::Zero(num_vars);
    p.lower = Eigen::VectorXd::Constant(num_vars, lo);
    p.upper = Eigen::VectorXd::Constant(num_vars, hi);
    return p;
}

LpSolution solve_lp(const LpProblem& problem) {
    SimplexSolver solver(problem);
    return solver.solve();
}

SimplexSolver::SimplexSolver(LpProblem problem) {
    num_struct_ = problem.num_vars();
    cols_.resize(num_struct_);
    lo_.assign(problem.lower.data(), problem.lower.data() + num_struct_);
    hi_.assign(problem.upper.data(), problem.upper.data() + num_struct_);
    cost_.assign(problem.objective.data(), problem.objective.data() + num_struct_);
    is_artificial_.assign(num_struct_, 0);
    for (int j = 0; j < num_struct_; ++j) {
        if (lo_[j] > hi_[j]) throw PreconditionError("SimplexSolver: lower bound above upper bound");
        if (std::isinf(lo_[j])) throw PreconditionError("SimplexSolver: lower bounds must be finite");
    }

    for (const LpRow& row : problem.rows) {
        const int r = num_rows();
        rhs_.push_back(row.rhs);
        relation_.push_back(row.relation);
        for (const auto& [var, coef] : row.coeffs) {
            if (var < 0 || var >= num_struct_) throw PreconditionError("SimplexSolver: row references unknown variable");
            if (coef != 0.0) cols_[var].emplace_back(r, coef);
        }
        append_logical(row.relation);
        artificial_of_row_.push_back(-1);
    }
}

void SimplexSolver::append_logical(RowRelation rel) {
    const int var = static_cast<int>(cols_.size());
    cols_.push_back({{num_rows() - 1, 1.0}});
    lo_.push_back(0.0);
    hi_.push_back(rel == RowRelation::LessEqual ? kInf : 0.0);
    cost_.push_back(0.0);
    is_artificial_.push_back(0);
    logical_of_row_.push_back(var);
}

int SimplexSolver::ensure_artificial(int row, double sign) {
    int var = artificial_of_row_[row];
    if (var < 0) {
        var = static_cast<int>(cols_.size());
        cols_.push_back({{row, sign}});
        lo_.push_back(0.0);
        hi_.push_back(kInf);
        cost_.push_back(0.0);
        is_artificial_.push_back(1);
        artificial_of_row_[row] = var;
    } else {
        cols_[var] = {{row, sign}};
        hi_[var] = kInf;
    }
    return var;
}

void SimplexSolver::reset_to_logical_basis() {
    const int m = num_rows();
    // Any artificials from a previous solve stay pinned at zero until reopened.
    for (size_t j = 0; j < cols_.size(); ++j)
        if (is_artificial_[j]) hi_[j] = 0.0;

    // Residuals with every structural variable at its lower bound.
    Eigen::VectorXd residual = Eigen::Map<const Eigen::VectorXd>(rhs_.data(), m);
    for (int j = 0; j < num_struct_; ++j) {
        if (lo_[j] == 0.0) continue;
        for (const auto& [r, coef] : cols_[j]) residual[r] -= coef * lo_[j];
    }

    // Decide logical vs artificial basis per row before sizing the state
    // vectors, since creating artificials appends columns.
    std::vector<int> basic_var(m);
    for (int r = 0; r < m; ++r) {
        const double v = residual[r];
        const bool logical_feasible = relation_[r] == RowRelation::LessEqual ? v >= -kFeasTol : std::abs(v) <= kFeasTol;
        if (logical_feasible)
            basic_var[r] = logical_of_row_[r];
        else
            basic_var[r] = ensure_artificial(r, v >= 0.0 ? 1.0 : -1.0);
    }

    status_.assign(cols_.size(), VarStatus::AtLower);
    value_.assign(cols_.size(), 0.0);
    for (size_t j = 0; j < cols_.size(); ++j) value_[j] = lo_[j];
    basis_ = basic_var;
    row_of_var_.assign(cols_.size(), -1);
    binv_ = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>::Identity(m, m);

    for (int r = 0; r < m; ++r) {
        const int bv = basis_[r];
        row_of_var_[bv] = r;
        status_[bv] = VarStatus::Basic;
        if (is_artificial_[bv]) {
            value_[bv] = std::abs(residual[r]);
            binv_(r, r) = cols_[bv][0].second;  // basis column is sign * e_r
        } else {
            value_[bv] = residual[r];
        }
    }
}

Eigen::VectorXd SimplexSolver::dual_prices(const Eigen::VectorXd& cost) const {
    const int m = num_rows();
    Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
    for (int r = 0; r < m; ++r) {
        const double cb = cost[basis_[r]];
        if (cb != 0.0) y += cb * binv_.row(r).transpose();
    }
    return y;
}

double SimplexSolver::reduced_cost(int var, const Eigen::VectorXd& y, const Eigen::VectorXd& cost) const {
    double d = cost[var];
    for (const auto& [r, coef] : cols_[var]) d -= y[r] * coef;
    return d;
}

Eigen::VectorXd SimplexSolver::ftran(int var) const {
    const int m = num_rows();
    Eigen::VectorXd w = Eigen::VectorXd::Zero(m);
    for (const auto& [r, coef] : cols_[var]) w += coef * binv_.col(r);
    return w;
}

void SimplexSolver::eta_update(int pivot_row, const Eigen::VectorXd& w) {
    const int m = num_rows();
    binv_.row(pivot_row) /= w[pivot_row];
    for (int i = 0; i < m; ++i) {
        if (i == pivot_row) continue;
        const double factor = w[i];
        if (factor != 0.0) binv_.row(i) -= factor * binv_.row(pivot_row);
    }
}

void SimplexSolver::refactor() {
    const int m = num_rows();
    Eigen::MatrixXd basis_matrix = Eigen::MatrixXd::Zero(m, m);
    for (int r = 0; r < m; ++r)
        for (const auto& [row, coef] : cols_[basis_[r]]) basis_matrix(row, r) = coef;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(basis_matrix);
    Eigen::MatrixXd inv = lu.solve(Eigen::MatrixXd::Identity(m, m));
    if (!inv.allFinite()) throw std::runtime_error("SimplexSolver: basis refactorization failed");
    binv_ = inv;
    pivots_since_refactor_ = 0;
    recompute_basic_values();
}

void SimplexSolver::recompute_basic_values() {
    const int m = num_rows();
    Eigen::VectorXd residual = Eigen::Map<const Eigen::VectorXd>(rhs_.data(), m);
    for (size_t j = 0; j < cols_.size(); ++j) {
        if (status_[j] == VarStatus::Basic || value_[j] == 0.0) continue;
        for (const auto& [r, coef] : cols_[j]) residual[r] -= coef * value_[j];
    }
    Eigen::VectorXd xb = binv_ * residual;
    for (int r = 0; r < m; ++r) value_[basis_[r]] = xb[r];
}

LpStatus SimplexSolver::primal_loop(const Eigen::VectorXd& cost) {
    const int m = num_rows();
    int degenerate_streak = 0;
    bool bland = false;

    for (int iter = 0; iter < 500000; ++iter) {
        const Eigen::VectorXd y = dual_prices(cost);

        // Pricing: most negative improvement direction, or smallest index in
        // Bland mode.
        int entering = -1;
        double best = 0.0;
        int direction = 0;
        for (int j = 0; j < static_cast<int>(cols_.size()); ++j) {
            if (status_[j] == VarStatus::Basic || lo_[j] == hi_[j]) continue;
            const double d = reduced_cost(j, y, cost);
            if (status_[j] == VarStatus::AtLower && d < -kOptTol) {
                if (bland) {
                    entering = j;
                    direction = 1;
                    break;
                }
                if (-d > best) {
                    best = -d;
                    entering = j;
                    direction = 1;
                }
            } else if (status_[j] == VarStatus::AtUpper && d > kOptTol) {
                if (bland) {
                    entering = j;
                    direction = -1;
                    break;
                }
                if (d > best) {
                    best = d;
                    entering = j;
                    direction = -1;
                }
            }
        }
        if (entering < 0) return LpStatus::Optimal;

        const Eigen::VectorXd w = ftran(entering);

        // Ratio test over basic bounds plus the entering variable's own range.
        double theta = hi_[entering] - lo_[entering];  // may be +inf
        int leaving_row = -1;
        double leaving_pivot = 0.0;
        double leaving_target = 0.0;
        for (int r = 0; r < m; ++r) {
            const double delta = direction * w[r];
            const int bv = basis_[r];
            double limit;
            double target;
            if (delta > kPivTol) {
                if (lo_[bv] == -kInf) continue;
                limit = (value_[bv] - lo_[bv]) / delta;
                target = lo_[bv];
            } else if (delta < -kPivTol) {
                if (hi_[bv] == kInf) continue;
                limit = (value_[bv] - hi_[bv]) / delta;
                target = hi_[bv];
            } else {
                continue;
            }
            if (limit < 0.0) limit = 0.0;  // drift guard
            if (limit < theta - 1e-12 ||
                (limit < theta + 1e-12 && leaving_row >= 0 && std::abs(w[r]) > std::abs(leaving_pivot))) {
                theta = limit;
                leaving_row = r;
                leaving_pivot = w[r];
                leaving_target = target;
            }
        }

        if (std::isinf(theta)) return LpStatus::Unbounded;

        if (theta < kDegenStep) {
            if (++degenerate_streak >= kBlandAfter) bland = true;
        } else {
            degenerate_streak = 0;
            bland = false;
        }

        if (leaving_row < 0) {
            // Bound flip: the entering variable runs to its opposite bound.
            for (int r = 0; r < m; ++r) value_[basis_[r]] -= theta * direction * w[r];
            status_[entering] = direction > 0 ? VarStatus::AtUpper : VarStatus::AtLower;
            value_[entering] = direction > 0 ? hi_[entering] : lo_[entering];
        } else {
            for (int r = 0; r < m; ++r) value_[basis_[r]] -= theta * direction * w[r];
            const int leaving_var = basis_[leaving_row];
            value_[entering] += direction * theta;
            status_[entering] = VarStatus::Basic;
            value_[leaving_var] = leaving_target;
            status_[leaving_var] = leaving_target == lo_[leaving_var] ? VarStatus::AtLower : VarStatus::AtUpper;
            basis_[leaving_row] = entering;
            row_of_var_[entering] = leaving_row;
            row_of_var_[leaving_var] = -1;
            eta_update(leaving_row, w);
            ++pivots_;
            if (++pivots_since_refactor_ >= kRefactorEvery) refactor();
        }
    }
    throw std::runtime_error("SimplexSolver: primal iteration limit exceeded");
}

bool SimplexSolver::drive_out_artificials() {
    const int m = num_rows();
    for (int r = 0; r < m; ++r) {
        const int bv = basis_[r];
        if (!is_artificial_[bv]) continue;
        if (std::abs(value_[bv]) > kFeasTol) return false;
        // Degenerate exchange against any usable pivot in this row.
        int entering = -1;
        double pivot = 0.0;
        Eigen::VectorXd rho = binv_.row(r).transpose();
        for (int j = 0; j < static_cast<int>(cols_.size()) && entering < 0; ++j) {
            if (is_artificial_[j] || status_[j] == VarStatus::Basic || lo_[j] == hi_[j]) continue;
            double alpha = 0.0;
            for (const auto& [row, coef] : cols_[j]) alpha += rho[row] * coef;
            if (std::abs(alpha) > 1e-9) {
                entering = j;
                pivot = alpha;
            }
        }
        if (entering < 0) continue;  // redundant row; artificial stays pinned at zero
        (void)pivot;
        const Eigen::VectorXd w = ftran(entering);
        const int leaving_var = basis_[r];
        status_[entering] = VarStatus::Basic;
        // theta = 0 exchange: values are unchanged.
        value_[leaving_var] = 0.0;
        status_[leaving_var] = VarStatus::AtLower;
        basis_[r] = entering;
        row_of_var_[entering] = r;
        row_of_var_[leaving_var] = -1;
        eta_update(r, w);
        ++pivots_;
        if (++pivots_since_refactor_ >= kRefactorEvery) refactor();
    }
    return true;
}

LpSolution SimplexSolver::solve() {
    reset_to_logical_basis();

    bool need_phase1 = false;
    for (size_t j = 0; j < cols_.size(); ++j)
        if (is_artificial_[j] && status_[j] == VarStatus::Basic) need_phase1 = true;

    if (need_phase1) {
        Eigen::VectorXd phase1_cost = Eigen::VectorXd::Zero(cols_.size());
        for (size_t j = 0; j < cols_.size(); ++j)
            if (is_artificial_[j] && hi_[j] > 0.0) phase1_cost[j] = 1.0;
        const LpStatus status = primal_loop(phase1_cost);
        if (status == LpStatus::Unbounded) throw std::runtime_error("SimplexSolver: phase one unbounded");
        double infeasibility = 0.0;
        for (size_t j = 0; j < cols_.size(); ++j)
            if (is_artificial_[j]) infeasibility += value_[j];
        if (infeasibility > 1e-7) {
            solved_ = false;
            return extract(LpStatus::Infeasible);
        }
        drive_out_artificials();
        for (size_t j = 0; j < cols_.size(); ++j)
            if (is_artificial_[j]) hi_[j] = 0.0;  // never re-enters
    }

    Eigen::VectorXd cost = Eigen::VectorXd::Zero(cols_.size());
    for (size_t j = 0; j < cols_.size(); ++j) cost[j] = cost_[j];

    LpStatus status = primal_loop(cost);
    for (int attempt = 0; attempt < 3 && status == LpStatus::Optimal; ++attempt) {
        refactor();
        bool clean = true;
        for (int r = 0; r < num_rows(); ++r) {
            const int bv = basis_[r];
            if (value_[bv] < lo_[bv] - kFeasTol || value_[bv] > hi_[bv] + kFeasTol) clean = false;
        }
        if (clean) {
            // One more pricing pass after the refactor to certify optimality.
            status = primal_loop(cost);
            break;
        }
        status = dual_loop();
        if (status == LpStatus::Optimal) status = primal_loop(cost);
    }
    solved_ = status == LpStatus::Optimal;
    return extract(status);
}

LpStatus SimplexSolver::dual_loop() {
    const int m = num_rows();
    Eigen::VectorXd cost = Eigen::VectorXd::Zero(cols_.size());
    for (size_t j = 0; j < cols_.size(); ++j) cost[j] = cost_[j];

    int stall = 0;
    for (int iter = 0; iter < 500000; ++iter) {
        // Most infeasible basic variable leaves.
        int leaving_row = -1;
        double worst = kFeasTol;
        bool below = false;
        for (int r = 0; r < m; ++r) {
            const int bv = basis_[r];
            const double under = lo_[bv] - value_[bv];
            const double over = value_[bv] - hi_[bv];
            if (under > worst) {
                worst = under;
                leaving_row = r;
                below = true;
            }
            if (over > worst) {
                worst = over;
                leaving_row = r;
                below = false;
            }
        }
        if (leaving_row < 0) return LpStatus::Optimal;

        const Eigen::VectorXd y = dual_prices(cost);
        const Eigen::VectorXd rho = binv_.row(leaving_row).transpose();

        // Dual ratio test: minimum |d/alpha| keeps the reduced costs sign
        // feasible. Ties prefer the larger pivot, or the smallest index once
        // degeneracy has stalled the objective.
        int entering = -1;
        double best_ratio = kInf;
        double best_alpha = 0.0;
        const bool bland = stall >= kBlandAfter;
        for (int j = 0; j < static_cast<int>(cols_.size()); ++j) {
            if (status_[j] == VarStatus::Basic || lo_[j] == hi_[j]) continue;
            double alpha = 0.0;
            for (const auto& [row, coef] : cols_[j]) alpha += rho[row] * coef;
            if (std::abs(alpha) <= kPivTol) continue;
            const bool at_lower = status_[j] == VarStatus::AtLower;
            // Movement that pushes the leaving variable toward its bound.
            const bool usable = below ? (at_lower ? alpha < 0 : alpha > 0) : (at_lower ? alpha > 0 : alpha < 0);
            if (!usable) continue;
            const double d = reduced_cost(j, y, cost);
            const double ratio = std::abs(d / alpha);
            if (ratio < best_ratio - 1e-12 ||
                (ratio < best_ratio + 1e-12 && !bland && entering >= 0 &&
                 std::abs(alpha) > std::abs(best_alpha))) {
                best_ratio = ratio;
                entering = j;
                best_alpha = alpha;
            }
        }
        if (entering < 0) return LpStatus::Infeasible;

        if (best_ratio < kDegenStep)
            ++stall;
        else
            stall = 0;

        const int leaving_var = basis_[leaving_row];
        const double target = below ? lo_[leaving_var] : hi_[leaving_var];
        const double delta = (value_[leaving_var] - target) / best_alpha;

        const Eigen::VectorXd w = ftran(entering);
        for (int r = 0; r < m; ++r) value_[basis_[r]] -= delta * w[r];
        value_[entering] += delta;
        status_[entering] = VarStatus::Basic;
        value_[leaving_var] = target;
        status_[leaving_var] = target == lo_[leaving_var] ? VarStatus::AtLower : VarStatus::AtUpper;
        basis_[leaving_row] = entering;
        row_of_var_[entering] = leaving_row;
        row_of_var_[leaving_var] = -1;
        eta_update(leaving_row, w);
        ++pivots_;
        if (++pivots_since_refactor_ >= kRefactorEvery) refactor();
    }
    throw std::runtime_error("SimplexSolver: dual iteration limit exceeded");
}

LpSolution SimplexSolver::add_row_and_resolve(const LpRow& row) {
    if (!solved_) throw PreconditionError("add_row_and_resolve: requires a prior optimal solve");

    const int r = num_rows();
    const int m_old = r;
    rhs_.push_back(row.rhs);
    relation_.push_back(row.relation);
    double activity = 0.0;
    for (const auto& [var, coef] : row.coeffs) {
        if (var < 0 || var >= num_struct_)
            throw PreconditionError("add_row_and_resolve: row references unknown variable");
        if (coef == 0.0) continue;
        cols_[var].emplace_back(r, coef);
        activity += coef * value_[var];
    }
    append_logical(row.relation);
    artificial_of_row_.push_back(-1);
    status_.push_back(VarStatus::AtLower);
    value_.push_back(0.0);
    row_of_var_.push_back(-1);

    // Extend the inverse: the new logical is basic in the new row, and the new
    // bottom row of the inverse is -(row coefficients on basic vars) * binv.
    Eigen::VectorXd rho_basis = Eigen::VectorXd::Zero(m_old);
    for (const auto& [var, coef] : row.coeffs) {
        const int row_of = row_of_var_[var];
        if (row_of >= 0) rho_basis[row_of] = coef;
    }
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> grown =
        Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>::Zero(r + 1, r + 1);
    grown.topLeftCorner(m_old, m_old) = binv_;
    grown.block(r, 0, 1, m_old) = (-rho_basis.transpose() * binv_);
    grown(r, r) = 1.0;
    binv_ = std::move(grown);

    const int lv = logical_of_row_[r];
    basis_.push_back(lv);
    row_of_var_[lv] = r;
    status_[lv] = VarStatus::Basic;
    value_[lv] = row.rhs - activity;

    LpStatus status = dual_loop();
    if (status == LpStatus::Optimal) {
        Eigen::VectorXd cost = Eigen::VectorXd::Zero(cols_.size());
        for (size_t j = 0; j < cols_.size(); ++j) cost[j] = cost_[j];
        status = primal_loop(cost);
    }
    solved_ = status == LpStatus::Optimal;
    return extract(status);
}

double SimplexSolver::dual_objective() const {
    Eigen::VectorXd cost = Eigen::VectorXd::Zero(cols_.size());
    for (size_t j = 0; j < cols_.size(); ++j) cost[j] = cost_[j];
    const Eigen::VectorXd y = dual_prices(cost);
    double total = 0.0;
    for (int r = 0; r < num_rows(); ++r) total += y[r] * rhs_[r];
    for (int j = 0; j < static_cast<int>(cols_.size()); ++j) {
        if (status_[j] == VarStatus::Basic) continue;
        const double d = reduced_cost(j, y, cost);
        total += d * value_[j];
    }
    return total;
}

double SimplexSolver::current_objective() const {
    double total = 0.0;
    for (int j = 0; j < num_struct_; ++j) total += cost_[j] * value_[j];
    return total;
}

LpSolution SimplexSolver::extract(LpStatus status) {
    LpSolution sol;
    sol.status = status;
    sol.iterations = pivots_;
    if (status == LpStatus::Optimal) {
        sol.values = Eigen::VectorXd(num_struct_);
        for (int j = 0; j < num_struct_; ++j) sol.values[j] = value_[j];
        sol.objective_value = current_objective();
    }
    return sol;
}

}  // namespace tspgap
