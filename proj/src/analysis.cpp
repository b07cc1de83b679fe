#include "tspgap/analysis.hpp"

#include <cmath>
#include <sstream>

#include "tspgap/oracle.hpp"

namespace tspgap {

namespace {
const double kSqrt3 = std::sqrt(3.0);
}

std::pair<double, double> opt_length_bounds(int n) {
    const double base = 4.0 * n + 4.0 * n / kSqrt3;
    return {base - 69.0, base - 17.0};
}

std::pair<double, double> subtour_lp_bounds(int n) {
    const double base = 3.0 * n + 3.0 * n / kSqrt3;
    return {base - 33.0, base};
}

BoundReport integrality_ratio(const Instance& inst, const RatioOptions& options) {
    BoundReport report;
    report.family = inst.family();
    report.n = inst.n();
    report.m = inst.m();
    report.vertex_count = inst.size();

    // The closed-form optimum needs only the construction guarantee
    // (n >= 40, m >= 22); the value bounds additionally need n <= 3m/2.
    const bool closed_form_applies =
        inst.family() == Family::TetraModified && inst.n() >= 40 && inst.m() >= 22;
    const bool bounds_apply = closed_form_applies && 2 * inst.n() <= 3 * inst.m();
    if (closed_form_applies) {
        report.opt = optimal_tour_length(inst.n(), inst.m());
        report.opt_source = OptSource::ClosedForm;
    } else if (inst.size() <= 20) {
        report.opt = held_karp_opt(inst).length;
        report.opt_source = OptSource::Oracle;
    } else {
        throw PreconditionError(
            "integrality_ratio: no exact optimum available (not a modified tetrahedron "
            "instance with n <= 3m/2, and too large for the dynamic-programming oracle)");
    }

    if (inst.size() <= options.lp_max_vertices) {
        report.lp = solve_subtour_lp(inst, Metric::ExactEuclid, options.lp).objective;
        report.lp_source = LpSource::CutPlane;
    } else if (bounds_apply) {
        // Bracket the LP value without solving it: it lies between the
        // provable lower bound and the explicit half-integral solution.
        const double upper = build_half_integral_solution(inst).total_length();
        const double lower = subtour_lp_bounds(inst.n()).first;
        report.lp = 0.5 * (lower + upper);
        report.lp_source = LpSource::ExplicitUpper;
    } else {
        throw PreconditionError("integrality_ratio: instance too large for the cutting-plane budget");
    }

    report.ratio = report.opt / report.lp;
    report.gap = 4.0 / 3.0 - report.ratio;
    if (bounds_apply) {
        const auto [opt_lo, opt_hi] = opt_length_bounds(inst.n());
        const auto [lp_lo, lp_hi] = subtour_lp_bounds(inst.n());
        report.thm_opt_ok = report.opt >= opt_lo - 1e-9 && report.opt <= opt_hi + 1e-9;
        report.thm_lp_ok = report.lp >= lp_lo - 1e-6 && report.lp <= lp_hi + 1e-6;
    } else {
        // The length bounds only speak about instances with n <= 3m/2.
        report.thm_opt_ok = true;
        report.thm_lp_ok = true;
    }
    return report;
}

std::vector<ConvergenceRow> convergence_table(const std::vector<std::pair<int, int>>& grid,
                                              const RatioOptions& options) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(grid.size());
    for (const auto& [n, m] : grid) {
        const Instance inst = build_modified_tetrahedron(n, m);
        ConvergenceRow row;
        row.report = integrality_ratio(inst, options);
        row.scaled_gap = row.report.vertex_count * row.report.gap;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string reports_to_csv(const std::vector<BoundReport>& reports) {
    std::ostringstream out;
    out.precision(10);
    out << "family,n,m,N,opt,lp,ratio,gap,thm11_ok,thm12_ok\n";
    for (const auto& r : reports) {
        out << family_name(r.family) << ',' << r.n << ',' << r.m << ',' << r.vertex_count << ',' << r.opt
            << ',' << r.lp << ',' << r.ratio << ',' << r.gap << ',' << (r.thm_opt_ok ? "true" : "false")
            << ',' << (r.thm_lp_ok ? "true" : "false") << '\n';
    }
    return out.str();
}

RuntimeModel fit_runtime_model(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw PreconditionError("fit_runtime_model: need at least three points");
    for (const auto& [N, seconds] : points)
        if (!(seconds > 0.0)) throw PreconditionError("fit_runtime_model: runtimes must be positive");

    const int k = static_cast<int>(points.size());
    Eigen::MatrixXd design(k, 2);
    Eigen::VectorXd target(k);
    for (int i = 0; i < k; ++i) {
        design(i, 0) = 1.0;
        design(i, 1) = points[i].first;
        target[i] = std::log(points[i].second);
    }
    const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(target);

    RuntimeModel model;
    model.a = std::exp(coef[0]);
    model.b = std::exp(coef[1]);
    model.residual = std::sqrt((design * coef - target).squaredNorm() / k);
    return model;
}

double predict_runtime(const RuntimeModel& model, double N) { return model.a * std::pow(model.b, N); }

}  // namespace tspgap
