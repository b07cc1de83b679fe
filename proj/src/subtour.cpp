#include "tspgap/subtour.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "tspgap/mincut.hpp"

namespace tspgap {

namespace {

std::pair<int, int> ordered(int u, int v) { return u < v ? std::make_pair(u, v) : std::make_pair(v, u); }

// Edge variables of the complete graph, upper triangle row-major.
LpProblem degree_lp(const Instance& inst, Metric metric) {
    const int count = inst.size();
    if (count < 3) throw PreconditionError("solve_subtour_lp: need at least three vertices");
    const int num_edges = count * (count - 1) / 2;
    LpProblem problem = LpProblem::make(num_edges, 0.0, 1.0);
    for (int u = 0; u < count; ++u)
        for (int v = u + 1; v < count; ++v)
            problem.objective[edge_index(count, u, v)] = metric_dist(inst, u, v, metric);
    for (int v = 0; v < count; ++v) {
        LpRow row;
        row.relation = RowRelation::Equal;
        row.rhs = 2.0;
        for (int u = 0; u < count; ++u)
            if (u != v) row.coeffs.emplace_back(edge_index(count, std::min(u, v), std::max(u, v)), 1.0);
        std::sort(row.coeffs.begin(), row.coeffs.end());
        problem.rows.push_back(std::move(row));
    }
    return problem;
}

FractionalSolution extract_solution(const Instance& inst, const Eigen::VectorXd& values) {
    const int count = inst.size();
    FractionalSolution x(inst);
    for (int u = 0; u < count; ++u) {
        for (int v = u + 1; v < count; ++v) {
            const double val = values[edge_index(count, u, v)];
            if (val > 1e-12) x.set(u, v, val);
        }
    }
    return x;
}

// Subtour constraint on the subset: sum of inner edges <= |X| - 1.
LpRow subset_row(int count, const std::vector<int>& subset) {
    LpRow row;
    row.relation = RowRelation::LessEqual;
    row.rhs = static_cast<double>(subset.size()) - 1.0;
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j)
            row.coeffs.emplace_back(edge_index(count, std::min(subset[i], subset[j]), std::max(subset[i], subset[j])), 1.0);
    std::sort(row.coeffs.begin(), row.coeffs.end());
    return row;
}

}  // namespace

int edge_index(int count, int u, int v) {
    if (u > v) std::swap(u, v);
    return u * count - u * (u + 1) / 2 + (v - u - 1);
}

double FractionalSolution::value(int u, int v) const {
    auto it = values_.find(ordered(u, v));
    return it == values_.end() ? 0.0 : it->second;
}

void FractionalSolution::set(int u, int v, double x) {
    if (u == v) throw PreconditionError("FractionalSolution: self-loop");
    if (x == 0.0)
        values_.erase(ordered(u, v));
    else
        values_[ordered(u, v)] = x;
}

double FractionalSolution::vertex_degree(int v) const {
    double total = 0.0;
    for (const auto& [edge, val] : values_)
        if (edge.first == v || edge.second == v) total += val;
    return total;
}

double FractionalSolution::total_length(Metric metric) const {
    double total = 0.0;
    for (const auto& [edge, val] : values_) total += val * metric_dist(*instance_, edge.first, edge.second, metric);
    return total;
}

std::string FractionalSolution::to_text() const {
    std::ostringstream out;
    out.precision(12);
    for (const auto& [edge, val] : values_) out << edge.first + 1 << ' ' << edge.second + 1 << ' ' << val << '\n';
    return out.str();
}

FractionalSolution FractionalSolution::from_text(const Instance& inst, const std::string& text) {
    FractionalSolution x(inst);
    std::istringstream in(text);
    int u = 0, v = 0;
    double val = 0.0;
    while (in >> u >> v >> val) x.set(u - 1, v - 1, val);
    return x;
}

std::optional<CutCertificate> min_cut_separate(const FractionalSolution& x, double tol) {
    const int count = x.instance().size();
    std::vector<WeightedEdge> edges;
    edges.reserve(x.entries().size());
    for (const auto& [edge, val] : x.entries())
        if (val > 1e-12) edges.push_back({edge.first, edge.second, val});

    GlobalCut cut = global_min_cut(count, edges);
    if (cut.weight >= 2.0 - tol) return std::nullopt;
    if (static_cast<int>(cut.side.size()) > count / 2) {
        // Report the smaller shore.
        std::vector<int> complement;
        std::vector<bool> in_side(count, false);
        for (int v : cut.side) in_side[v] = true;
        for (int v = 0; v < count; ++v)
            if (!in_side[v]) complement.push_back(v);
        cut.side = std::move(complement);
    }
    return CutCertificate{std::move(cut.side), cut.weight};
}

SubtourLpResult solve_subtour_lp(const Instance& inst, Metric metric, const SubtourLpOptions& options) {
    const int count = inst.size();
    SimplexSolver solver(degree_lp(inst, metric));
    LpSolution sol = solver.solve();
    if (sol.status != LpStatus::Optimal)
        throw std::runtime_error("solve_subtour_lp: degree relaxation not optimal (status " +
                                 std::to_string(static_cast<int>(sol.status)) + ")");

    SubtourLpResult result;
    result.objective_trace.push_back(sol.objective_value);

    std::set<std::vector<int>> seen_cuts;
    int stall = 0;
    while (result.cuts_added < options.max_cuts) {
        FractionalSolution x = extract_solution(inst, sol.values);
        auto cut = min_cut_separate(x, options.cut_violation_tol);
        if (!cut) {
            result.solution = std::move(x);
            break;
        }
        if (!seen_cuts.insert(cut->subset).second) {
            // The same cut came back after a resolve; numerically stuck.
            result.solution = std::move(x);
            result.stalled = true;
            break;
        }
        const double before = sol.objective_value;
        sol = solver.add_row_and_resolve(subset_row(count, cut->subset));
        if (sol.status != LpStatus::Optimal)
            throw std::runtime_error("solve_subtour_lp: resolve after cut failed");
        ++result.cuts_added;
        result.objective_trace.push_back(sol.objective_value);
        if (sol.objective_value > before + 1e-9)
            stall = 0;
        else if (++stall > options.stall_limit) {
            result.solution = extract_solution(inst, sol.values);
            result.stalled = true;
            break;
        }
    }
    if (result.solution.entries().empty() && count > 0) result.solution = extract_solution(inst, sol.values);
    result.objective = sol.objective_value;
    result.lp_iterations = sol.iterations;
    return result;
}

double enumerate_subtour_lp(const Instance& inst, Metric metric) {
    const int count = inst.size();
    if (count > 16) throw SizeGuardError("enumerate_subtour_lp: limited to 16 vertices");
    if (count < 3) throw PreconditionError("enumerate_subtour_lp: need at least three vertices");

    // Materialize one subset per complement pair: subsets over the first
    // count-1 vertices with 2 <= |X| <= count-2.
    std::vector<std::vector<int>> subsets;
    const uint32_t limit = 1u << (count - 1);
    for (uint32_t mask = 1; mask < limit; ++mask) {
        std::vector<int> subset;
        for (int v = 0; v < count - 1; ++v)
            if (mask & (1u << v)) subset.push_back(v);
        if (subset.size() < 2 || static_cast<int>(subset.size()) > count - 2) continue;
        subsets.push_back(std::move(subset));
    }

    SimplexSolver solver(degree_lp(inst, metric));
    LpSolution sol = solver.solve();
    if (sol.status != LpStatus::Optimal) throw std::runtime_error("enumerate_subtour_lp: degree LP not optimal");

    // Activate violated subset rows until a full scan certifies all of them.
    std::vector<bool> active(subsets.size(), false);
    while (true) {
        int worst = -1;
        double worst_violation = 1e-9;
        for (size_t s = 0; s < subsets.size(); ++s) {
            if (active[s]) continue;
            const auto& subset = subsets[s];
            double inner = 0.0;
            for (size_t i = 0; i < subset.size(); ++i)
                for (size_t j = i + 1; j < subset.size(); ++j)
                    inner += sol.values[edge_index(count, subset[i], subset[j])];
            const double violation = inner - (static_cast<double>(subset.size()) - 1.0);
            if (violation > worst_violation) {
                worst_violation = violation;
                worst = static_cast<int>(s);
            }
        }
        if (worst < 0) break;
        active[worst] = true;
        sol = solver.add_row_and_resolve(subset_row(count, subsets[worst]));
        if (sol.status != LpStatus::Optimal) throw std::runtime_error("enumerate_subtour_lp: resolve failed");
    }
    return sol.objective_value;
}

FractionalSolution build_half_integral_solution(const Instance& inst) {
    if (inst.family() != Family::TetraModified)
        throw PreconditionError("build_half_integral_solution: requires a modified tetrahedron instance");
    const int n = inst.n();
    const int m = inst.m();
    const int ring0 = inst.first_ring();
    if (ring0 > m - 1)
        throw PreconditionError("build_half_integral_solution: no retained internal ring below the center");

    using Kind = VertexLabel::Kind;
    auto id = [&](Kind kind, int index) {
        auto v = inst.find({kind, index});
        if (!v)
            throw PreconditionError("build_half_integral_solution: missing vertex " + to_string({kind, index}));
        return *v;
    };

    FractionalSolution x(inst);
    // Value-1 paths x_1 .. x_n along each base side; find() resolves the
    // aliased endpoint x_n to the next corner.
    for (Kind kind : {Kind::BaseC, Kind::BaseA, Kind::BaseB})
        for (int i = 1; i <= n - 1; ++i) x.set(id(kind, i), id(kind, i + 1), 1.0);
    // Value-1 paths along the internal segments: e and f up to ring m-1,
    // g all the way to the center.
    for (int j = ring0; j <= m - 2; ++j) {
        x.set(id(Kind::InternalE, j), id(Kind::InternalE, j + 1), 1.0);
        x.set(id(Kind::InternalF, j), id(Kind::InternalF, j + 1), 1.0);
    }
    for (int j = ring0; j <= m - 1; ++j) x.set(id(Kind::InternalG, j), id(Kind::InternalG, j + 1), 1.0);

    // Half-valued corner triangles and the center triangle.
    const int corner_a = id(Kind::BaseC, 0);  // A
    const int corner_b = id(Kind::BaseA, 0);  // B
    const int corner_c = id(Kind::BaseB, 0);  // C
    const int center = id(Kind::InternalG, m);
    x.set(corner_a, id(Kind::InternalE, ring0), 0.5);
    x.set(id(Kind::InternalE, ring0), id(Kind::BaseC, 1), 0.5);
    x.set(id(Kind::BaseC, 1), corner_a, 0.5);
    x.set(corner_b, id(Kind::InternalF, ring0), 0.5);
    x.set(id(Kind::InternalF, ring0), id(Kind::BaseA, 1), 0.5);
    x.set(id(Kind::BaseA, 1), corner_b, 0.5);
    x.set(corner_c, id(Kind::InternalG, ring0), 0.5);
    x.set(id(Kind::InternalG, ring0), id(Kind::BaseB, 1), 0.5);
    x.set(id(Kind::BaseB, 1), corner_c, 0.5);
    x.set(id(Kind::InternalE, m - 1), center, 0.5);
    x.set(center, id(Kind::InternalF, m - 1), 0.5);
    x.set(id(Kind::InternalF, m - 1), id(Kind::InternalE, m - 1), 0.5);
    return x;
}

FeasibilityReport check_feasibility(const FractionalSolution& x) {
    const Instance& inst = x.instance();
    const int count = inst.size();

    for (const auto& [edge, val] : x.entries()) {
        if (val < -1e-9 || val > 1.0 + 1e-9) {
            std::ostringstream msg;
            msg << "edge (" << edge.first + 1 << "," << edge.second + 1 << ") value " << val
                << " outside [0,1]";
            return {false, msg.str()};
        }
    }

    std::vector<double> degree(count, 0.0);
    for (const auto& [edge, val] : x.entries()) {
        degree[edge.first] += val;
        degree[edge.second] += val;
    }
    for (int v = 0; v < count; ++v) {
        if (std::abs(degree[v] - 2.0) > 1e-9) {
            std::ostringstream msg;
            msg << "vertex " << v + 1 << " degree " << degree[v] << " != 2";
            return {false, msg.str()};
        }
    }

    if (auto cut = min_cut_separate(x, 1e-6)) {
        std::ostringstream msg;
        msg << "cut of weight " << cut->cut_weight << " below 2 around {";
        for (size_t i = 0; i < cut->subset.size() && i < 8; ++i) msg << (i ? "," : "") << cut->subset[i] + 1;
        if (cut->subset.size() > 8) msg << ",...";
        msg << "}";
        return {false, msg.str()};
    }
    return {true, ""};
}

}  // namespace tspgap
