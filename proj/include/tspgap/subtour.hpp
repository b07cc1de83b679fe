#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tspgap/simplex.hpp"
#include "tspgap/tour.hpp"

namespace tspgap {

// Sparse point of the subtour relaxation: values on unordered vertex pairs.
class FractionalSolution {
public:
    FractionalSolution() = default;
    explicit FractionalSolution(const Instance& inst) : instance_(&inst) {}

    const Instance& instance() const { return *instance_; }

    double value(int u, int v) const;
    void set(int u, int v, double x);

    const std::map<std::pair<int, int>, double>& entries() const { return values_; }

    double vertex_degree(int v) const;
    double total_length(Metric metric = Metric::ExactEuclid) const;

    // Text form: lines "u v value" with 1-based ids, 12 significant digits.
    std::string to_text() const;
    static FractionalSolution from_text(const Instance& inst, const std::string& text);

private:
    const Instance* instance_ = nullptr;
    std::map<std::pair<int, int>, double> values_;
};

// A vertex subset certifying a violated subtour constraint.
struct CutCertificate {
    std::vector<int> subset;
    double cut_weight = 0.0;
};

struct FeasibilityReport {
    bool feasible = true;
    std::string violation;  // first violated condition, with a witness
};

struct SubtourLpOptions {
    double cut_violation_tol = 1e-6;  // a cut below 2 - tol is violated
    int max_cuts = 100000;
    int stall_limit = 500;  // consecutive cuts without objective progress
};

struct SubtourLpResult {
    FractionalSolution solution;
    double objective = 0.0;
    int cuts_added = 0;
    int lp_iterations = 0;
    std::vector<double> objective_trace;  // objective after each resolve
    bool stalled = false;
};

// Column index of the edge (u, v) among the upper-triangle edge variables of
// the complete graph on `count` vertices.
int edge_index(int count, int u, int v);

// Global minimum cut of the support graph of x; reported as a violation iff
// its weight is below 2 - tol. A disconnected support yields a zero-weight
// component cut.
std::optional<CutCertificate> min_cut_separate(const FractionalSolution& x, double tol = 1e-6);

// Cutting-plane optimum of the full subtour relaxation: degree equalities
// and bounds, then repeated minimum-cut separation until no violated subtour
// constraint remains.
SubtourLpResult solve_subtour_lp(const Instance& inst, Metric metric = Metric::ExactEuclid,
                                 const SubtourLpOptions& options = {});

// Exact subtour LP optimum checked against every materialized subset
// constraint; the size guard keeps the subset list enumerable (|V| <= 16).
double enumerate_subtour_lp(const Instance& inst, Metric metric = Metric::ExactEuclid);

// The half-integral feasible solution of the modified tetrahedron instance:
// value-1 paths along the base sides and internal segments plus four
// half-valued triangles (three corners and the center).
FractionalSolution build_half_integral_solution(const Instance& inst);

// Verifies bounds, degree equalities (within 1e-9) and the minimum-cut
// condition (within 1e-6), reporting the first violation with a witness.
FeasibilityReport check_feasibility(const FractionalSolution& x);

}  // namespace tspgap
