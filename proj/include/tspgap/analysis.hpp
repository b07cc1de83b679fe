#pragma once

#include <string>
#include <vector>

#include "tspgap/subtour.hpp"

namespace tspgap {

enum class OptSource { ClosedForm, Oracle };
enum class LpSource { CutPlane, ExplicitUpper };

// Per-instance record of optimum length, subtour LP value, their ratio and
// the bound checks of the modified-tetrahedron length guarantees.
struct BoundReport {
    Family family = Family::Imported;
    int n = 0;
    int m = 0;
    int vertex_count = 0;
    double opt = 0.0;
    OptSource opt_source = OptSource::ClosedForm;
    double lp = 0.0;
    LpSource lp_source = LpSource::CutPlane;
    double ratio = 0.0;
    double gap = 0.0;  // 4/3 - ratio
    bool thm_opt_ok = false;
    bool thm_lp_ok = false;
};

struct RatioOptions {
    // Instances with more vertices than this get the explicit-solution bound
    // midpoint instead of the cutting-plane LP value.
    int lp_max_vertices = 400;
    SubtourLpOptions lp;
};

// Bounds of the closed-form optimal tour length for n <= 3m/2:
// 4n + 4n/sqrt(3) - 69 and 4n + 4n/sqrt(3) - 17.
std::pair<double, double> opt_length_bounds(int n);

// Bounds of the subtour LP optimum for n <= 3m/2:
// 3n + 3n/sqrt(3) - 33 and 3n + 3n/sqrt(3).
std::pair<double, double> subtour_lp_bounds(int n);

// Optimum over LP ratio of one instance. Modified tetrahedron instances with
// n <= 3m/2 use the closed-form optimum; anything else must be small enough
// for the Held-Karp oracle (<= 20 vertices).
BoundReport integrality_ratio(const Instance& inst, const RatioOptions& options = {});

struct ConvergenceRow {
    BoundReport report;
    double scaled_gap = 0.0;  // vertex_count * gap
};

// Ratio reports over an (n, m) grid with the scaled-gap column.
std::vector<ConvergenceRow> convergence_table(const std::vector<std::pair<int, int>>& grid,
                                              const RatioOptions& options = {});

// CSV with header family,n,m,N,opt,lp,ratio,gap,thm11_ok,thm12_ok and floats
// printed with 10 significant digits.
std::string reports_to_csv(const std::vector<BoundReport>& reports);

// Exponential runtime model seconds = a * b^N.
struct RuntimeModel {
    double a = 0.0;
    double b = 1.0;
    double residual = 0.0;  // rms of the log-scale residuals
};

// Least squares of log(seconds) = log(a) + N * log(b); needs at least three
// points with positive runtimes.
RuntimeModel fit_runtime_model(const std::vector<std::pair<double, double>>& points);

double predict_runtime(const RuntimeModel& model, double N);

}  // namespace tspgap
