// Command-line front end: instance generation, provably optimal tours,
// subtour LP values, integrality-ratio tables, and an external-solver
// benchmark harness.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tspgap/analysis.hpp"
#include "tspgap/bench.hpp"
#include "tspgap/oracle.hpp"
#include "tspgap/subtour.hpp"
#include "tspgap/tsplib.hpp"

using namespace tspgap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitExternalFailure = 4;

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_tsplib(buffer.str());
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write " + path);
    out << text;
}

std::vector<int> parse_seed_spec(const std::string& spec) {
    std::vector<int> seeds;
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) {
        const size_t dash = token.find('-', 1);
        if (dash != std::string::npos) {
            const int from = std::stoi(token.substr(0, dash));
            const int to = std::stoi(token.substr(dash + 1));
            for (int s = from; s <= to; ++s) seeds.push_back(s);
        } else if (!token.empty()) {
            seeds.push_back(std::stoi(token));
        }
    }
    return seeds;
}

void print_tetra_metadata(const Instance& inst) {
    std::cout << "N: " << inst.size() << "\n";
    if (inst.family() == Family::Tetra || inst.family() == Family::TetraModified) {
        std::cout << "internal spacing: " << inst.internal_spacing() << "\n";
        std::cout << "first ring: " << inst.first_ring() << "\n";
    }
}

int cmd_generate(const std::string& family, int n, int m, double d, int size, bool force,
                 int64_t scale, std::string out_path) {
    Instance inst = [&] {
        if (family == "tetra") {
            if (size > 0) {
                const auto [sn, sm] = hard_params_for_size(size);
                return build_tetrahedron(sn, sm);
            }
            return build_tetrahedron(n, m);
        }
        if (family == "tetra-mod")
            return force ? build_modified_tetrahedron_forced(n, m) : build_modified_tetrahedron(n, m);
        if (family == "lines") return build_three_lines(n, d);
        throw PreconditionError("unknown family " + family + " (expected tetra, tetra-mod, lines)");
    }();

    if (out_path.empty()) out_path = inst.name() + ".tsp";
    write_text(out_path, render(export_instance(inst, scale)));
    std::cout << "wrote " << out_path << "\n";
    print_tetra_metadata(inst);
    return kExitOk;
}

int cmd_opt(const std::string& path, int n, int m, bool force, int64_t scale,
            const std::string& tour_out) {
    if (!path.empty()) {
        const Instance inst = load_instance(path);
        if (inst.size() > 20)
            throw SizeGuardError("no exact path available for " + std::to_string(inst.size()) +
                                 " vertices (dynamic program capped at 20)");
        const OracleResult res = held_karp_opt(inst);
        if (!tour_out.empty()) write_text(tour_out, tour_to_text(res.tour));
        std::cout.precision(12);
        std::cout << "tour: " << tour_to_text(res.tour);
        std::cout << "exact length: " << res.length << "\n";
        // Imported files already carry scaled integer coordinates.
        std::cout << "euc2d length: " << tour_length(res.tour, Metric::Euc2dRounded, 1) << "\n";
        return kExitOk;
    }

    const Instance inst = force ? build_modified_tetrahedron_forced(n, m) : build_modified_tetrahedron(n, m);
    const Tour tstar = build_optimal_tour(inst);
    if (!tour_out.empty()) write_text(tour_out, tour_to_text(tstar));
    std::cout.precision(12);
    std::cout << "tour: " << tour_to_text(tstar);
    std::cout << "exact length: " << tour_length(tstar) << "\n";
    std::cout << "euc2d length: " << tour_length(tstar, Metric::Euc2dRounded, scale) << "\n";
    if (!force) {
        std::cout << "closed form: " << optimal_tour_length(n, m) << "\n";
        if (2 * n <= 3 * m) {
            const auto [lo, hi] = opt_length_bounds(n);
            const bool ok = tour_length(tstar) >= lo - 1e-9 && tour_length(tstar) <= hi + 1e-9;
            std::cout << "length bounds [" << lo << ", " << hi << "]: " << (ok ? "ok" : "VIOLATED") << "\n";
        }
    }
    return kExitOk;
}

int cmd_lp(const std::string& path, int n, int m, bool force, bool oracle, double cut_tol) {
    const Instance inst = [&] {
        if (!path.empty()) return load_instance(path);
        return force ? build_modified_tetrahedron_forced(n, m) : build_modified_tetrahedron(n, m);
    }();

    SubtourLpOptions options;
    options.cut_violation_tol = cut_tol;
    const SubtourLpResult res = solve_subtour_lp(inst, Metric::ExactEuclid, options);
    std::cout.precision(12);
    std::cout << "lp value: " << res.objective << "\n";
    std::cout << "cuts: " << res.cuts_added << "\n";
    std::cout << "pivots: " << res.lp_iterations << "\n";
    if (res.stalled) std::cout << "warning: cutting-plane loop stalled before certification\n";
    if (oracle) {
        const double exact = enumerate_subtour_lp(inst);
        std::cout << "enumeration value: " << exact << "\n";
        std::cout << "difference: " << res.objective - exact << "\n";
    }
    return kExitOk;
}

int cmd_ratio(const std::vector<int>& n_list, const std::vector<int>& m_list, int lp_max_n,
              const std::string& csv_out) {
    std::vector<std::pair<int, int>> grid;
    for (size_t i = 0; i < n_list.size(); ++i) {
        const int n = n_list[i];
        const int m = i < m_list.size() ? m_list[i] : (2 * n + 2) / 3 + 1;
        grid.emplace_back(n, m);
    }

    RatioOptions options;
    options.lp_max_vertices = lp_max_n;
    const std::vector<ConvergenceRow> rows = convergence_table(grid, options);
    std::vector<BoundReport> reports;
    for (const auto& row : rows) reports.push_back(row.report);
    const std::string csv = reports_to_csv(reports);
    if (csv_out.empty())
        std::cout << csv;
    else
        write_text(csv_out, csv);
    return kExitOk;
}

int cmd_bench(const std::string& command, const std::string& seed_spec, int reps, double timeout,
              const std::vector<std::string>& files, const std::string& csv_out) {
    BenchConfig config;
    config.command_template = command;
    config.seeds = parse_seed_spec(seed_spec);
    config.repetitions = reps;
    config.timeout_seconds = timeout;

    const BenchResult result = run_bench(config, files);
    const std::string csv = bench_records_to_csv(result.records);
    if (csv_out.empty())
        std::cout << csv;
    else
        write_text(csv_out, csv);

    int successes = 0;
    for (const auto& summary : result.summaries) {
        successes += summary.runs - summary.failures;
        std::cout << "# " << summary.instance_name << " N=" << summary.vertex_count
                  << " runs=" << summary.runs << " failures=" << summary.failures;
        if (summary.failures < summary.runs)
            std::cout << " min=" << summary.min_seconds << " avg=" << summary.avg_seconds
                      << " max=" << summary.max_seconds;
        std::cout << "\n";
    }
    if (result.model) {
        std::cout << "# fit: seconds = " << result.model->a << " * " << result.model->b
                  << "^N (log-rms " << result.model->residual << ")\n";
    } else {
        std::cout << "# fit: not available (need successful runs on >= 3 distinct sizes)\n";
    }
    return successes > 0 ? kExitOk : kExitExternalFailure;
}

int cmd_fit(const std::string& points_path, const std::vector<double>& predict_at) {
    std::ifstream in(points_path);
    if (!in) throw PreconditionError("cannot read " + points_path);
    std::vector<std::pair<double, double>> points;
    std::string line;
    while (std::getline(in, line)) {
        for (auto& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream row(line);
        double N = 0.0, seconds = 0.0;
        if (row >> N >> seconds) points.emplace_back(N, seconds);
    }
    const RuntimeModel model = fit_runtime_model(points);
    std::cout.precision(10);
    std::cout << "a: " << model.a << "\n";
    std::cout << "b: " << model.b << "\n";
    std::cout << "log-rms residual: " << model.residual << "\n";
    for (double N : predict_at)
        std::cout << "predict(" << N << "): " << predict_runtime(model, N) << " seconds\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euclidean TSP instance families with provable integrality-ratio behavior"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "write a TSPLIB instance file");
    std::string gen_family;
    int gen_n = 0, gen_m = 0, gen_size = 0;
    double gen_d = 1.0;
    bool gen_force = false;
    int64_t gen_scale = 10000;
    std::string gen_out;
    generate->add_option("family", gen_family, "tetra | tetra-mod | lines")->required();
    generate->add_option("--n", gen_n, "points per triangle side / per line");
    generate->add_option("--m", gen_m, "points per internal segment");
    generate->add_option("--d", gen_d, "line distance (lines family)");
    generate->add_option("--size", gen_size, "target vertex count; picks hard (n, m) for tetra");
    generate->add_flag("--force", gen_force, "build sub-threshold modified instances (rendering only)");
    generate->add_option("--scale", gen_scale, "coordinate scale factor")->default_val(10000);
    generate->add_option("--out", gen_out, "output path (default <name>.tsp)");

    // opt
    auto* opt = app.add_subcommand("opt", "provably optimal tour and its length");
    std::string opt_path;
    int opt_n = 0, opt_m = 0;
    bool opt_force = false;
    int64_t opt_scale = 10000;
    std::string opt_tour_out;
    opt->add_option("file", opt_path, "TSPLIB file (<= 20 vertices, exact oracle)");
    opt->add_option("--n", opt_n, "modified tetrahedron n");
    opt->add_option("--m", opt_m, "modified tetrahedron m");
    opt->add_flag("--force", opt_force, "accept sub-threshold parameters");
    opt->add_option("--scale", opt_scale, "scale for the rounded length view")->default_val(10000);
    opt->add_option("--tour-out", opt_tour_out, "write the tour ids to this file");

    // lp
    auto* lp = app.add_subcommand("lp", "subtour relaxation value via cutting planes");
    std::string lp_path;
    int lp_n = 0, lp_m = 0;
    bool lp_force = false, lp_oracle = false;
    double lp_cut_tol = 1e-6;
    lp->add_option("file", lp_path, "TSPLIB file");
    lp->add_option("--n", lp_n, "modified tetrahedron n");
    lp->add_option("--m", lp_m, "modified tetrahedron m");
    lp->add_flag("--force", lp_force, "accept sub-threshold parameters");
    lp->add_flag("--oracle", lp_oracle, "also run the subset-enumeration oracle (<= 16 vertices)");
    lp->add_option("--cut-tol", lp_cut_tol, "cut violation tolerance")->default_val(1e-6);

    // ratio
    auto* ratio = app.add_subcommand("ratio", "integrality-ratio table over an (n, m) grid");
    std::vector<int> ratio_n, ratio_m;
    int ratio_lp_max = 600;
    std::string ratio_csv;
    ratio->add_option("--n-list", ratio_n, "n values")->delimiter(',');
    ratio->add_option("--m-list", ratio_m, "m values (default ceil(2n/3)+1 per n)")->delimiter(',');
    ratio->add_option("--lp-max-n", ratio_lp_max,
                      "largest vertex count solved by cutting planes; larger instances use the "
                      "explicit-solution bound midpoint")
        ->default_val(600);
    ratio->add_option("--csv-out", ratio_csv, "write the CSV here instead of stdout");

    // bench
    auto* bench = app.add_subcommand("bench", "time an external solver over seeds");
    std::string bench_cmd, bench_seeds = "1", bench_csv;
    int bench_reps = 1;
    double bench_timeout = 0.0;
    std::vector<std::string> bench_files;
    bench->add_option("--cmd", bench_cmd, "command template with {file} and {seed}")->required();
    bench->add_option("--seeds", bench_seeds, "seed list, e.g. 1-10 or 1,5,9")->default_val("1");
    bench->add_option("--reps", bench_reps, "repetitions per seed")->default_val(1);
    bench->add_option("--timeout", bench_timeout, "per-run timeout in seconds (0 = none)")->default_val(0.0);
    bench->add_option("files", bench_files, "TSPLIB instance files")->required();
    bench->add_option("--csv-out", bench_csv, "write the record CSV here instead of stdout");

    // fit
    auto* fit = app.add_subcommand("fit", "fit seconds = a * b^N to (N, seconds) points");
    std::string fit_points;
    std::vector<double> fit_predict;
    fit->add_option("--points", fit_points, "file with 'N seconds' or 'N,seconds' lines")->required();
    fit->add_option("--predict", fit_predict, "evaluate the fitted model at these N")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitPrecondition;
    }

    try {
        if (generate->parsed())
            return cmd_generate(gen_family, gen_n, gen_m, gen_d, gen_size, gen_force, gen_scale, gen_out);
        if (opt->parsed()) return cmd_opt(opt_path, opt_n, opt_m, opt_force, opt_scale, opt_tour_out);
        if (lp->parsed()) return cmd_lp(lp_path, lp_n, lp_m, lp_force, lp_oracle, lp_cut_tol);
        if (ratio->parsed()) return cmd_ratio(ratio_n, ratio_m, ratio_lp_max, ratio_csv);
        if (bench->parsed())
            return cmd_bench(bench_cmd, bench_seeds, bench_reps, bench_timeout, bench_files, bench_csv);
        if (fit->parsed()) return cmd_fit(fit_points, fit_predict);
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExternalFailure;
    }
    return kExitPrecondition;
}
