#include "tspgap/bench.hpp"

#include <sys/types.h>
#include <sys/wait.h>

#include <unistd.h>
#include <csignal>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "tspgap/tsplib.hpp"

namespace tspgap {

namespace {

std::string substitute(std::string text, const std::string& key, const std::string& replacement) {
    size_t at = 0;
    while ((at = text.find(key, at)) != std::string::npos) {
        text.replace(at, key.size(), replacement);
        at += replacement.size();
    }
    return text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("run_bench: cannot read instance file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string base_name(const std::string& path) {
    const size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace

BenchRecord run_command_timed(const std::string& command, double timeout_seconds) {
    BenchRecord record;
    const auto start = std::chrono::steady_clock::now();

    const pid_t pid = fork();
    if (pid < 0) throw std::runtime_error("run_command_timed: fork failed");
    if (pid == 0) {
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }

    int status = 0;
    while (true) {
        const pid_t done = waitpid(pid, &status, WNOHANG);
        if (done == pid) break;
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (timeout_seconds > 0.0 && elapsed > timeout_seconds) {
            kill(pid, SIGKILL);
            waitpid(pid, &status, 0);
            record.timed_out = true;
            break;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(2));
    }

    record.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (record.timed_out) {
        record.wall_seconds = timeout_seconds;
        record.exit_status = -1;
    } else if (WIFEXITED(status)) {
        record.exit_status = WEXITSTATUS(status);
    } else {
        record.exit_status = -1;
    }
    return record;
}

std::string bench_records_to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out.precision(10);
    out << "instance,N,seed,rep,wall_seconds,exit_status,timed_out\n";
    for (const auto& r : records) {
        out << r.instance_name << ',' << r.vertex_count << ',' << r.seed << ',' << r.rep << ','
            << r.wall_seconds << ',' << r.exit_status << ',' << (r.timed_out ? "true" : "false") << '\n';
    }
    return out.str();
}

BenchResult run_bench(const BenchConfig& config, const std::vector<std::string>& instance_files) {
    if (config.command_template.find("{file}") == std::string::npos)
        throw PreconditionError("run_bench: command template must contain {file}");
    if (config.seeds.empty()) throw PreconditionError("run_bench: seed list must not be empty");
    if (config.repetitions < 1) throw PreconditionError("run_bench: repetitions must be >= 1");

    BenchResult result;
    std::vector<std::pair<double, double>> fit_points;  // (N, avg seconds)

    for (const std::string& path : instance_files) {
        const Instance inst = parse_tsplib(read_file(path));
        BenchSummary summary;
        summary.instance_name = base_name(path);
        summary.vertex_count = inst.size();
        summary.min_seconds = std::numeric_limits<double>::infinity();
        double total = 0.0;

        for (int seed : config.seeds) {
            for (int rep = 0; rep < config.repetitions; ++rep) {
                std::string command = substitute(config.command_template, "{file}", path);
                command = substitute(command, "{seed}", std::to_string(seed));
                BenchRecord record = run_command_timed(command, config.timeout_seconds);
                record.instance_name = summary.instance_name;
                record.vertex_count = inst.size();
                record.seed = seed;
                record.rep = rep;

                ++summary.runs;
                if (record.exit_status != 0 || record.timed_out) {
                    ++summary.failures;
                } else {
                    summary.min_seconds = std::min(summary.min_seconds, record.wall_seconds);
                    summary.max_seconds = std::max(summary.max_seconds, record.wall_seconds);
                    total += record.wall_seconds;
                }
                result.records.push_back(std::move(record));
            }
        }

        const int successes = summary.runs - summary.failures;
        if (successes > 0) {
            summary.avg_seconds = total / successes;
            fit_points.emplace_back(static_cast<double>(summary.vertex_count), summary.avg_seconds);
        } else {
            summary.min_seconds = 0.0;
        }
        result.summaries.push_back(std::move(summary));
    }

    // Fit only over distinct instance sizes with measurable averages.
    std::vector<std::pair<double, double>> usable;
    for (const auto& [N, avg] : fit_points)
        if (avg > 0.0) usable.emplace_back(N, avg);
    std::sort(usable.begin(), usable.end());
    usable.erase(std::unique(usable.begin(), usable.end(),
                             [](const auto& a, const auto& b) { return a.first == b.first; }),
                 usable.end());
    if (usable.size() >= 3) result.model = fit_runtime_model(usable);
    return result;
}

}  // namespace tspgap
