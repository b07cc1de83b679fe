#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tspgap/analysis.hpp"

namespace tspgap {

// External-solver run configuration. The command template must contain the
// {file} placeholder; {seed} is substituted per run.
struct BenchConfig {
    std::string command_template;
    std::vector<int> seeds;
    int repetitions = 1;
    double timeout_seconds = 0.0;  // 0 disables the timeout
};

struct BenchRecord {
    std::string instance_name;
    int vertex_count = 0;
    int seed = 0;
    int rep = 0;
    double wall_seconds = 0.0;
    int exit_status = 0;
    bool timed_out = false;  // censored at timeout_seconds
};

struct BenchSummary {
    std::string instance_name;
    int vertex_count = 0;
    int runs = 0;
    int failures = 0;
    double min_seconds = 0.0;
    double avg_seconds = 0.0;
    double max_seconds = 0.0;
};

struct BenchResult {
    std::vector<BenchRecord> records;
    std::vector<BenchSummary> summaries;
    std::optional<RuntimeModel> model;  // fitted when >= 3 instance sizes succeeded
};

// CSV with header instance,N,seed,rep,wall_seconds,exit_status,timed_out.
std::string bench_records_to_csv(const std::vector<BenchRecord>& records);

// Runs the command once per (instance, seed, repetition), sequentially, and
// records wall-clock times. Nonzero exits are recorded per row, not fatal;
// timeouts are recorded as censored rows.
BenchResult run_bench(const BenchConfig& config, const std::vector<std::string>& instance_files);

// Single command invocation through the shell with wall-clock timing.
BenchRecord run_command_timed(const std::string& command, double timeout_seconds);

}  // namespace tspgap
