#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cclique/apsp.hpp"

namespace cclique {

/// Parsed CLI invocation. Validation happens in run_experiment so the CLI
/// layer stays a thin flag parser.
struct ExperimentConfig {
    std::string subcommand;
    std::string input_path;
    std::string input2_path;  // mm: right-hand matrix, defaults to the left
    int n_override = -1;
    bool directed = false;
    bool allow_self_loops = false;
    long long bound_m = -1;          // apsp --mode bounded
    long long delta_millis = 50;     // approx delta as thousandths
    long long rho_num = 1, rho_den = 3;
    std::uint64_t seed = 0;
    std::string format = "json";     // json | csv
    std::string mode = "semiring";   // apsp mode
    std::string backend = "semiring3d";  // mm: semiring3d | bilinear:L
    std::string element = "int";     // mm: bool | int | minplus
    int k = 4;                       // kcycle length
    int c = 3;                       // witness-test confidence
    int witness_n = 16;
    bool verify = false;
    bool serial = false;
    std::vector<int> sizes;          // scaling sizes
    int trials = 1;
};

struct ExperimentOutcome {
    int exit_code = 0;    // 0 ok, 2 detection-negative, 1 error (via exception)
    std::string document; // JSON or CSV, newline-terminated
};

/// Runs the named algorithm on a fresh simulated clique and renders the
/// result, the round stats, a config echo and the seed. Deterministic:
/// identical config and seed give byte-identical documents.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

/// Scaling table: one CSV row per (size, trial) with rounds and traffic.
std::string scaling_report(const std::string& algo, const std::vector<int>& sizes, int trials,
                           std::uint64_t seed, bool serial = false);

}  // namespace cclique
