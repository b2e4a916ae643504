// Command-line front end: graph ingestion, algorithm dispatch, seeding, and
// machine-readable result/stats output.

#include <CLI11.hpp>
#include <iostream>

#include "cclique/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"simulated congested-clique algebraic algorithm runner"};
    app.require_subcommand(1);

    cclique::ExperimentConfig cfg;
    long long delta_milli = 50;
    std::string rho = "1/3";
    std::string sizes_csv;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", cfg.input_path, "edge-list or matrix input file");
        if (needs_input) in->required();
        sub->add_option("--n", cfg.n_override, "node count override (graphs smaller than the clique)");
        sub->add_flag("--directed", cfg.directed, "treat the input as directed");
        sub->add_flag("--allow-self-loops", cfg.allow_self_loops, "permit self-loops (directed girth)");
        sub->add_option("--seed", cfg.seed, "64-bit seed");
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--verify", cfg.verify, "run the matching oracle inline");
        sub->add_flag("--serial", cfg.serial, "disable the OpenMP node loops");
    };

    auto* mm = app.add_subcommand("mm", "distributed matrix multiplication");
    add_common(mm, true);
    mm->add_option("--input2", cfg.input2_path, "right-hand matrix (defaults to the left)");
    mm->add_option("--backend", cfg.backend, "semiring3d or bilinear:<L>");
    mm->add_option("--element", cfg.element, "bool, int, or minplus")
        ->check(CLI::IsMember({"bool", "int", "minplus"}));

    auto* tri = app.add_subcommand("triangles", "exact triangle count");
    add_common(tri, true);
    auto* c4 = app.add_subcommand("count-c4", "exact 4-cycle count");
    add_common(c4, true);
    auto* d4 = app.add_subcommand("detect-c4", "constant-round 4-cycle detection");
    add_common(d4, true);
    auto* kc = app.add_subcommand("kcycle", "randomized k-cycle detection");
    add_common(kc, true);
    kc->add_option("--k", cfg.k, "cycle length")->check(CLI::Range(3, 31));

    auto* gi = app.add_subcommand("girth", "undirected girth");
    add_common(gi, true);
    gi->add_option("--rho", rho, "exponent parameter as p/q in (0,1], default 1/3");
    auto* gd = app.add_subcommand("girth-directed", "directed girth");
    add_common(gd, true);

    auto* ap = app.add_subcommand("apsp", "all-pairs shortest paths");
    add_common(ap, true);
    ap->add_option("--mode", cfg.mode, "semiring | seidel | bounded | diameter | approx")
        ->check(CLI::IsMember({"semiring", "seidel", "bounded", "diameter", "approx"}));
    ap->add_option("--bound", cfg.bound_m, "distance cap for --mode bounded");
    ap->add_option("--delta", delta_milli, "per-squaring accuracy in thousandths (50 = 0.05)");

    auto* wt = app.add_subcommand("witness-test", "witness recovery on a random instance");
    add_common(wt, false);
    wt->add_option("--wn", cfg.witness_n, "instance size");
    wt->add_option("--c", cfg.c, "confidence constant");

    auto* sc = app.add_subcommand("scaling", "round-scaling table (CSV)");
    add_common(sc, false);
    sc->add_option("--algo", cfg.mode, "mm-semiring | mm-bilinear | detect-c4 | triangles | broadcast")
        ->required();
    sc->add_option("--sizes", sizes_csv, "comma-separated clique sizes")->required();
    sc->add_option("--trials", cfg.trials, "trials per size");

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        cfg.delta_millis = delta_milli;
        if (auto slash = rho.find('/'); slash != std::string::npos) {
            cfg.rho_num = std::stoll(rho.substr(0, slash));
            cfg.rho_den = std::stoll(rho.substr(slash + 1));
        } else {
            cfg.rho_num = std::stoll(rho);
            cfg.rho_den = 1;
        }
        if (!sizes_csv.empty()) {
            std::stringstream ss(sizes_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) cfg.sizes.push_back(std::stoi(tok));
        }
        auto outcome = cclique::run_experiment(cfg);
        std::cout << outcome.document;
        return outcome.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
