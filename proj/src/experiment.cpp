#include "cclique/experiment.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cclique/girth.hpp"
#include "cclique/oracle.hpp"
#include "cclique/subgraph.hpp"
#include "cclique/witness.hpp"

namespace cclique {

namespace {

using json = nlohmann::ordered_json;

NetworkOptions net_options(const ExperimentConfig& cfg) {
    NetworkOptions opt;
    opt.exec = cfg.serial ? ExecMode::Serial : default_exec_mode();
    return opt;
}

json config_echo(const ExperimentConfig& cfg) {
    json j;
    j["subcommand"] = cfg.subcommand;
    if (!cfg.input_path.empty()) j["input"] = cfg.input_path;
    if (cfg.n_override >= 0) j["n"] = cfg.n_override;
    j["directed"] = cfg.directed;
    j["seed"] = cfg.seed;
    return j;
}

json weight_json(Weight w) {
    if (w.is_inf()) return json("inf");
    return json(w.value());
}

json matrix_json(const SrMatrix<MinPlusSR>& m) {
    json rows = json::array();
    for (int u = 0; u < m.n(); ++u) {
        json row = json::array();
        for (int v = 0; v < m.n(); ++v) row.push_back(weight_json(m(u, v)));
        rows.push_back(row);
    }
    return rows;
}

std::string matrix_csv(const SrMatrix<MinPlusSR>& m, const std::vector<int>* hops) {
    std::ostringstream out;
    out << (hops ? "u,v,dist,hop\n" : "u,v,dist\n");
    for (int u = 0; u < m.n(); ++u)
        for (int v = 0; v < m.n(); ++v) {
            out << u << "," << v << "," << m(u, v).str();
            if (hops) out << "," << (*hops)[static_cast<std::size_t>(u) * m.n() + v];
            out << "\n";
        }
    return out.str();
}

json routing_json(const std::vector<int>& hops, int n) {
    json rows = json::array();
    for (int u = 0; u < n; ++u) {
        json row = json::array();
        for (int v = 0; v < n; ++v) row.push_back(hops[static_cast<std::size_t>(u) * n + v]);
        rows.push_back(row);
    }
    return rows;
}

ExperimentOutcome finish(const ExperimentConfig& cfg, json doc, int code) {
    doc["seed"] = cfg.seed;
    ExperimentOutcome out;
    out.exit_code = code;
    out.document = doc.dump(2) + "\n";
    return out;
}

Graph load_graph(const ExperimentConfig& cfg) {
    EdgeListOptions opt;
    opt.directed = cfg.directed;
    opt.allow_self_loops = cfg.allow_self_loops;
    opt.n_override = cfg.n_override;
    return ingest_edge_list(cfg.input_path, opt);
}

WeightMatrix load_weights(const ExperimentConfig& cfg) {
    EdgeListOptions opt;
    opt.directed = cfg.directed;
    opt.n_override = cfg.n_override;
    return ingest_weighted_edge_list(cfg.input_path, opt);
}

int next_cube(int n) {
    int s = 1;
    while (s * s * s < n) ++s;
    return s * s * s;
}

ExperimentOutcome run_mm(const ExperimentConfig& cfg) {
    std::ifstream f(cfg.input_path);
    if (!f) throw std::runtime_error("cannot open input file: " + cfg.input_path);
    std::stringstream buf;
    buf << f.rdbuf();
    auto s = parse_dense_matrix(buf.str());
    auto t = s;
    if (!cfg.input2_path.empty()) {
        std::ifstream f2(cfg.input2_path);
        if (!f2) throw std::runtime_error("cannot open input file: " + cfg.input2_path);
        std::stringstream buf2;
        buf2 << f2.rdbuf();
        t = parse_dense_matrix(buf2.str());
    }
    if (s.n() != t.n()) throw std::invalid_argument("mm: operand dimensions differ");

    json doc;
    doc["config"] = config_echo(cfg);
    doc["config"]["backend"] = cfg.backend;
    doc["config"]["element"] = cfg.element;

    int want = std::max(cfg.n_override, s.n());
    int n = want;
    BilinearAlgorithm ba = BilinearAlgorithm::trivial();
    if (cfg.backend == "semiring3d") {
        n = next_cube(want);
    } else if (cfg.backend.rfind("bilinear:", 0) == 0) {
        int level = std::stoi(cfg.backend.substr(9));
        if (level < 1) throw std::invalid_argument("mm: recursion depth must be >= 1");
        ba = BilinearAlgorithm::strassen_power(level);
        n = std::max(want, ba.m());
    } else {
        throw std::invalid_argument("mm: unknown backend " + cfg.backend);
    }
    if (n != want) {
        doc["config"]["padding_notice"] =
            "padded node count from " + std::to_string(want) + " to " + std::to_string(n);
    }
    CliqueNetwork net(n, cfg.seed, net_options(cfg));

    SrMatrix<MinPlusSR> result(MinPlusSR{}, s.n());
    bool ok = true;
    if (cfg.element == "minplus") {
        if (cfg.backend != "semiring3d")
            throw std::invalid_argument("mm: the min-plus semiring needs the semiring3d backend");
        result = mm_semiring(s, t, net);
        if (cfg.verify) ok = result == mat_mul_oracle(s, t);
    } else {
        // Integer or boolean entries ride the min-plus container on the way in.
        IntRing ring;
        SrMatrix<IntRing> si(ring, s.n()), ti(ring, t.n());
        for (int u = 0; u < s.n(); ++u)
            for (int v = 0; v < s.n(); ++v) {
                if (s(u, v).is_inf() || t(u, v).is_inf())
                    throw std::invalid_argument("mm: 'inf' entry outside the min-plus semiring");
                si(u, v) = s(u, v).value();
                ti(u, v) = t(u, v).value();
                if (cfg.element == "bool" && (si(u, v) > 1 || si(u, v) < 0 || ti(u, v) > 1 || ti(u, v) < 0))
                    throw std::invalid_argument("mm: boolean entries must be 0/1");
            }
        SrMatrix<IntRing> p(ring, s.n());
        if (cfg.backend == "semiring3d") {
            p = mm_semiring(si, ti, net);
        } else {
            p = mm_bilinear(si, ti, ba, net);
        }
        if (cfg.element == "bool")
            for (int u = 0; u < p.n(); ++u)
                for (int v = 0; v < p.n(); ++v) p(u, v) = p(u, v).is_zero() ? 0 : 1;
        if (cfg.verify) {
            auto want_p = mat_mul_oracle(si, ti);
            if (cfg.element == "bool")
                for (int u = 0; u < want_p.n(); ++u)
                    for (int v = 0; v < want_p.n(); ++v) want_p(u, v) = want_p(u, v).is_zero() ? 0 : 1;
            ok = p == want_p;
        }
        for (int u = 0; u < p.n(); ++u)
            for (int v = 0; v < p.n(); ++v) result(u, v) = Weight(static_cast<long long>(p(u, v)));
    }

    doc["result"] = matrix_json(result);
    if (cfg.verify) doc["verify"] = json{{"oracle_match", ok}};
    doc["stats"] = json::parse(net.stats_json("mm-" + cfg.backend));
    return finish(cfg, doc, cfg.verify && !ok ? 1 : 0);
}

ExperimentOutcome run_apsp(const ExperimentConfig& cfg) {
    json doc;
    doc["config"] = config_echo(cfg);
    doc["config"]["mode"] = cfg.mode;

    if (cfg.mode == "seidel") {
        Graph g = load_graph(cfg);
        CliqueNetwork net(g.n(), cfg.seed, net_options(cfg));
        auto d = apsp_seidel(g, net);
        doc["result"] = json{{"distances", matrix_json(d)}};
        if (cfg.verify) {
            bool ok = d == oracle::bfs_all(g);
            doc["verify"] = json{{"oracle_match", ok}};
            if (!ok) return finish(cfg, doc, 1);
        }
        doc["stats"] = json::parse(net.stats_json("apsp-seidel"));
        if (cfg.format == "csv") return ExperimentOutcome{0, matrix_csv(d, nullptr)};
        return finish(cfg, doc, 0);
    }

    WeightMatrix w = load_weights(cfg);
    CliqueNetwork net(w.n(), cfg.seed, net_options(cfg));
    if (cfg.mode == "semiring") {
        auto res = apsp_semiring(w, net);
        doc["result"] = json{{"distances", matrix_json(res.d)},
                             {"routing", routing_json(res.routing, res.d.n())}};
        if (cfg.verify) {
            bool ok = res.d == oracle::floyd_warshall(w);
            doc["verify"] = json{{"oracle_match", ok}};
            if (!ok) return finish(cfg, doc, 1);
        }
        doc["stats"] = json::parse(net.stats_json("apsp-semiring"));
        if (cfg.format == "csv") return ExperimentOutcome{0, matrix_csv(res.d, &res.routing)};
        return finish(cfg, doc, 0);
    }
    if (cfg.mode == "bounded") {
        if (cfg.bound_m < 0) throw std::invalid_argument("apsp bounded: --bound is required");
        auto d = apsp_bounded(w, cfg.bound_m, net);
        doc["result"] = json{{"distances", matrix_json(d)}, {"bound", cfg.bound_m}};
        if (cfg.verify) {
            auto fw = oracle::floyd_warshall(w);
            bool ok = true;
            for (int u = 0; u < w.n() && ok; ++u)
                for (int v = 0; v < w.n() && ok; ++v) {
                    Weight want = (!fw(u, v).is_inf() && fw(u, v).value() <= cfg.bound_m)
                                      ? fw(u, v)
                                      : Weight::inf();
                    ok = d(u, v) == want;
                }
            doc["verify"] = json{{"oracle_match", ok}};
            if (!ok) return finish(cfg, doc, 1);
        }
        doc["stats"] = json::parse(net.stats_json("apsp-bounded"));
        if (cfg.format == "csv") return ExperimentOutcome{0, matrix_csv(d, nullptr)};
        return finish(cfg, doc, 0);
    }
    if (cfg.mode == "diameter") {
        auto res = apsp_diameter(w, net);
        doc["result"] = json{{"distances", matrix_json(res.dist.d)},
                             {"routing", routing_json(res.dist.routing, res.dist.d.n())},
                             {"final_diameter_guess", res.final_bound}};
        if (cfg.verify) {
            bool ok = res.dist.d == oracle::floyd_warshall(w);
            doc["verify"] = json{{"oracle_match", ok}};
            if (!ok) return finish(cfg, doc, 1);
        }
        doc["stats"] = json::parse(net.stats_json("apsp-diameter"));
        if (cfg.format == "csv") return ExperimentOutcome{0, matrix_csv(res.dist.d, &res.dist.routing)};
        return finish(cfg, doc, 0);
    }
    if (cfg.mode == "approx") {
        if (cfg.delta_millis <= 0) throw std::invalid_argument("apsp approx: delta must be > 0");
        Delta delta = Delta::from_millis(cfg.delta_millis);
        auto res = apsp_approx(w, delta, net);
        doc["result"] = json{{"distances", matrix_json(res.d)},
                             {"routing", routing_json(res.routing, res.d.n())},
                             {"approximate", true},
                             {"delta", json{{"num", delta.num}, {"den", delta.den}}}};
        if (cfg.verify) {
            auto fw = oracle::floyd_warshall(w);
            // Sandwich: d <= approx <= (1+delta)^ceil(log2 n) d, checked in
            // exact integer arithmetic.
            int t = 0;
            while ((1 << t) < std::max(2, w.n())) ++t;
            BigInt p = delta.den + delta.num, q = delta.den, pp = 1, qq = 1;
            for (int i = 0; i < t; ++i) pp *= p, qq *= q;
            bool ok = true;
            long long worst_num = 0, worst_den = 1;
            for (int u = 0; u < w.n() && ok; ++u)
                for (int v = 0; v < w.n() && ok; ++v) {
                    if (fw(u, v).is_inf()) {
                        ok = res.d(u, v).is_inf();
                        continue;
                    }
                    long long exact = fw(u, v).value(), got = res.d(u, v).value();
                    ok = got >= exact && BigInt(got) * qq <= BigInt(exact) * pp;
                    if (exact > 0 && got * worst_den > worst_num * exact) {
                        worst_num = got;
                        worst_den = exact;
                    }
                }
            doc["verify"] = json{{"sandwich_holds", ok},
                                 {"worst_ratio", json{{"num", worst_num}, {"den", worst_den}}}};
            if (!ok) return finish(cfg, doc, 1);
        }
        doc["stats"] = json::parse(net.stats_json("apsp-approx"));
        if (cfg.format == "csv") return ExperimentOutcome{0, matrix_csv(res.d, &res.routing)};
        return finish(cfg, doc, 0);
    }
    throw std::invalid_argument("apsp: unknown mode " + cfg.mode);
}

ExperimentOutcome run_witness_test(const ExperimentConfig& cfg) {
    const int n = cfg.witness_n;
    if (n < 2) throw std::invalid_argument("witness-test: need n >= 2");
    Rng rng(cfg.seed);
    SrMatrix<MinPlusSR> s(MinPlusSR{}, n), t(MinPlusSR{}, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            s(u, v) = Weight(rng.range(0, 9));
            t(u, v) = Weight(rng.range(0, 9));
        }
    CliqueNetwork net(n, cfg.seed, net_options(cfg));
    auto p = oracle::distance_product_oracle(s, t).p;
    DistanceProductFn product = [](const SrMatrix<MinPlusSR>& a, const SrMatrix<MinPlusSR>& b,
                                   CliqueNetwork& nn) { return dp_exact_small(a, b, 18, nn); };
    auto res = witness_general(s, t, p, product, cfg.seed, cfg.c, net);
    auto bad = verify_witnesses(s, t, p, res.q);

    json doc;
    doc["config"] = config_echo(cfg);
    doc["config"]["c"] = cfg.c;
    doc["config"]["witness_n"] = n;
    doc["result"] = json{{"unknown_or_invalid", bad.size()}, {"product_calls", res.product_calls}};
    doc["stats"] = json::parse(net.stats_json("witness-test"));
    return finish(cfg, doc, bad.empty() ? 0 : 1);
}

}  // namespace

std::string scaling_report(const std::string& algo, const std::vector<int>& sizes, int trials,
                           std::uint64_t seed, bool serial) {
    std::ostringstream out;
    out << "algo,n,trial,rounds,max_out,max_in,total_words\n";
    NetworkOptions opt;
    opt.exec = serial ? ExecMode::Serial : default_exec_mode();
    for (int n : sizes) {
        for (int trial = 0; trial < trials; ++trial) {
            std::uint64_t s = seed + 1000003ULL * trial;
            CliqueNetwork net(n, s, opt);
            Rng rng(s ^ 0xabcd);
            if (algo == "mm-semiring") {
                SrMatrix<BooleanSR> a(BooleanSR{}, n);
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) a(u, v) = rng.chance(1, 2) ? 1 : 0;
                mm_semiring(a, a, net);
            } else if (algo == "mm-bilinear") {
                auto ba = BilinearAlgorithm::for_nodes(n);
                IntRing ring;
                SrMatrix<IntRing> a(ring, n);
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) a(u, v) = rng.range(0, 4);
                mm_bilinear(a, a, ba, net);
            } else if (algo == "detect-c4") {
                Rng grng(s ^ 0x9e1);
                Graph g = make_gnp(n, 1, 8, grng);
                detect_4cycle_constant(g, net);
            } else if (algo == "triangles") {
                Rng grng(s ^ 0x9e2);
                Graph g = make_gnp(n, 1, 2, grng);
                count_triangles(g, net);
            } else if (algo == "broadcast") {
                std::vector<Word> w(n);
                for (int v = 0; v < n; ++v) w[v] = rng.next();
                net.broadcast_all(w);
            } else {
                throw std::invalid_argument("scaling: unknown algorithm " + algo);
            }
            const auto& st = net.stats();
            out << algo << "," << n << "," << trial << "," << st.rounds_total << "," << st.max_out
                << "," << st.max_in << "," << st.total_words << "\n";
        }
    }
    return out.str();
}

ExperimentOutcome run_experiment(const ExperimentConfig& cfg) {
    if (cfg.rho_num <= 0 || cfg.rho_den <= 0 || cfg.rho_num > cfg.rho_den)
        throw std::invalid_argument("rho must lie in (0, 1]");
    const std::string& cmd = cfg.subcommand;
    if (cmd == "mm") return run_mm(cfg);
    if (cmd == "apsp") return run_apsp(cfg);
    if (cmd == "witness-test") return run_witness_test(cfg);
    if (cmd == "scaling")
        return ExperimentOutcome{0, scaling_report(cfg.mode, cfg.sizes, cfg.trials, cfg.seed, cfg.serial)};

    json doc;
    doc["config"] = config_echo(cfg);
    if (cmd == "triangles" || cmd == "count-c4") {
        Graph g = load_graph(cfg);
        CliqueNetwork net(g.n(), cfg.seed, net_options(cfg));
        BigInt count = cmd == "triangles" ? count_triangles(g, net) : count_4cycles(g, net);
        doc["result"] = count.str();
        if (cfg.verify) {
            BigInt want = oracle::enumerate_kcycles(g, cmd == "triangles" ? 3 : 4);
            bool ok = count == want;
            doc["verify"] = json{{"oracle_match", ok}, {"expected", want.str()}};
            if (!ok) return finish(cfg, doc, 1);
        }
        doc["stats"] = json::parse(net.stats_json(cmd));
        return finish(cfg, doc, 0);
    }
    if (cmd == "detect-c4") {
        Graph g = load_graph(cfg);
        CliqueNetwork net(g.n(), cfg.seed, net_options(cfg));
        bool found = detect_4cycle_constant(g, net);
        doc["result"] = found;
        if (cfg.verify) {
            bool want = oracle::enumerate_kcycles(g, 4) > 0;
            doc["verify"] = json{{"oracle_match", found == want}};
            if (found != want) return finish(cfg, doc, 1);
        }
        doc["stats"] = json::parse(net.stats_json(cmd));
        return finish(cfg, doc, found ? 0 : 2);
    }
    if (cmd == "kcycle") {
        Graph g = load_graph(cfg);
        CliqueNetwork net(g.n(), cfg.seed, net_options(cfg));
        bool found = detect_kcycle(g, cfg.k, net);
        doc["result"] = found;
        doc["config"]["k"] = cfg.k;
        doc["stats"] = json::parse(net.stats_json(cmd));
        return finish(cfg, doc, found ? 0 : 2);
    }
    if (cmd == "girth") {
        Graph g = load_graph(cfg);
        CliqueNetwork net(g.n(), cfg.seed, net_options(cfg));
        auto res = girth_undirected(g, cfg.rho_num, cfg.rho_den, net);
        doc["result"] = res.girth.str();
        doc["config"]["rho"] = json{{"num", cfg.rho_num}, {"den", cfg.rho_den}};
        doc["branch"] = res.dense_branch ? "dense" : "sparse";
        if (cfg.verify) {
            bool ok = res.girth == oracle::girth_brute(g);
            doc["verify"] = json{{"oracle_match", ok}};
            if (!ok) return finish(cfg, doc, 1);
        }
        doc["stats"] = json::parse(net.stats_json(cmd));
        return finish(cfg, doc, 0);
    }
    if (cmd == "girth-directed") {
        ExperimentConfig c2 = cfg;
        c2.directed = true;
        Graph g = load_graph(c2);
        CliqueNetwork net(g.n(), cfg.seed, net_options(cfg));
        Weight girth = girth_directed(g, net);
        doc["result"] = girth.str();
        if (cfg.verify) {
            bool ok = girth == oracle::girth_brute(g);
            doc["verify"] = json{{"oracle_match", ok}};
            if (!ok) return finish(cfg, doc, 1);
        }
        doc["stats"] = json::parse(net.stats_json(cmd));
        return finish(cfg, doc, 0);
    }
    throw std::invalid_argument("unknown subcommand: " + cmd);
}

}  // namespace cclique
