#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cclique/girth.hpp"
#include "cclique/oracle.hpp"

using namespace cclique;

TEST_CASE("the edge threshold formula is exact") {
    auto b = GirthBound::make(1, 3);
    CHECK(b.ell == 8);
    CHECK(b.q == 4);
    // tau(16, 8) = 16^(5/4) + 16 = 48, an exact power.
    CHECK(b.is_sparse(48, 16));
    CHECK_FALSE(b.is_sparse(49, 16));
    // Non-integer power: tau(6,8) = 6^(5/4) + 6 ~ 15.39.
    CHECK(b.is_sparse(15, 6));
    CHECK_FALSE(b.is_sparse(16, 6));

    auto full = GirthBound::make(1, 1);  // rho = 1 -> ell = 4, q = 2
    CHECK(full.ell == 4);
    CHECK(full.q == 2);
    CHECK_THROWS_AS(GirthBound::make(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(GirthBound::make(5, 3), std::invalid_argument);
}

TEST_CASE("gather_sparse_graph reproduces the edge set everywhere") {
    auto bound = GirthBound::make(1, 3);
    {
        Graph tree(16, false);
        for (int i = 1; i < 16; ++i) tree.add_edge((i - 1) / 2, i);
        CliqueNetwork net(16, 0);
        Graph full = gather_sparse_graph(tree, bound, net);
        for (int u = 0; u < 16; ++u)
            for (int v = 0; v < 16; ++v) CHECK(full.has_edge(u, v) == tree.has_edge(u, v));
        CHECK(oracle::girth_brute(full).is_inf());
    }
    {
        Graph c5 = make_cycle(5);
        CliqueNetwork net(5, 1);
        Graph full = gather_sparse_graph(c5, bound, net);
        CHECK(full.edge_count() == 5);
        CHECK(oracle::girth_brute(full) == Weight(5));
    }
    {
        Rng rng(0x6a);
        for (int trial = 0; trial < 6; ++trial) {
            int n = 12 + static_cast<int>(rng.below(20));
            Graph g = make_gnp(n, 2, n, rng);  // about 2n edges in expectation
            if (!bound.is_sparse(g.edge_count(), n)) continue;
            CliqueNetwork net(n, trial);
            Graph full = gather_sparse_graph(g, bound, net);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) CHECK(full.has_edge(u, v) == g.has_edge(u, v));
            // O(|E|/n) rounds with a small constant.
            CHECK(net.stats().rounds_total <= 2 * (2 * g.edge_count() / n + 2) + 6);
        }
    }
}

TEST_CASE("undirected girth on the fixture ladder") {
    auto run = [](const Graph& g) {
        CliqueNetwork net(g.n(), 0xf1);
        return girth_undirected(g, 1, 3, net);
    };
    CHECK(run(make_cycle(5)).girth == Weight(5));
    CHECK(run(make_petersen()).girth == Weight(5));
    CHECK(run(make_lcf(14, {5, -5})).girth == Weight(6));
    CHECK(run(make_lcf(24, {12, 7, -7})).girth == Weight(7));
    CHECK(run(make_lcf(30, {-13, -9, 7, -7, 9, 13})).girth == Weight(8));
    CHECK(run(make_complete(6)).girth == Weight(3));
    CHECK(run(make_path(9)).girth.is_inf());
    Graph forest(10, false);
    forest.add_edge(0, 1);
    forest.add_edge(2, 3);
    forest.add_edge(3, 4);
    CHECK(run(forest).girth.is_inf());
}

TEST_CASE("dense graphs take the dense branch and stay sound") {
    // K(8,8): 64 edges on 16 nodes, above tau(16,8) = 48; girth 4.
    Graph k88(16, false);
    for (int u = 0; u < 8; ++u)
        for (int v = 8; v < 16; ++v) k88.add_edge(u, v);
    CliqueNetwork net(16, 7);
    auto res = girth_undirected(k88, 1, 3, net);
    CHECK(res.dense_branch);
    CHECK(res.girth == Weight(4));
    CHECK(oracle::girth_brute(k88) == Weight(4));
    // Dichotomy soundness: a dense graph has girth at most ell.
    CHECK(Weight(GirthBound::make(1, 3).ell) >= res.girth);

    Rng rng(0xde);
    for (int trial = 0; trial < 4; ++trial) {
        Graph g = make_gnp(16, 1, 2, rng);
        CliqueNetwork net2(16, trial);
        auto r2 = girth_undirected(g, 1, 3, net2);
        CHECK(r2.girth == oracle::girth_brute(g));
        if (r2.dense_branch) CHECK(oracle::girth_brute(g) <= Weight(8));
    }
}

TEST_CASE("directed girth") {
    {
        Graph g(5, true);
        g.add_edge(2, 2, true);
        CliqueNetwork net(5, 0);
        CHECK(girth_directed(g, net) == Weight(1));
    }
    {
        Graph g(6, true);
        g.add_edge(0, 1);
        g.add_edge(1, 0);
        g.add_edge(2, 3);
        CliqueNetwork net(6, 0);
        CHECK(girth_directed(g, net) == Weight(2));
    }
    {
        CliqueNetwork net(7, 0);
        CHECK(girth_directed(make_cycle(7, true), net) == Weight(7));
    }
    {
        Graph dag(8, true);
        for (int u = 0; u < 8; ++u)
            for (int v = u + 1; v < 8; ++v)
                if ((u + v) % 3 != 0) dag.add_edge(u, v);
        CliqueNetwork net(8, 0);
        CHECK(girth_directed(dag, net).is_inf());
    }
    Rng rng(0xd16);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 6 + static_cast<int>(rng.below(15));
        Graph g = make_gnp(n, 1, 6, rng, true);
        CliqueNetwork net(n, trial);
        CHECK(girth_directed(g, net) == oracle::girth_brute(g));
    }
}
