#pragma once

#include "cclique/graph.hpp"
#include "cclique/network.hpp"

namespace cclique {

/// Edge-count threshold for the sparse/dense girth dichotomy.
struct GirthBound {
    int ell;  // cycle-length cutoff ceil(2 + 2/rho)
    int q;    // floor(ell / 2)

    /// rho as an exact rational in (0, 1].
    static GirthBound make(long long rho_num, long long rho_den);

    /// Is |E| <= n^(1 + 1/q) + n? Decided by exact integer powering.
    bool is_sparse(long long edges, int n) const;
};

/// Every node learns the full edge set: owners scatter their edges over
/// relay nodes, relays re-broadcast. Requires |E| within the sparse bound.
Graph gather_sparse_graph(const Graph& g, const GirthBound& bound, CliqueNetwork& net);

struct GirthResult {
    Weight girth;
    bool dense_branch = false;
    int trials_used = 0;  // k-cycle detection calls on the dense branch
};

/// Undirected girth: dense graphs must contain a short cycle (found by
/// k-cycle detection for k = 3..ell); sparse graphs are gathered and solved
/// locally.
GirthResult girth_undirected(const Graph& g, long long rho_num, long long rho_den,
                             CliqueNetwork& net);

/// Directed girth by doubling the reachability-by-length matrices and binary
/// searching the first diagonal hit. Self-loops short-circuit to 1.
Weight girth_directed(const Graph& g, CliqueNetwork& net);

}  // namespace cclique
