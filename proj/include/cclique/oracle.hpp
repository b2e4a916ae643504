#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cclique/graph.hpp"
#include "cclique/matrix.hpp"

namespace cclique {
namespace oracle {

/// Raised when a shortest-path computation meets a negative cycle; carries
/// one node on the offending cycle.
class negative_cycle_error : public std::runtime_error {
public:
    explicit negative_cycle_error(int node)
        : std::runtime_error("negative cycle through node " + std::to_string(node)), node_(node) {}
    int node() const { return node_; }

private:
    int node_;
};

/// Exact distances by Floyd-Warshall; throws negative_cycle_error.
SrMatrix<MinPlusSR> floyd_warshall(const WeightMatrix& w);

/// Hop distances from every source by repeated BFS.
SrMatrix<MinPlusSR> bfs_all(const Graph& g);

/// Exact count of simple k-cycles. Undirected cycles count once per vertex
/// set with its cyclic structure; directed cycles once per orientation. The
/// work is exponential in k, guarded by an explicit budget.
long long enumerate_kcycles(const Graph& g, int k);

/// Shortest cycle length; Weight::inf() on acyclic graphs. Directed girth
/// may be 1 (self-loop) or 2.
Weight girth_brute(const Graph& g);

/// Min-plus product with the smallest-index argmin witness per entry;
/// witness -1 marks entries with no finite sum.
struct DistanceProduct {
    SrMatrix<MinPlusSR> p;
    std::vector<int> witness;  // n*n, row-major
    int witness_at(int u, int v) const { return witness[static_cast<std::size_t>(u) * p.n() + v]; }
};
DistanceProduct distance_product_oracle(const SrMatrix<MinPlusSR>& s, const SrMatrix<MinPlusSR>& t);

}  // namespace oracle
}  // namespace cclique
