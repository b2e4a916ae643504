#pragma once

#include <vector>

#include "cclique/graph.hpp"
#include "cclique/matmul.hpp"
#include "cclique/network.hpp"

namespace cclique {

/// Accuracy parameter as an exact rational so level scaling stays in integer
/// arithmetic (no floating-point rounding in the ceilings).
struct Delta {
    long long num = 1, den = 20;

    static Delta from_millis(long long thousandths) { return Delta{thousandths, 1000}; }
    /// The theorem's default 1 / (log2 n)^2.
    static Delta default_for(int n);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Distances plus the routing table R (first hop per pair) and the witness
/// matrix of the last squaring.
struct DistanceResult {
    SrMatrix<MinPlusSR> d;
    std::vector<int> routing;  // -1: unreachable or diagonal
    std::vector<int> witness;  // last squaring's argmin, -1 where infinite
    bool approximate = false;

    DistanceResult() : d(MinPlusSR{}, 0) {}
    int hop(int u, int v) const { return routing[static_cast<std::size_t>(u) * d.n() + v]; }
};

/// Exact APSP by iterated min-plus squaring with native witnesses; accepts
/// negative weights and reports negative cycles. The node count must be a
/// perfect cube (the 3D multiplication runs underneath).
DistanceResult apsp_semiring(const WeightMatrix& w, CliqueNetwork& net);

/// Exact hop distances for unweighted undirected graphs via squaring the
/// graph and the parity rule on S = D * A over the integers.
SrMatrix<MinPlusSR> apsp_seidel(const Graph& g, CliqueNetwork& net);

/// Exact distance product for entries in {0..m, inf} through the polynomial
/// embedding and fast ring multiplication.
SrMatrix<MinPlusSR> dp_exact_small(const SrMatrix<MinPlusSR>& s, const SrMatrix<MinPlusSR>& t,
                                   int m, CliqueNetwork& net);

/// Distances capped at m: entries beyond the cap are truncated to infinity
/// before each embedded squaring.
SrMatrix<MinPlusSR> apsp_bounded(const WeightMatrix& w, long long m, CliqueNetwork& net);

struct DiameterResult {
    DistanceResult dist;
    long long final_bound = 0;  // the doubling guess that settled
};

/// Exact APSP for positive weights by guessing the weighted diameter:
/// reachability first, then bounded APSP with doubling.
DiameterResult apsp_diameter(const WeightMatrix& w, CliqueNetwork& net);

/// (1+delta)-approximate distance product via scaled levels.
SrMatrix<MinPlusSR> dp_approx(const SrMatrix<MinPlusSR>& s, const SrMatrix<MinPlusSR>& t,
                              long long m, Delta delta, CliqueNetwork& net);

/// Approximate APSP: iterated approximate squaring; distances within
/// (1+delta)^ceil(log2 n) of exact. Routing hops are derived from the final
/// matrix and flagged approximate.
DistanceResult apsp_approx(const WeightMatrix& w, Delta delta, CliqueNetwork& net);

}  // namespace cclique
