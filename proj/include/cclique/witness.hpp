#pragma once

#include <functional>
#include <vector>

#include "cclique/graph.hpp"
#include "cclique/matrix.hpp"
#include "cclique/network.hpp"

namespace cclique {

/// Black-box distance-product routine the witness machinery drives.
using DistanceProductFn = std::function<SrMatrix<MinPlusSR>(
    const SrMatrix<MinPlusSR>&, const SrMatrix<MinPlusSR>&, CliqueNetwork&)>;

/// S(U, W): rows outside U and columns outside W become infinity.
SrMatrix<MinPlusSR> mask(const SrMatrix<MinPlusSR>& s, const std::vector<int>& rows,
                         const std::vector<int>& cols);

struct WitnessResult {
    int n = 0;
    std::vector<int> q;  // -1 = unknown
    long long product_calls = 0;

    int at(int u, int v) const { return q[static_cast<std::size_t>(u) * n + v]; }
    std::vector<std::pair<int, int>> unknown_pairs(const SrMatrix<MinPlusSR>& p) const;
};

/// Witnesses for pairs with a unique witness, by bit-index masking; every
/// candidate is verified distributively, non-witnesses stay unknown.
/// Exactly ceil(log2 n) product calls.
WitnessResult witness_unique(const SrMatrix<MinPlusSR>& s, const SrMatrix<MinPlusSR>& t,
                             const SrMatrix<MinPlusSR>& p, const DistanceProductFn& product,
                             CliqueNetwork& net);

/// General witness recovery by random subset sampling over the unique-case
/// routine; ceil(c log n) trials per level. Pairs still unresolved after all
/// trials remain unknown in the result.
WitnessResult witness_general(const SrMatrix<MinPlusSR>& s, const SrMatrix<MinPlusSR>& t,
                              const SrMatrix<MinPlusSR>& p, const DistanceProductFn& product,
                              std::uint64_t seed, int c, CliqueNetwork& net);

/// Exact set of finite pairs where q is unknown or fails the witness
/// equation. Centralized; the test-side check both routines are held to.
std::vector<std::pair<int, int>> verify_witnesses(const SrMatrix<MinPlusSR>& s,
                                                  const SrMatrix<MinPlusSR>& t,
                                                  const SrMatrix<MinPlusSR>& p,
                                                  const std::vector<int>& q);

/// First-hop table for exact distances d under weight matrix w: witnesses of
/// trunc(w) * d with the diagonal masked out. Used by the diameter solver.
std::vector<int> diameter_routing_hops(const WeightMatrix& w, const SrMatrix<MinPlusSR>& d,
                                       long long bound, CliqueNetwork& net);

}  // namespace cclique
