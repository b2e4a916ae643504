#pragma once

#include <vector>

#include "cclique/graph.hpp"
#include "cclique/matmul.hpp"
#include "cclique/network.hpp"

namespace cclique {

/// Exact triangle count via trace(A^3): one fast squaring plus a local
/// row-column product per node for the diagonal.
BigInt count_triangles(const Graph& g, CliqueNetwork& net);

/// Exact 4-cycle count via trace(A^4) and the degree (mutual-degree for
/// directed graphs) correction terms.
BigInt count_4cycles(const Graph& g, CliqueNetwork& net);

/// Colourful k-cycle detection by the halving recurrence over colour
/// subsets, with Boolean products through the integer ring. The colouring
/// must use all k colours.
bool detect_colourful_kcycle(const Graph& g, const std::vector<int>& colouring, int k,
                             CliqueNetwork& net);

/// Randomized k-cycle detection: repeated uniform colourings from the
/// network seed, each tested for a colourful k-cycle. No false positives;
/// false negatives with probability at most 1/n over the seed.
bool detect_kcycle(const Graph& g, int k, CliqueNetwork& net);

/// Disjoint tile allocation in the k x k grid, one f(y) x f(y) tile per node
/// of positive degree, computed deterministically from the degree vector.
struct TilePacking {
    int n = 0;
    int grid = 0;                // n rounded down to a power of two
    std::vector<int> side;       // f(y); 0 for isolated nodes
    std::vector<int> row0, col0; // tile origin; -1 when side == 0

    bool in_a(int y, int a) const { return side[y] > 0 && a >= row0[y] && a < row0[y] + side[y]; }
    /// Chunk of N(y) assigned to the i-th tile row/column, each of size <= 8.
    static std::vector<int> chunk(const std::vector<int>& neigh, int tile_side, int i);
};

TilePacking pack_tiles(const std::vector<int>& degrees, int n);

/// Constant-round 4-cycle detection: the degree gate, then tile-based
/// distribution of all 2-walks. Every phase consumes a fixed, data- and
/// n-independent round budget.
bool detect_4cycle_constant(const Graph& g, CliqueNetwork& net);

}  // namespace cclique
