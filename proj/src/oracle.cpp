#include "cclique/oracle.hpp"

#include <algorithm>
#include <deque>

namespace cclique {
namespace oracle {

SrMatrix<MinPlusSR> floyd_warshall(const WeightMatrix& w) {
    const int n = w.n();
    SrMatrix<MinPlusSR> d = w.matrix();
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u) {
            if (d(u, k).is_inf()) continue;
            for (int v = 0; v < n; ++v) d(u, v) = min(d(u, v), d(u, k) + d(k, v));
        }
    for (int v = 0; v < n; ++v)
        if (d(v, v) < Weight(0)) throw negative_cycle_error(v);
    return d;
}

SrMatrix<MinPlusSR> bfs_all(const Graph& g) {
    const int n = g.n();
    SrMatrix<MinPlusSR> d(MinPlusSR{}, n);
    for (int s = 0; s < n; ++s) {
        std::vector<long long> dist(n, -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v = 0; v < n; ++v)
                if (g.has_edge(u, v) && dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    q.push_back(v);
                }
        }
        for (int v = 0; v < n; ++v) d(s, v) = dist[v] < 0 ? Weight::inf() : Weight(dist[v]);
    }
    return d;
}

namespace {

/// Depth-first simple-path extension counting cycles anchored at `root`,
/// with root the smallest vertex on the cycle.
void extend_paths(const Graph& g, int root, int k, std::vector<int>& path,
                  std::vector<char>& used, long long& count, long long& budget) {
    if (--budget < 0) throw std::runtime_error("enumerate_kcycles: budget exceeded");
    int last = path.back();
    if (static_cast<int>(path.size()) == k) {
        if (g.has_edge(last, root)) ++count;
        return;
    }
    for (int v = root + 1; v < g.n(); ++v) {
        if (used[v] || !g.has_edge(last, v)) continue;
        used[v] = 1;
        path.push_back(v);
        extend_paths(g, root, k, path, used, count, budget);
        path.pop_back();
        used[v] = 0;
    }
}

}  // namespace

long long enumerate_kcycles(const Graph& g, int k) {
    if (k < 3 && !(g.directed() && k >= 1)) throw std::invalid_argument("enumerate_kcycles: k too small");
    if (k < 1) throw std::invalid_argument("enumerate_kcycles: k too small");
    long long budget = 200'000'000;
    long long count = 0;
    if (g.directed() && k == 1) {
        for (int v = 0; v < g.n(); ++v)
            if (g.has_edge(v, v)) ++count;
        return count;
    }
    if (g.directed() && k == 2) {
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                if (g.has_edge(u, v) && g.has_edge(v, u)) ++count;
        return count;
    }
    for (int root = 0; root < g.n(); ++root) {
        std::vector<int> path{root};
        std::vector<char> used(g.n(), 0);
        used[root] = 1;
        extend_paths(g, root, k, path, used, count, budget);
    }
    // Each undirected cycle is met twice (two senses); each directed cycle once.
    return g.directed() ? count : count / 2;
}

Weight girth_brute(const Graph& g) {
    const int n = g.n();
    long long best = -1;
    if (g.directed()) {
        for (int v = 0; v < n; ++v)
            if (g.has_edge(v, v)) return Weight(1);
        // BFS from each node back to itself over directed edges.
        for (int s = 0; s < n; ++s) {
            std::vector<long long> dist(n, -1);
            std::deque<int> q{s};
            dist[s] = 0;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (int v = 0; v < n; ++v) {
                    if (!g.has_edge(u, v)) continue;
                    if (v == s) {
                        long long len = dist[u] + 1;
                        if (best < 0 || len < best) best = len;
                        continue;
                    }
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        q.push_back(v);
                    }
                }
            }
        }
        return best < 0 ? Weight::inf() : Weight(best);
    }
    // Undirected: BFS from each edge endpoint with the edge removed.
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) continue;
            std::vector<long long> dist(n, -1);
            std::deque<int> q{u};
            dist[u] = 0;
            while (!q.empty()) {
                int x = q.front();
                q.pop_front();
                for (int y = 0; y < n; ++y) {
                    if (!g.has_edge(x, y)) continue;
                    if ((x == u && y == v) || (x == v && y == u)) continue;
                    if (dist[y] < 0) {
                        dist[y] = dist[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            if (dist[v] >= 0) {
                long long len = dist[v] + 1;
                if (best < 0 || len < best) best = len;
            }
        }
    return best < 0 ? Weight::inf() : Weight(best);
}

DistanceProduct distance_product_oracle(const SrMatrix<MinPlusSR>& s, const SrMatrix<MinPlusSR>& t) {
    require_compatible(s, t);
    const int n = s.n();
    DistanceProduct r{SrMatrix<MinPlusSR>(MinPlusSR{}, n),
                      std::vector<int>(static_cast<std::size_t>(n) * n, -1)};
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            Weight best = Weight::inf();
            int wit = -1;
            for (int w = 0; w < n; ++w) {
                Weight cand = s(u, w) + t(w, v);
                if (cand < best) {
                    best = cand;
                    wit = w;
                }
            }
            r.p(u, v) = best;
            if (!best.is_inf()) r.witness[static_cast<std::size_t>(u) * n + v] = wit;
        }
    return r;
}

}  // namespace oracle
}  // namespace cclique
