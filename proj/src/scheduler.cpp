#include "scheduler.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cclique {
namespace detail {

FlatBatch flatten(const Batch& batch) {
    FlatBatch fb;
    fb.n = batch.n();
    fb.src.reserve(batch.size());
    fb.dst.reserve(batch.size());
    fb.payload.reserve(batch.size());
    for (NodeId s = 0; s < batch.n(); ++s)
        for (const auto& p : batch.from(s)) {
            fb.src.push_back(s);
            fb.dst.push_back(p.dst);
            fb.payload.push_back(p.payload);
        }
    return fb;
}

namespace {

/// Epoch-stamped counter map over a dense key space.
class StampedCounts {
public:
    explicit StampedCounts(std::size_t size) : stamp_(size, 0), count_(size, 0) {}
    void new_epoch() { ++epoch_; }
    long long bump(std::size_t key) {
        if (stamp_[key] != epoch_) {
            stamp_[key] = epoch_;
            count_[key] = 0;
        }
        return count_[key]++;
    }
    long long get(std::size_t key) const { return stamp_[key] == epoch_ ? count_[key] : 0; }

private:
    std::vector<long long> stamp_, count_;
    long long epoch_ = 1;
};

bool is_pow2(int x) { return x > 0 && (x & (x - 1)) == 0; }

/// Euler split of a bipartite multigraph (senders left, receivers right)
/// into two halves so that every vertex's degree splits within one. Dummy
/// edges through two virtual vertices make all degrees even first, so the
/// graph decomposes into even closed trails and alternation is exact.
void euler_halve(const FlatBatch& fb, const std::vector<int>& idx, std::vector<int>& lo,
                 std::vector<int>& hi) {
    const int n = fb.n;
    const int nv = 2 * n + 2;  // left 0..n-1, right n..2n-1, virtuals 2n, 2n+1
    const int vleft = 2 * n, vright = 2 * n + 1;

    struct Inc {
        int edge;  // index into `edges`
        int other;
    };
    std::vector<int> deg(nv, 0);
    struct Edge {
        int a, b;
        int word;  // index into fb, or -1 for dummy
        bool used = false;
    };
    std::vector<Edge> edges;
    edges.reserve(idx.size() + static_cast<std::size_t>(n) + 4);
    for (int w : idx) {
        edges.push_back(Edge{fb.src[w], n + fb.dst[w], w});
        ++deg[fb.src[w]];
        ++deg[n + fb.dst[w]];
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] & 1) {
            edges.push_back(Edge{v, vright, -1});
            ++deg[v];
            ++deg[vright];
        }
    for (int v = n; v < 2 * n; ++v)
        if (deg[v] & 1) {
            edges.push_back(Edge{vleft, v, -1});
            ++deg[vleft];
            ++deg[v];
        }
    if (deg[vleft] & 1) {
        edges.push_back(Edge{vleft, vright, -1});
        ++deg[vleft];
        ++deg[vright];
    }

    std::vector<std::vector<Inc>> adj(nv);
    for (int v = 0; v < nv; ++v) adj[v].reserve(deg[v]);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        adj[edges[e].a].push_back(Inc{e, edges[e].b});
        adj[edges[e].b].push_back(Inc{e, edges[e].a});
    }

    std::vector<std::size_t> ptr(nv, 0);
    auto next_unused = [&](int v) -> int {
        while (ptr[v] < adj[v].size() && edges[adj[v][ptr[v]].edge].used) ++ptr[v];
        return ptr[v] < adj[v].size() ? static_cast<int>(ptr[v]) : -1;
    };

    // All degrees even: decompose into closed trails, alternate sides.
    for (int start = 0; start < nv; ++start) {
        for (;;) {
            int slot = next_unused(start);
            if (slot < 0) break;
            int cur = start;
            int side = 0;
            while (true) {
                int s = next_unused(cur);
                if (s < 0) break;
                Inc inc = adj[cur][s];
                edges[inc.edge].used = true;
                if (edges[inc.edge].word >= 0)
                    (side == 0 ? lo : hi).push_back(edges[inc.edge].word);
                side ^= 1;
                cur = inc.other;
            }
        }
    }
}

/// Recursive Euler split into 2^k groups; per-vertex group degree is exactly
/// ceil(d / 2^k) at most.
void euler_groups(const FlatBatch& fb, const std::vector<int>& idx, int k, int base,
                  std::vector<NodeId>& group) {
    if (k == 0) {
        for (int w : idx) group[w] = base;
        return;
    }
    std::vector<int> lo, hi;
    lo.reserve(idx.size() / 2 + 2);
    hi.reserve(idx.size() / 2 + 2);
    euler_halve(fb, idx, lo, hi);
    euler_groups(fb, lo, k - 1, base, group);
    euler_groups(fb, hi, k - 1, base + (1 << (k - 1)), group);
}

/// Exact bipartite edge colouring with max-degree colours (Konig), by
/// augmenting alternating paths. Quadratic-ish; used only off the
/// power-of-two fast path where batches are small.
std::vector<int> konig_colours(const FlatBatch& fb, long long delta) {
    const int n = fb.n;
    const std::size_t m = fb.size();
    std::vector<std::vector<int>> at(2 * n, std::vector<int>(delta, -1));
    std::vector<int> colour(m, -1);
    std::vector<int> epath;
    for (std::size_t e = 0; e < m; ++e) {
        if (fb.src[e] == fb.dst[e]) continue;  // loopback, never coloured
        int u = fb.src[e], w = n + fb.dst[e];
        int a = -1, b = -1;
        for (int c = 0; c < delta; ++c)
            if (at[u][c] < 0) {
                a = c;
                break;
            }
        for (int c = 0; c < delta; ++c)
            if (at[w][c] < 0) {
                b = c;
                break;
            }
        if (a < 0 || b < 0) throw std::logic_error("konig: no free colour");
        if (at[w][a] >= 0) {
            // Flip the maximal (a,b)-alternating path starting at w.
            epath.clear();
            int cur = w, col = a;
            while (at[cur][col] >= 0) {
                int e2 = at[cur][col];
                epath.push_back(e2);
                int cu = fb.src[e2], cw = n + fb.dst[e2];
                cur = (cur == cu) ? cw : cu;
                col = (col == a) ? b : a;
            }
            for (int e2 : epath) {
                at[fb.src[e2]][colour[e2]] = -1;
                at[n + fb.dst[e2]][colour[e2]] = -1;
            }
            for (int e2 : epath) {
                colour[e2] = (colour[e2] == a) ? b : a;
                at[fb.src[e2]][colour[e2]] = e2;
                at[n + fb.dst[e2]][colour[e2]] = e2;
            }
        }
        colour[e] = a;
        at[u][a] = static_cast<int>(e);
        at[w][a] = static_cast<int>(e);
    }
    return colour;
}

int floor_log2(long long x) {
    int k = 0;
    while ((1LL << (k + 1)) <= x) ++k;
    return k;
}

}  // namespace

long long direct_round_count(const FlatBatch& fb) {
    StampedCounts pairs(static_cast<std::size_t>(fb.n) * fb.n);
    long long worst = 0;
    for (std::size_t w = 0; w < fb.size(); ++w) {
        if (fb.src[w] == fb.dst[w]) continue;
        worst = std::max(worst, pairs.bump(static_cast<std::size_t>(fb.src[w]) * fb.n + fb.dst[w]) + 1);
    }
    return worst;
}

long long max_node_load(const FlatBatch& fb) {
    std::vector<long long> out(fb.n, 0), in(fb.n, 0);
    for (std::size_t w = 0; w < fb.size(); ++w) {
        if (fb.src[w] == fb.dst[w]) continue;
        ++out[fb.src[w]];
        ++in[fb.dst[w]];
    }
    long long worst = 0;
    for (int v = 0; v < fb.n; ++v) worst = std::max({worst, out[v], in[v]});
    return worst;
}

std::vector<NodeId> assign_intermediates(const FlatBatch& fb) {
    const int n = fb.n;
    std::vector<NodeId> inter(fb.size(), 0);
    std::vector<int> real;
    real.reserve(fb.size());
    for (int w = 0; w < static_cast<int>(fb.size()); ++w) {
        if (fb.src[w] == fb.dst[w])
            inter[w] = fb.src[w];
        else
            real.push_back(w);
    }
    if (real.empty() || n == 1) return inter;

    if (is_pow2(n)) {
        std::vector<NodeId> group(fb.size(), 0);
        euler_groups(fb, real, floor_log2(n), 0, group);
        for (int w : real) inter[w] = group[w];
        return inter;
    }

    long long delta = max_node_load(fb);
    if (fb.size() <= 500'000) {
        auto colour = konig_colours(fb, delta);
        for (int w : real) inter[w] = colour[w] % n;
        return inter;
    }
    // Large non-power-of-two batch: Euler split into the next power of two
    // groups folded onto n intermediates; balanced within a factor of two.
    int k = floor_log2(n) + 1;
    std::vector<NodeId> group(fb.size(), 0);
    euler_groups(fb, real, k, 0, group);
    for (int w : real) inter[w] = group[w] % n;
    return inter;
}

Schedule schedule_direct(const FlatBatch& fb) {
    Schedule rounds;
    StampedCounts pairs(static_cast<std::size_t>(fb.n) * fb.n);
    for (std::size_t w = 0; w < fb.size(); ++w) {
        if (fb.src[w] == fb.dst[w]) continue;
        long long r = pairs.bump(static_cast<std::size_t>(fb.src[w]) * fb.n + fb.dst[w]);
        if (static_cast<std::size_t>(r) >= rounds.size()) rounds.resize(r + 1);
        rounds[r].push_back(ScheduledSend{r, fb.src[w], fb.dst[w], fb.payload[w]});
    }
    return rounds;
}

Schedule schedule_relay_strict(const FlatBatch& fb, const std::vector<NodeId>& inter) {
    const std::size_t pairs_size = static_cast<std::size_t>(fb.n) * fb.n;
    StampedCounts leg1(pairs_size), leg2(pairs_size);
    std::vector<long long> r1(fb.size(), -1), r2(fb.size(), -1);
    long long qa = 0, qb = 0;
    for (std::size_t w = 0; w < fb.size(); ++w) {
        if (fb.src[w] == fb.dst[w]) continue;
        if (fb.src[w] != inter[w]) {
            r1[w] = leg1.bump(static_cast<std::size_t>(fb.src[w]) * fb.n + inter[w]);
            qa = std::max(qa, r1[w] + 1);
        }
        if (inter[w] != fb.dst[w]) {
            r2[w] = leg2.bump(static_cast<std::size_t>(inter[w]) * fb.n + fb.dst[w]);
            qb = std::max(qb, r2[w] + 1);
        }
    }
    Schedule rounds(static_cast<std::size_t>(qa + qb));
    for (std::size_t w = 0; w < fb.size(); ++w) {
        if (fb.src[w] == fb.dst[w]) continue;
        if (r1[w] >= 0)
            rounds[r1[w]].push_back(ScheduledSend{r1[w], fb.src[w], inter[w], fb.payload[w]});
        if (r2[w] >= 0)
            rounds[qa + r2[w]].push_back(
                ScheduledSend{qa + r2[w], inter[w], fb.dst[w], fb.payload[w]});
    }
    return rounds;
}

Schedule schedule_relay_pipelined(const FlatBatch& fb, const std::vector<NodeId>& inter) {
    const int n = fb.n;
    const std::size_t pairs_size = static_cast<std::size_t>(n) * n;

    // Slice = rank among real first legs on the same (src, intermediate).
    StampedCounts slice_rank(pairs_size);
    std::vector<long long> slice(fb.size(), 0);
    long long max_slice = 0;
    for (std::size_t w = 0; w < fb.size(); ++w) {
        if (fb.src[w] == fb.dst[w] || fb.src[w] == inter[w]) continue;
        slice[w] = slice_rank.bump(static_cast<std::size_t>(fb.src[w]) * n + inter[w]);
        max_slice = std::max(max_slice, slice[w]);
    }

    std::vector<std::vector<int>> leg1_by_slice(max_slice + 1);
    std::deque<int> leg2_pending;
    long long outstanding = 0;
    for (int w = 0; w < static_cast<int>(fb.size()); ++w) {
        if (fb.src[w] == fb.dst[w]) continue;
        if (fb.src[w] == inter[w]) {
            leg2_pending.push_back(w);  // already at its intermediate
            ++outstanding;
        } else {
            leg1_by_slice[slice[w]].push_back(w);
            ++outstanding;
        }
    }

    Schedule rounds;
    std::vector<long long> pair_stamp(pairs_size, -1);
    std::deque<int> leg1_retry;
    const long long safety = 8 * (max_slice + 2) + 8 * (max_node_load(fb) / std::max(n, 1) + 2) + 32;
    for (long long r = 0; outstanding > 0; ++r) {
        if (r > safety) throw std::logic_error("relay scheduler failed to converge");
        if (static_cast<std::size_t>(r) >= rounds.size()) rounds.resize(r + 1);
        auto& sends = rounds[r];
        auto pair_free = [&](NodeId a, NodeId b) {
            std::size_t key = static_cast<std::size_t>(a) * n + b;
            if (pair_stamp[key] == r) return false;
            pair_stamp[key] = r;
            return true;
        };
        std::vector<int> arrivals;

        // Second legs drain first.
        for (std::size_t k = leg2_pending.size(); k-- > 0;) {
            int w = leg2_pending.front();
            leg2_pending.pop_front();
            if (inter[w] == fb.dst[w]) {
                --outstanding;  // free local delivery
                continue;
            }
            if (pair_free(inter[w], fb.dst[w])) {
                sends.push_back(ScheduledSend{r, inter[w], fb.dst[w], fb.payload[w]});
                --outstanding;
            } else {
                leg2_pending.push_back(w);
            }
        }
        // First legs: retries, then this round's slice.
        auto try_leg1 = [&](int w) {
            if (pair_free(fb.src[w], inter[w])) {
                sends.push_back(ScheduledSend{r, fb.src[w], inter[w], fb.payload[w]});
                arrivals.push_back(w);
            } else {
                leg1_retry.push_back(w);
            }
        };
        for (std::size_t k = leg1_retry.size(); k-- > 0;) {
            int w = leg1_retry.front();
            leg1_retry.pop_front();
            try_leg1(w);
        }
        if (r <= max_slice)
            for (int w : leg1_by_slice[r]) try_leg1(w);

        // Words sent this round become forwardable next round.
        for (int w : arrivals) {
            if (inter[w] == fb.dst[w])
                --outstanding;  // delivered on arrival
            else
                leg2_pending.push_back(w);
        }
    }
    while (!rounds.empty() && rounds.back().empty()) rounds.pop_back();
    return rounds;
}

}  // namespace detail
}  // namespace cclique
