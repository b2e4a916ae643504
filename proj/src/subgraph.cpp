#include "cclique/subgraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cclique {

namespace {

/// Sum per-node one-word contributions via a broadcast round.
std::vector<long long> share_values(CliqueNetwork& net, const std::vector<long long>& vals) {
    std::vector<Word> words(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) words[i] = static_cast<Word>(vals[i]);
    auto got = net.broadcast_all(words);
    std::vector<long long> out(got.size());
    for (std::size_t i = 0; i < got.size(); ++i) out[i] = static_cast<long long>(got[i]);
    return out;
}

bool broadcast_any(CliqueNetwork& net, const std::vector<long long>& flags) {
    auto all = share_values(net, flags);
    for (auto f : all)
        if (f) return true;
    return false;
}

}  // namespace

BigInt count_triangles(const Graph& g, CliqueNetwork& net) {
    const int n = g.n();
    for (int v = 0; v < n; ++v)
        if (g.has_edge(v, v)) throw std::invalid_argument("count_triangles: self-loop");
    net.begin_phase("tri.square");
    auto a = g.adjacency_int();
    auto a2 = mm_bilinear(a, a, BilinearAlgorithm::for_nodes(net.n()), net);

    // Node v holds row v of A^2 and column v of A (its incident edges).
    std::vector<long long> diag(n, 0);
    for_each_index(n, net.exec_mode(), [&](int v) {
        BigInt acc = 0;
        for (int w = 0; w < n; ++w)
            if (g.has_edge(w, v)) acc += a2(v, w);
        diag[v] = static_cast<long long>(acc);
    });
    net.begin_phase("tri.trace");
    auto all = share_values(net, diag);
    BigInt tr = 0;
    for (auto d : all) tr += d;
    return g.directed() ? tr / 3 : tr / 6;
}

BigInt count_4cycles(const Graph& g, CliqueNetwork& net) {
    const int n = g.n();
    for (int v = 0; v < n; ++v)
        if (g.has_edge(v, v)) throw std::invalid_argument("count_4cycles: self-loop");
    net.begin_phase("c4count.square");
    auto a = g.adjacency_int();
    auto a2 = mm_bilinear(a, a, BilinearAlgorithm::for_nodes(net.n()), net);

    // trace(A^4) = sum_v <A^2 row v, A^2 column v>. Undirected squares are
    // symmetric; directed graphs exchange the transpose entries first.
    std::vector<long long> diag4(n, 0);
    if (!g.directed()) {
        for_each_index(n, net.exec_mode(), [&](int v) {
            BigInt acc = 0;
            for (int w = 0; w < n; ++w) acc += a2(v, w) * a2(v, w);
            diag4[v] = static_cast<long long>(acc);
        });
    } else {
        net.begin_phase("c4count.transpose");
        Batch tb(n);
        WordCodec<IntRing> codec(a2.sr());
        for (int w = 0; w < n; ++w)
            for (int v = 0; v < n; ++v) codec.send(tb, w, v, a2(w, v));
        Inbox inbox = net.route_balanced(tb, a2.sr().words_per_element());
        InboxReader rd(inbox);
        for_each_index(n, net.exec_mode(), [&](int v) {
            WordCodec<IntRing> c2(a2.sr());
            BigInt acc = 0;
            for (int w = 0; w < n; ++w) acc += a2(v, w) * c2.recv(rd, v, w);
            diag4[v] = static_cast<long long>(acc);
        });
    }
    net.begin_phase("c4count.trace");
    auto degs = g.directed() ? g.mutual_degrees() : g.degrees();
    std::vector<long long> dd(degs.begin(), degs.end());
    auto all_deg = share_values(net, dd);
    auto all_diag = share_values(net, diag4);
    BigInt tr = 0, corr = 0;
    for (int v = 0; v < n; ++v) {
        tr += all_diag[v];
        BigInt d = all_deg[v];
        corr += 2 * d * d - d;
    }
    return g.directed() ? (tr - corr) / 4 : (tr - corr) / 8;
}

namespace {

int popcount(unsigned x) { return __builtin_popcount(x); }

/// Recurrence over colour subsets, memoized per subset mask. Products run
/// over the integer ring with a nonzero threshold.
class ColourfulSolver {
public:
    ColourfulSolver(const Graph& g, const std::vector<int>& colouring, int k, CliqueNetwork& net)
        : g_(g), colouring_(colouring), k_(k), net_(net), adj_(g.adjacency()) {}

    bool solve() {
        unsigned full = (1u << k_) - 1;
        const auto& c = reach(full);
        // Closing edge: C^([k])_{uv} = 1 and (v,u) in E.
        std::vector<long long> found(g_.n(), 0);
        for (int u = 0; u < g_.n(); ++u)
            for (int v = 0; v < g_.n(); ++v)
                if (c(u, v) && g_.has_edge(v, u)) found[u] = 1;
        net_.begin_phase("kcycle.verdict");
        return broadcast_any(net_, found);
    }

private:
    const SrMatrix<BooleanSR>& reach(unsigned mask) {
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        SrMatrix<BooleanSR> c(BooleanSR{}, g_.n());
        if (popcount(mask) == 1) {
            int colour = __builtin_ctz(mask);
            for (int v = 0; v < g_.n(); ++v)
                if (colouring_[v] == colour) c(v, v) = 1;
        } else {
            int half = (popcount(mask) + 1) / 2;
            // All subsets y of mask with popcount == half.
            for (unsigned y = mask; y > 0; y = (y - 1) & mask) {
                if (popcount(y) != half) continue;
                const auto& left = reach(y);
                const auto& right = reach(mask & ~y);
                auto mid = mm_boolean(left, adj_, net_);
                auto part = mm_boolean(mid, right, net_);
                for (int u = 0; u < g_.n(); ++u)
                    for (int v = 0; v < g_.n(); ++v) c(u, v) |= part(u, v);
            }
        }
        return memo_.emplace(mask, std::move(c)).first->second;
    }

    const Graph& g_;
    const std::vector<int>& colouring_;
    int k_;
    CliqueNetwork& net_;
    SrMatrix<BooleanSR> adj_;
    std::map<unsigned, SrMatrix<BooleanSR>> memo_;
};

bool colourful_kcycle_inner(const Graph& g, const std::vector<int>& colouring, int k,
                            CliqueNetwork& net) {
    return ColourfulSolver(g, colouring, k, net).solve();
}

}  // namespace

bool detect_colourful_kcycle(const Graph& g, const std::vector<int>& colouring, int k,
                             CliqueNetwork& net) {
    if (k < 3) throw std::invalid_argument("detect_colourful_kcycle: k must be >= 3");
    if (static_cast<int>(colouring.size()) != g.n())
        throw std::invalid_argument("detect_colourful_kcycle: colouring size mismatch");
    unsigned used = 0;
    for (int c : colouring) {
        if (c < 0 || c >= k) throw std::invalid_argument("detect_colourful_kcycle: colour out of range");
        used |= 1u << c;
    }
    // A missing colour rules out colourful cycles outright.
    if (popcount(used) < k) return false;
    return colourful_kcycle_inner(g, colouring, k, net);
}

bool detect_kcycle(const Graph& g, int k, CliqueNetwork& net) {
    if (k < 3) throw std::invalid_argument("detect_kcycle: k must be >= 3");
    const int n = g.n();
    if (k > n) return false;
    long long trials =
        static_cast<long long>(std::ceil(std::exp(k) * std::log(std::max(n, 2))));
    for (long long t = 0; t < trials; ++t) {
        Rng rng = net.rng(0x6b63 + static_cast<std::uint64_t>(t));
        std::vector<int> colouring(n);
        unsigned used = 0;
        for (int v = 0; v < n; ++v) {
            colouring[v] = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
            used |= 1u << colouring[v];
        }
        if (popcount(used) < k) continue;  // cannot be colourful
        if (colourful_kcycle_inner(g, colouring, k, net)) return true;
    }
    return false;
}

std::vector<int> TilePacking::chunk(const std::vector<int>& neigh, int tile_side, int i) {
    int deg = static_cast<int>(neigh.size());
    int csz = (deg + tile_side - 1) / tile_side;
    int lo = std::min(deg, i * csz), hi = std::min(deg, (i + 1) * csz);
    return std::vector<int>(neigh.begin() + lo, neigh.begin() + hi);
}

TilePacking pack_tiles(const std::vector<int>& degrees, int n) {
    long long sumsq = 0;
    for (int d : degrees) sumsq += static_cast<long long>(d) * d;
    if (sumsq >= 2LL * n * n)
        throw std::invalid_argument("pack_tiles: degree squares exceed the phase-1 gate");

    TilePacking t;
    t.n = n;
    t.grid = 1;
    while (t.grid * 2 <= n) t.grid *= 2;
    t.side.assign(n, 0);
    t.row0.assign(n, -1);
    t.col0.assign(n, -1);
    for (int y = 0; y < n; ++y) {
        if (degrees[y] <= 0) continue;
        int f = 1;
        while (f * 2 <= degrees[y] / 4) f *= 2;
        t.side[y] = f;
    }

    // Buddy allocation, largest tiles first (stable by id).
    std::vector<int> order;
    for (int y = 0; y < n; ++y)
        if (t.side[y] > 0) order.push_back(y);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return t.side[a] > t.side[b]; });
    std::map<int, std::vector<std::pair<int, int>>, std::greater<int>> free_squares;
    free_squares[t.grid].push_back({0, 0});
    for (int y : order) {
        int f = t.side[y];
        int have = -1;
        for (auto& [sz, list] : free_squares) {
            if (sz < f) break;
            if (!list.empty()) {
                have = sz;
                break;
            }
        }
        if (have < 0) throw std::invalid_argument("pack_tiles: tiles do not fit the grid");
        auto [r, c] = free_squares[have].back();
        free_squares[have].pop_back();
        while (have > f) {
            int h = have / 2;
            free_squares[h].push_back({r + h, c + h});
            free_squares[h].push_back({r + h, c});
            free_squares[h].push_back({r, c + h});
            have = h;
        }
        t.row0[y] = r;
        t.col0[y] = c;
    }
    return t;
}

bool detect_4cycle_constant(const Graph& g, CliqueNetwork& net) {
    if (g.directed()) throw std::invalid_argument("detect_4cycle_constant: undirected only");
    const int n = g.n();
    constexpr long long kStepRounds = 8;    // |N_A(y,a)| <= 8 words per pair
    constexpr long long kGatherRounds = 2 * 64 + 2;  // |W(b)| <= 64n relayed

    // Phase 1: degree broadcast; x stops on sum_{y in N(x)} deg(y) >= 2n-1.
    net.begin_phase("c4.phase1");
    auto degs = g.degrees();
    std::vector<long long> dl(degs.begin(), degs.end());
    auto all_deg = share_values(net, dl);
    std::vector<long long> trigger(n, 0);
    for (int x = 0; x < n; ++x) {
        long long walks = 0;
        for (int y : g.neighbours(x)) walks += all_deg[y];
        trigger[x] = walks >= 2LL * n - 1 ? 1 : 0;
    }
    if (broadcast_any(net, trigger)) return true;

    // Phase 2: tiles from the degree vector, replicated locally at each node.
    TilePacking tiles = pack_tiles(degs, n);

    // Step 1: y ships each chunk N_A(y,a) to its tile row a.
    net.begin_phase("c4.step1");
    Batch b1(n);
    for (int y = 0; y < n; ++y) {
        if (tiles.side[y] == 0) continue;
        auto neigh = g.neighbours(y);
        for (int i = 0; i < tiles.side[y]; ++i)
            for (int x : TilePacking::chunk(neigh, tiles.side[y], i))
                b1.push(y, tiles.row0[y] + i, static_cast<Word>(x));
    }
    Inbox in1 = net.route_oblivious(b1, RelayMode::Direct);
    net.pad_phase_to(kStepRounds);

    // Step 2: a forwards N_A(y,a) across the tile to every b in B(y).
    net.begin_phase("c4.step2");
    Batch b2(n);
    {
        InboxReader rd(in1);
        for (int y = 0; y < n; ++y) {
            if (tiles.side[y] == 0) continue;
            int deg = degs[y];
            int csz = (deg + tiles.side[y] - 1) / tiles.side[y];
            for (int i = 0; i < tiles.side[y]; ++i) {
                int a = tiles.row0[y] + i;
                int len = std::min(deg, (i + 1) * csz) - std::min(deg, i * csz);
                for (int t = 0; t < len; ++t) {
                    Word x = rd.next(a, y);
                    for (int j = 0; j < tiles.side[y]; ++j) b2.push(a, tiles.col0[y] + j, x);
                }
            }
        }
    }
    Inbox in2 = net.route_oblivious(b2, RelayMode::Direct);
    net.pad_phase_to(kStepRounds);

    // Step 3 (local): b rebuilds N(y) for every y with b in B(y) and forms
    // the walk bags W(y,b) = N(y) x {y} x N_B(y,b).
    // Gather: each walk (x,y,z) travels to x as one word carrying z.
    net.begin_phase("c4.gather");
    Batch bg(n);
    {
        InboxReader rd(in2);
        for (int y = 0; y < n; ++y) {
            if (tiles.side[y] == 0) continue;
            int deg = degs[y];
            int csz = (deg + tiles.side[y] - 1) / tiles.side[y];
            for (int j = 0; j < tiles.side[y]; ++j) {
                int b = tiles.col0[y] + j;
                std::vector<int> ny;
                ny.reserve(deg);
                for (int i = 0; i < tiles.side[y]; ++i) {
                    int a = tiles.row0[y] + i;
                    int len = std::min(deg, (i + 1) * csz) - std::min(deg, i * csz);
                    for (int t = 0; t < len; ++t) ny.push_back(static_cast<int>(rd.next(b, a)));
                }
                for (int z : TilePacking::chunk(ny, tiles.side[y], j))
                    for (int x : ny) bg.push(b, x, static_cast<Word>(z));
            }
        }
    }
    Inbox ing = net.route_balanced(bg, 64);
    net.pad_phase_to(kGatherRounds);

    // Each x scans its share of P(x,*,*) for a repeated endpoint z != x.
    std::vector<long long> found(n, 0);
    {
        InboxReader rd(ing);
        for_each_index(n, net.exec_mode(), [&](int x) {
            std::vector<int> seen(n, 0);
            for (int b = 0; b < n; ++b)
                for (std::size_t t = ing.count(x, b); t-- > 0;) {
                    int z = static_cast<int>(rd.next(x, b));
                    if (z != x && ++seen[z] >= 2) found[x] = 1;
                }
        });
    }
    net.begin_phase("c4.verdict");
    return broadcast_any(net, found);
}

}  // namespace cclique
