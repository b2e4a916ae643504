#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "cclique/codec.hpp"
#include "cclique/network.hpp"
#include "cclique/rng.hpp"
#include "cclique/semiring.hpp"

using namespace cclique;

namespace {

NetworkOptions full_trace() {
    NetworkOptions opt;
    opt.trace = TraceMode::Full;
    return opt;
}

/// Ledger invariant, checked from the recorded trace: one word per ordered
/// pair per round, and per-round node loads within n-1.
void check_trace_invariants(const CliqueNetwork& net) {
    std::map<long long, std::set<std::pair<int, int>>> by_round;
    std::map<long long, std::map<int, int>> outs, ins;
    for (const auto& e : net.trace()) {
        CHECK(e.src != e.dst);
        CHECK(by_round[e.round].insert({e.src, e.dst}).second);
        CHECK(++outs[e.round][e.src] <= net.n() - 1);
        CHECK(++ins[e.round][e.dst] <= net.n() - 1);
    }
}

}  // namespace

TEST_CASE("broadcast_all delivers every value in one round") {
    CliqueNetwork net(4, 7, full_trace());
    auto got = net.broadcast_all({1, 2, 3, 4});
    CHECK(got == std::vector<Word>{1, 2, 3, 4});
    CHECK(net.stats().rounds_total == 1);
    CHECK(net.stats().max_out == 3);
    CHECK(net.stats().max_in == 3);
    CHECK(net.stats().total_words == 12);
    check_trace_invariants(net);
}

TEST_CASE("broadcast_all on a single node consumes a round without traffic") {
    CliqueNetwork net(1, 0);
    net.broadcast_all({42});
    CHECK(net.stats().rounds_total == 1);
    CHECK(net.stats().total_words == 0);
}

TEST_CASE("broadcast of C4 degrees") {
    CliqueNetwork net(4, 0);
    auto got = net.broadcast_all({2, 2, 2, 2});
    CHECK(got == std::vector<Word>(4, 2));
}

TEST_CASE("untouched network reports all-zero stats") {
    CliqueNetwork net(8, 3);
    CHECK(net.stats().rounds_total == 0);
    CHECK(net.stats().total_words == 0);
    CHECK(net.stats().max_out == 0);
}

TEST_CASE("route_oblivious: one word per pair lands in exactly one round") {
    CliqueNetwork net(6, 0, full_trace());
    Batch b(6);
    for (int v = 0; v < 6; ++v) b.push(v, (v + 1) % 6, 100 + v);
    Inbox in = net.route_oblivious(b);
    CHECK(net.stats().rounds_total == 1);
    CHECK(in.count(1, 0) == 1);
    CHECK(in.begin(1, 0)[0] == 100);
    check_trace_invariants(net);
}

TEST_CASE("route_oblivious: a k-word flow takes k rounds direct, about k/n relayed") {
    const int n = 8, k = 20;
    {
        CliqueNetwork net(n, 0, full_trace());
        Batch b(n);
        for (int i = 0; i < k; ++i) b.push(0, 1, i);
        net.route_oblivious(b, RelayMode::Direct);
        CHECK(net.stats().rounds_total == k);
        check_trace_invariants(net);
    }
    {
        CliqueNetwork net(n, 0, full_trace());
        Batch b(n);
        for (int i = 0; i < k; ++i) b.push(0, 1, i);
        Inbox in = net.route_oblivious(b, RelayMode::Relay);
        CHECK(net.stats().rounds_total <= (k + n - 2) / (n - 1) + 3);
        CHECK(in.count(1, 0) == k);
        for (int i = 0; i < k; ++i) CHECK(in.begin(1, 0)[i] == static_cast<Word>(i));
        check_trace_invariants(net);
    }
}

TEST_CASE("route_oblivious: the 3D step-1 pattern stays within the relay bound") {
    // n = 8 (cube side 2): every node sends 2 n^(4/3) = 32 words.
    const int n = 8;
    CliqueNetwork net(n, 0, full_trace());
    Batch b(n);
    auto d1 = [](int v) { return v / 4; };
    auto d2 = [](int v) { return (v / 2) % 2; };
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            if (d1(u) != d1(v)) continue;
            for (int c = 0; c < 4; ++c) b.push(v, u, 1);  // S[v, *u2*]
        }
        for (int w = 0; w < n; ++w) {
            if (d2(w) != d2(v)) continue;
            for (int c = 0; c < 4; ++c) b.push(v, w, 2);  // T[v, **w3]
        }
    }
    CHECK(b.size() == static_cast<std::size_t>(n) * 32);
    net.route_oblivious(b);
    CHECK(net.stats().rounds_total <= 32 / (n - 1) + 4);
    check_trace_invariants(net);
}

TEST_CASE("route_balanced: distinct destinations fit one round") {
    CliqueNetwork net(5, 0, full_trace());
    Batch b(5);
    for (int v = 0; v < 5; ++v)
        for (int u = 0; u < 5; ++u)
            if (u != v) b.push(v, u, v * 10 + u);
    net.route_balanced(b, 1);
    CHECK(net.stats().rounds_total == 1);
    check_trace_invariants(net);
}

TEST_CASE("route_balanced: n words on one pair relay within four rounds") {
    for (int n : {4, 6, 8}) {
        CliqueNetwork net(n, 0, full_trace());
        Batch b(n);
        for (int i = 0; i < n; ++i) b.push(0, 1, i);
        Inbox in = net.route_balanced(b, 1);
        CHECK(net.stats().rounds_total <= 4);
        CHECK(in.count(1, 0) == static_cast<std::size_t>(n));
        check_trace_invariants(net);
    }
}

TEST_CASE("route_balanced rejects overloaded batches with a report") {
    CliqueNetwork net(4, 0);
    Batch b(4);
    for (int i = 0; i < 9; ++i) b.push(0, 1, i);
    bool threw = false;
    try {
        net.route_balanced(b, 2);
    } catch (const std::invalid_argument& e) {
        threw = true;
        CHECK(std::string(e.what()).find("node 0") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("route_balanced round count is n-independent at fixed load ratio") {
    std::vector<long long> rounds;
    for (int n : {16, 32, 64}) {
        CliqueNetwork net(n, 0);
        Batch b(n);
        const int c = 3;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < c * n; ++i) b.push(v, (v + 1 + i % (n - 1)) % n, i);
        net.route_balanced(b, c);
        rounds.push_back(net.stats().rounds_total);
    }
    CHECK(rounds[0] == rounds[1]);
    CHECK(rounds[1] == rounds[2]);
    CHECK(rounds[0] <= 2 * 3 + 2);
}

TEST_CASE("ledger invariants hold under fuzzed batches") {
    Rng rng(0xf22);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng.below(12));
        CliqueNetwork net(n, trial, full_trace());
        Batch b(n);
        int words = static_cast<int>(rng.below(200));
        for (int i = 0; i < words; ++i)
            b.push(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)), rng.next());
        RelayMode mode = trial % 3 == 0 ? RelayMode::Direct
                         : trial % 3 == 1 ? RelayMode::Relay
                                          : RelayMode::Auto;
        Inbox in = net.route_oblivious(b, mode);
        check_trace_invariants(net);
        // Every word arrives, in per-pair order.
        for (int s = 0; s < n; ++s) {
            std::map<int, std::vector<Word>> per_dst;
            for (const auto& p : b.from(s)) per_dst[p.dst].push_back(p.payload);
            for (auto& [dst, want] : per_dst) {
                REQUIRE(in.count(dst, s) == want.size());
                for (std::size_t i = 0; i < want.size(); ++i) CHECK(in.begin(dst, s)[i] == want[i]);
            }
        }
    }
}

TEST_CASE("identical seed and batches give a bit-identical ledger") {
    auto run = [](std::uint64_t seed) {
        CliqueNetwork net(9, seed, full_trace());
        Rng rng(12345);  // same payload stream both times
        for (int step = 0; step < 4; ++step) {
            Batch b(9);
            for (int i = 0; i < 120; ++i)
                b.push(static_cast<int>(rng.below(9)), static_cast<int>(rng.below(9)), rng.next());
            net.route_oblivious(b);
        }
        return std::pair{net.trace(), net.pattern_hash()};
    };
    auto [t1, h1] = run(42);
    auto [t2, h2] = run(42);
    CHECK(t1 == t2);
    CHECK(h1 == h2);
}

TEST_CASE("multi-word elements consume exactly words_per_element ledger slots") {
    TruncPolyRing ring(3);  // 7 words per element
    CliqueNetwork net(5, 0);
    Batch b(5);
    WordCodec<TruncPolyRing> codec(ring);
    for (int i = 0; i < 4; ++i) codec.send(b, 0, 2 + i % 3, Poly::monomial(i % 4));
    net.route_oblivious(b, RelayMode::Direct);
    CHECK(net.stats().total_words == 4 * 7);
    const auto* phase = &net.stats().phases.back();
    CHECK(phase->words_out[0] == 4 * 7);
}

TEST_CASE("padding is part of the deterministic pattern") {
    CliqueNetwork a(4, 0), b(4, 0);
    a.begin_phase("x");
    b.begin_phase("x");
    a.broadcast_all({1, 2, 3, 4});
    b.broadcast_all({9, 9, 9, 9});
    a.pad_phase_to(5);
    b.pad_phase_to(5);
    CHECK(a.stats().rounds_total == 5);
    CHECK(a.pattern_hash() == b.pattern_hash());
}
