#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cclique/apsp.hpp"
#include "cclique/oracle.hpp"
#include "cclique/witness.hpp"

using namespace cclique;

namespace {

DistanceProductFn oracle_product(long long* calls = nullptr) {
    return [calls](const SrMatrix<MinPlusSR>& s, const SrMatrix<MinPlusSR>& t, CliqueNetwork&) {
        if (calls) ++*calls;
        return oracle::distance_product_oracle(s, t).p;
    };
}

SrMatrix<MinPlusSR> random_minplus(int n, Rng& rng, long long hi = 9) {
    SrMatrix<MinPlusSR> m(MinPlusSR{}, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            m(u, v) = rng.chance(1, 4) ? Weight::inf() : Weight(rng.range(0, hi));
    return m;
}

}  // namespace

TEST_CASE("mask keeps exactly the indexed rows and columns") {
    Rng rng(0x3a5c);
    auto s = random_minplus(4, rng);
    std::vector<int> all{0, 1, 2, 3};
    CHECK(mask(s, all, all) == s);

    auto none = mask(s, {}, all);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(none(u, v).is_inf());

    auto some = mask(s, {0, 2}, all);
    for (int v = 0; v < 4; ++v) {
        CHECK(some(1, v).is_inf());
        CHECK(some(3, v).is_inf());
        CHECK(some(0, v) == s(0, v));
    }
}

TEST_CASE("witness_unique resolves identity-left products in log n calls") {
    Rng rng(0x17);
    const int n = 16;
    auto t = random_minplus(n, rng);
    auto s = SrMatrix<MinPlusSR>::identity(MinPlusSR{}, n);
    auto p = oracle::distance_product_oracle(s, t).p;
    CHECK(p == t);
    long long calls = 0;
    CliqueNetwork net(n, 0);
    auto res = witness_unique(s, t, p, oracle_product(&calls), net);
    CHECK(calls == 4);  // ceil(log2 16)
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (!p(u, v).is_inf()) CHECK(res.at(u, v) == u);
    CHECK(verify_witnesses(s, t, p, res.q).empty());
}

TEST_CASE("witness_unique completes permutation-like instances") {
    // One finite entry per row of S and per column of T: every finite product
    // entry has exactly one witness.
    const int n = 8;
    SrMatrix<MinPlusSR> s(MinPlusSR{}, n), t(MinPlusSR{}, n);
    for (int u = 0; u < n; ++u) {
        s(u, (u * 3 + 1) % n) = Weight(u + 1);
        t((u * 5 + 2) % n, u) = Weight(2 * u + 1);
    }
    auto p = oracle::distance_product_oracle(s, t).p;
    CliqueNetwork net(n, 0);
    auto res = witness_unique(s, t, p, oracle_product(), net);
    CHECK(res.unknown_pairs(p).empty());
    CHECK(verify_witnesses(s, t, p, res.q).empty());
    // Cross-check against brute-force witness enumeration.
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (p(u, v).is_inf()) continue;
            int brute = -1;
            for (int w = 0; w < n; ++w)
                if (s(u, w) + t(w, v) == p(u, v)) brute = brute < 0 ? w : brute;
            CHECK(res.at(u, v) == brute);
        }
}

TEST_CASE("two equal witnesses poison the bit candidates; sampling recovers them") {
    const int n = 8;
    SrMatrix<MinPlusSR> s(MinPlusSR{}, n), t(MinPlusSR{}, n);
    s(0, 3) = Weight(2);
    s(0, 5) = Weight(2);
    t(3, 1) = Weight(3);
    t(5, 1) = Weight(3);
    auto p = oracle::distance_product_oracle(s, t).p;
    CHECK(p(0, 1) == Weight(5));  // witnesses 3 = 011 and 5 = 101

    CliqueNetwork net(n, 0);
    auto uniq = witness_unique(s, t, p, oracle_product(), net);
    CHECK(uniq.at(0, 1) == -1);  // bits mix to 111, verification rejects
    auto unknown = uniq.unknown_pairs(p);
    REQUIRE(unknown.size() == 1);
    CHECK(unknown[0] == std::pair{0, 1});

    auto gen = witness_general(s, t, p, oracle_product(), 0x5eed, 3, net);
    CHECK(gen.unknown_pairs(p).empty());
    CHECK((gen.at(0, 1) == 3 || gen.at(0, 1) == 5));
    CHECK(verify_witnesses(s, t, p, gen.q).empty());
}

TEST_CASE("witness_general statistics on random instances") {
    int complete = 0;
    for (int seed = 0; seed < 20; ++seed) {
        Rng rng(seed * 977 + 5);
        auto s = random_minplus(16, rng), t = random_minplus(16, rng);
        auto p = oracle::distance_product_oracle(s, t).p;
        CliqueNetwork net(16, seed);
        auto res = witness_general(s, t, p, oracle_product(), seed, 3, net);
        CHECK(verify_witnesses(s, t, p, res.q).size() == res.unknown_pairs(p).size());
        if (res.unknown_pairs(p).empty()) ++complete;
    }
    CHECK(complete >= 19);
}

TEST_CASE("an all-infinite product needs no witnesses") {
    SrMatrix<MinPlusSR> s(MinPlusSR{}, 4), t(MinPlusSR{}, 4);
    auto p = oracle::distance_product_oracle(s, t).p;
    CliqueNetwork net(4, 0);
    auto res = witness_general(s, t, p, oracle_product(), 1, 3, net);
    CHECK(res.unknown_pairs(p).empty());
    CHECK(verify_witnesses(s, t, p, res.q).empty());
}

TEST_CASE("verify_witnesses flags exactly the corrupted pairs") {
    Rng rng(0x77);
    auto s = random_minplus(6, rng), t = random_minplus(6, rng);
    auto prod = oracle::distance_product_oracle(s, t);
    std::vector<int> q = prod.witness;
    CHECK(verify_witnesses(s, t, prod.p, q).empty());
    int u0 = -1, v0 = -1;
    for (int u = 0; u < 6 && u0 < 0; ++u)
        for (int v = 0; v < 6 && u0 < 0; ++v)
            if (!prod.p(u, v).is_inf()) u0 = u, v0 = v;
    REQUIRE(u0 >= 0);
    // Corrupt one entry with a non-witness.
    for (int w = 0; w < 6; ++w)
        if (s(u0, w) + t(w, v0) != prod.p(u0, v0)) {
            q[u0 * 6 + v0] = w;
            break;
        }
    auto bad = verify_witnesses(s, t, prod.p, q);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == std::pair{u0, v0});
}

TEST_CASE("the same machinery yields boolean-product witnesses") {
    // Boolean (or, and) embeds into min-plus over {0, inf}: finite = true.
    Rng rng(0xb17);
    const int n = 8;
    SrMatrix<MinPlusSR> s(MinPlusSR{}, n), t(MinPlusSR{}, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            s(u, v) = rng.chance(1, 3) ? Weight(0) : Weight::inf();
            t(u, v) = rng.chance(1, 3) ? Weight(0) : Weight::inf();
        }
    auto p = oracle::distance_product_oracle(s, t).p;
    CliqueNetwork net(n, 0);
    auto res = witness_general(s, t, p, oracle_product(), 7, 3, net);
    CHECK(res.unknown_pairs(p).empty());
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (p(u, v).is_inf()) continue;
            int w = res.at(u, v);
            CHECK(s(u, w) == Weight(0));
            CHECK(t(w, v) == Weight(0));
        }
}

TEST_CASE("witnesses through the distributed embedded product") {
    Rng rng(0xd15);
    const int n = 7;
    auto s = random_minplus(n, rng, 4), t = random_minplus(n, rng, 4);
    auto p = oracle::distance_product_oracle(s, t).p;
    CliqueNetwork net(n, 0);
    DistanceProductFn product = [](const SrMatrix<MinPlusSR>& a, const SrMatrix<MinPlusSR>& b,
                                   CliqueNetwork& nn) { return dp_exact_small(a, b, 8, nn); };
    auto res = witness_general(s, t, p, product, 3, 3, net);
    CHECK(res.unknown_pairs(p).empty());
    CHECK(verify_witnesses(s, t, p, res.q).empty());
    CHECK(net.stats().total_words > 0);
}
