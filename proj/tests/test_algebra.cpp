#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cclique/matrix.hpp"
#include "cclique/rng.hpp"

using namespace cclique;

namespace {

Weight rand_weight(Rng& rng, long long lo, long long hi, bool with_inf = true) {
    if (with_inf && rng.chance(1, 4)) return Weight::inf();
    return Weight(rng.range(lo, hi));
}

template <class SR, class Gen>
void check_semiring_axioms(const SR& sr, Gen gen, int rounds = 200) {
    Rng rng(0x5e111);
    for (int i = 0; i < rounds; ++i) {
        auto a = gen(rng), b = gen(rng), c = gen(rng);
        CHECK(sr.eq(sr.add(sr.add(a, b), c), sr.add(a, sr.add(b, c))));
        CHECK(sr.eq(sr.add(a, b), sr.add(b, a)));
        CHECK(sr.eq(sr.add(a, sr.zero()), a));
        CHECK(sr.eq(sr.mul(sr.mul(a, b), c), sr.mul(a, sr.mul(b, c))));
        CHECK(sr.eq(sr.mul(a, sr.one()), a));
        CHECK(sr.eq(sr.mul(sr.one(), a), a));
        CHECK(sr.eq(sr.mul(a, sr.add(b, c)), sr.add(sr.mul(a, b), sr.mul(a, c))));
        CHECK(sr.eq(sr.mul(sr.add(a, b), c), sr.add(sr.mul(a, c), sr.mul(b, c))));
        CHECK(sr.words_per_element() >= 1);
        // Word codec round-trip.
        std::vector<Word> buf(sr.words_per_element());
        sr.encode(a, buf.data());
        CHECK(sr.eq(sr.decode(buf.data()), a));
    }
}

}  // namespace

TEST_CASE("semiring axioms hold on all bundled instances") {
    check_semiring_axioms(BooleanSR{}, [](Rng& r) { return static_cast<std::uint8_t>(r.below(2)); });
    check_semiring_axioms(MinPlusSR{}, [](Rng& r) { return rand_weight(r, -50, 50); });
    check_semiring_axioms(IntRing{}, [](Rng& r) { return BigInt(r.range(-1000, 1000)); });
    check_semiring_axioms(TruncPolyRing{4}, [](Rng& r) {
        Poly p;
        for (int t = 0; t < 3; ++t) p = p + Poly::monomial(static_cast<int>(r.below(9)), r.range(-5, 5));
        return p;
    });
}

TEST_CASE("min-plus saturation and sentinel discipline") {
    Weight inf = Weight::inf();
    CHECK((inf + Weight(5)).is_inf());
    CHECK((inf + Weight(-100000)).is_inf());
    CHECK((inf + inf).is_inf());
    CHECK(min(inf, Weight(3)) == Weight(3));
    CHECK(Weight(2) + Weight(3) == Weight(5));
    CHECK(Weight(3) < inf);
    CHECK_THROWS_AS((void)Weight(std::numeric_limits<long long>::max()), std::invalid_argument);
}

TEST_CASE("IntRing word budget is enforced, not truncated") {
    IntRing one_word;
    std::vector<Word> buf(4);
    BigInt big = BigInt(1) << 70;
    CHECK_THROWS_AS(one_word.encode(big, buf.data()), std::overflow_error);
    IntRing two_words(2);
    two_words.encode(big, buf.data());
    CHECK(two_words.decode(buf.data()) == big);
    two_words.encode(-big, buf.data());
    CHECK(two_words.decode(buf.data()) == -big);
}

TEST_CASE("mat_mul_oracle identity cases") {
    Rng rng(0xa11);
    {
        SrMatrix<BooleanSR> t(BooleanSR{}, 5);
        for (int u = 0; u < 5; ++u)
            for (int v = 0; v < 5; ++v) t(u, v) = rng.below(2) ? 1 : 0;
        auto i = SrMatrix<BooleanSR>::identity(BooleanSR{}, 5);
        CHECK(mat_mul_oracle(i, t) == t);
    }
    {
        IntRing ring;
        SrMatrix<IntRing> t(ring, 5);
        for (int u = 0; u < 5; ++u)
            for (int v = 0; v < 5; ++v) t(u, v) = rng.range(-9, 9);
        auto i = SrMatrix<IntRing>::identity(ring, 5);
        CHECK(mat_mul_oracle(i, t) == t);
    }
    {
        SrMatrix<MinPlusSR> t(MinPlusSR{}, 5);
        for (int u = 0; u < 5; ++u)
            for (int v = 0; v < 5; ++v) t(u, v) = rand_weight(rng, 0, 20);
        auto i = SrMatrix<MinPlusSR>::identity(MinPlusSR{}, 5);
        CHECK(mat_mul_oracle(i, t) == t);
    }
}

TEST_CASE("mat_mul_oracle min-plus two-by-two example") {
    SrMatrix<MinPlusSR> s(MinPlusSR{}, 2), t(MinPlusSR{}, 2), want(MinPlusSR{}, 2);
    s(0, 0) = Weight(0);
    s(0, 1) = Weight(1);
    s(1, 0) = Weight::inf();
    s(1, 1) = Weight(0);
    t(0, 0) = Weight(0);
    t(0, 1) = Weight(2);
    t(1, 0) = Weight::inf();
    t(1, 1) = Weight(0);
    want(0, 0) = Weight(0);
    want(0, 1) = Weight(1);  // min(0+2, 1+0)
    want(1, 0) = Weight::inf();
    want(1, 1) = Weight(0);
    CHECK(mat_mul_oracle(s, t) == want);
}

TEST_CASE("mat_mul_oracle equals an independent schoolbook product") {
    Rng rng(0x88);
    IntRing ring;
    for (int trial = 0; trial < 20; ++trial) {
        SrMatrix<IntRing> s(ring, 8), t(ring, 8);
        std::vector<long long> sv(64), tv(64);
        for (int i = 0; i < 64; ++i) {
            sv[i] = rng.range(-20, 20);
            tv[i] = rng.range(-20, 20);
            s(i / 8, i % 8) = sv[i];
            t(i / 8, i % 8) = tv[i];
        }
        auto p = mat_mul_oracle(s, t);
        // Second implementation: k-outer loop accumulation over plain ints.
        std::vector<long long> want(64, 0);
        for (int k = 0; k < 8; ++k)
            for (int u = 0; u < 8; ++u)
                for (int v = 0; v < 8; ++v) want[u * 8 + v] += sv[u * 8 + k] * tv[k * 8 + v];
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v) CHECK(p(u, v) == BigInt(want[u * 8 + v]));
    }
}

TEST_CASE("oracle rejects mismatched operands") {
    IntRing ring;
    SrMatrix<IntRing> a(ring, 3), b(ring, 4);
    CHECK_THROWS_AS(mat_mul_oracle(a, b), std::invalid_argument);
    SrMatrix<IntRing> c(IntRing{2}, 3);
    CHECK_THROWS_AS(mat_mul_oracle(a, c), std::invalid_argument);
}

TEST_CASE("poly_embed maps entries to monomials") {
    SrMatrix<MinPlusSR> s(MinPlusSR{}, 2);
    s(0, 0) = Weight(0);
    s(0, 1) = Weight(3);
    s(1, 0) = Weight::inf();
    s(1, 1) = Weight(1);
    auto e = poly_embed(s, 3);
    CHECK(e(0, 0) == Poly::monomial(0));
    CHECK(e(0, 1) == Poly::monomial(3));
    CHECK(e(1, 0).is_zero());
    CHECK(e(1, 1) == Poly::monomial(1));
    CHECK(e.sr().words_per_element() == 7);

    s(0, 1) = Weight(4);
    CHECK_THROWS_AS(poly_embed(s, 3), std::invalid_argument);
    s(0, 1) = Weight(-1);
    CHECK_THROWS_AS(poly_embed(s, 3), std::invalid_argument);
}

TEST_CASE("poly_extract takes the lowest-degree monomial") {
    TruncPolyRing ring(4);
    SrMatrix<TruncPolyRing> p(ring, 1);
    p(0, 0) = Poly::monomial(2) + Poly::monomial(5, 3);
    CHECK(poly_extract(p)(0, 0) == Weight(2));
    p(0, 0) = Poly();
    CHECK(poly_extract(p)(0, 0).is_inf());
}

namespace {

SrMatrix<MinPlusSR> embed_route(const SrMatrix<MinPlusSR>& s, const SrMatrix<MinPlusSR>& t, int m) {
    return poly_extract(mat_mul_oracle(poly_embed(s, m), poly_embed(t, m)));
}

}  // namespace

TEST_CASE("embedding equals the min-plus product, exhaustively at n=2") {
    for (int m = 1; m <= 3; ++m) {
        std::vector<Weight> domain;
        for (int x = 0; x <= m; ++x) domain.push_back(Weight(x));
        domain.push_back(Weight::inf());
        const int d = static_cast<int>(domain.size());
        auto nth = [&](int code) {
            SrMatrix<MinPlusSR> s(MinPlusSR{}, 2);
            for (int e = 0; e < 4; ++e) {
                s(e / 2, e % 2) = domain[code % d];
                code /= d;
            }
            return s;
        };
        int total = d * d * d * d;
        int bad = 0;
        for (int a = 0; a < total; ++a) {
            auto s = nth(a);
            for (int b = 0; b < total; ++b) {
                auto t = nth(b);
                if (!(embed_route(s, t, m) == mat_mul_oracle(s, t))) ++bad;
            }
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("embedding equals the min-plus product, randomized up to n=8") {
    Rng rng(0xe3bed);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.below(7));
        int m = 1 + static_cast<int>(rng.below(8));
        SrMatrix<MinPlusSR> s(MinPlusSR{}, n), t(MinPlusSR{}, n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                s(u, v) = rand_weight(rng, 0, m);
                t(u, v) = rand_weight(rng, 0, m);
            }
        CHECK(embed_route(s, t, m) == mat_mul_oracle(s, t));
    }
}

TEST_CASE("trace") {
    IntRing ring;
    CHECK(trace(SrMatrix<IntRing>::identity(ring, 4)) == 4);
    CHECK(trace(SrMatrix<IntRing>(ring, 4)) == 0);
    // trace(A^3) over K3 is 6: cube by the oracle, then sum the diagonal.
    SrMatrix<IntRing> a(ring, 3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) a(u, v) = u == v ? 0 : 1;
    auto a3 = mat_mul_oracle(mat_mul_oracle(a, a), a);
    CHECK(trace(a3) == 6);
}

TEST_CASE("matrix distributivity lifts to matrix sums and products") {
    Rng rng(0xd157);
    IntRing ring;
    for (int trial = 0; trial < 10; ++trial) {
        SrMatrix<IntRing> s(ring, 6), t(ring, 6), u(ring, 6);
        SrMatrix<MinPlusSR> sm(MinPlusSR{}, 6), tm(MinPlusSR{}, 6), um(MinPlusSR{}, 6);
        SrMatrix<BooleanSR> sb(BooleanSR{}, 6), tb(BooleanSR{}, 6), ub(BooleanSR{}, 6);
        for (int i = 0; i < 36; ++i) {
            int r = i / 6, c = i % 6;
            s(r, c) = rng.range(-9, 9);
            t(r, c) = rng.range(-9, 9);
            u(r, c) = rng.range(-9, 9);
            sm(r, c) = rand_weight(rng, 0, 9);
            tm(r, c) = rand_weight(rng, 0, 9);
            um(r, c) = rand_weight(rng, 0, 9);
            sb(r, c) = rng.below(2) ? 1 : 0;
            tb(r, c) = rng.below(2) ? 1 : 0;
            ub(r, c) = rng.below(2) ? 1 : 0;
        }
        CHECK(mat_mul_oracle(mat_add(s, t), u) == mat_add(mat_mul_oracle(s, u), mat_mul_oracle(t, u)));
        CHECK(mat_mul_oracle(mat_add(sm, tm), um) ==
              mat_add(mat_mul_oracle(sm, um), mat_mul_oracle(tm, um)));
        CHECK(mat_mul_oracle(mat_add(sb, tb), ub) ==
              mat_add(mat_mul_oracle(sb, ub), mat_mul_oracle(tb, ub)));
    }
}

TEST_CASE("truncated polynomial ring caps the degree at 2M") {
    TruncPolyRing ring(2);
    Poly a = Poly::monomial(2), b = Poly::monomial(2), c = Poly::monomial(1);
    CHECK(ring.mul(a, b) == Poly::monomial(4));
    CHECK(ring.mul(ring.mul(a, b), c).is_zero());  // degree 5 dropped
}
