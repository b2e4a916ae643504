#pragma once

#include <vector>

#include "cclique/bilinear.hpp"
#include "cclique/codec.hpp"
#include "cclique/layout.hpp"
#include "cclique/matrix.hpp"
#include "cclique/network.hpp"

namespace cclique {

template <class SR>
SrMatrix<SR> pad_matrix(const SrMatrix<SR>& s, int n) {
    if (s.n() == n) return s;
    if (s.n() > n) throw std::invalid_argument("matrix dimension exceeds node count");
    SrMatrix<SR> p(s.sr(), n);
    for (int u = 0; u < s.n(); ++u)
        for (int v = 0; v < s.n(); ++v) p(u, v) = s(u, v);
    return p;
}

template <class SR>
SrMatrix<SR> crop_matrix(const SrMatrix<SR>& s, int n) {
    if (s.n() == n) return s;
    SrMatrix<SR> p(s.sr(), n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) p(u, v) = s(u, v);
    return p;
}

namespace smm_detail {

/// Ids in the cube slab {u : u1 = a}, ascending.
inline std::vector<int> slab1(const CubeLayout& c, int a) {
    std::vector<int> out;
    out.reserve(c.s * c.s);
    for (int b = 0; b < c.s; ++b)
        for (int k = 0; k < c.s; ++k) out.push_back(c.id(a, b, k));
    return out;
}
/// Ids in {u : u2 = b}, ascending.
inline std::vector<int> slab2(const CubeLayout& c, int b) {
    std::vector<int> out;
    out.reserve(c.s * c.s);
    for (int a = 0; a < c.s; ++a)
        for (int k = 0; k < c.s; ++k) out.push_back(c.id(a, b, k));
    return out;
}
/// Ids in {u : u3 = k}, ascending.
inline std::vector<int> slab3(const CubeLayout& c, int k) {
    std::vector<int> out;
    out.reserve(c.s * c.s);
    for (int a = 0; a < c.s; ++a)
        for (int b = 0; b < c.s; ++b) out.push_back(c.id(a, b, k));
    return out;
}

}  // namespace smm_detail

/// Semiring matrix multiplication on the clique: the 3D algorithm. Each node
/// owns row v of both inputs and of the product. The node count must be a
/// perfect cube; smaller matrices are padded with the semiring zero.
template <class SR>
SrMatrix<SR> mm_semiring(const SrMatrix<SR>& s_in, const SrMatrix<SR>& t_in, CliqueNetwork& net) {
    require_compatible(s_in, t_in);
    const int n = net.n();
    const CubeLayout cube(n);
    const SR sr = s_in.sr();
    const int wpe = sr.words_per_element();
    const SrMatrix<SR> s = pad_matrix(s_in, n), t = pad_matrix(t_in, n);
    const int bs = cube.s * cube.s;  // n^(2/3), the slab side

    // Step 1: each node v ships S[v, *u2*] to every u in (v1,*,*) and
    // T[v, **w3] to every w in (*,v2,*).
    net.begin_phase("smm.step1");
    Batch b1(n);
    for_each_index(n, net.exec_mode(), [&](int v) {
        WordCodec<SR> codec(sr);
        for (int u : smm_detail::slab1(cube, cube.d1(v)))
            for (int c : smm_detail::slab2(cube, cube.d2(u))) codec.send(b1, v, u, s(v, c));
        for (int w : smm_detail::slab2(cube, cube.d2(v)))
            for (int c : smm_detail::slab3(cube, cube.d3(w))) codec.send(b1, v, w, t(v, c));
    });
    Inbox in1 = net.route_oblivious(b1);

    // Step 2: local block product S[(v1,*,*),(*,v2,*)] x T[(*,v2,*),(*,*,v3)].
    std::vector<std::vector<typename SR::value_type>> prod(n);
    {
        InboxReader rd(in1);
        for_each_index(n, net.exec_mode(), [&](int v) {
            WordCodec<SR> codec(sr);
            auto rows = smm_detail::slab1(cube, cube.d1(v));
            auto inner = smm_detail::slab2(cube, cube.d2(v));
            auto cols = smm_detail::slab3(cube, cube.d3(v));
            std::vector<typename SR::value_type> sblk(static_cast<std::size_t>(bs) * bs, sr.zero());
            std::vector<typename SR::value_type> tblk(static_cast<std::size_t>(bs) * bs, sr.zero());
            for (int i = 0; i < bs; ++i)
                for (int j = 0; j < bs; ++j) sblk[static_cast<std::size_t>(i) * bs + j] = codec.recv(rd, v, rows[i]);
            for (int i = 0; i < bs; ++i)
                for (int j = 0; j < bs; ++j) tblk[static_cast<std::size_t>(i) * bs + j] = codec.recv(rd, v, inner[i]);
            auto& out = prod[v];
            out.assign(static_cast<std::size_t>(bs) * bs, sr.zero());
            for (int i = 0; i < bs; ++i)
                for (int j = 0; j < bs; ++j) {
                    auto acc = sr.acc_make();
                    for (int k = 0; k < bs; ++k)
                        sr.acc_addmul(acc, sblk[static_cast<std::size_t>(i) * bs + k],
                                      tblk[static_cast<std::size_t>(k) * bs + j]);
                    out[static_cast<std::size_t>(i) * bs + j] = sr.acc_value(acc);
                }
        });
    }

    // Step 3: v ships the partial rows P^(v2)[u, **v3] back to their owners.
    net.begin_phase("smm.step3");
    Batch b3(n);
    for_each_index(n, net.exec_mode(), [&](int v) {
        WordCodec<SR> codec(sr);
        auto rows = smm_detail::slab1(cube, cube.d1(v));
        for (int i = 0; i < bs; ++i)
            for (int j = 0; j < bs; ++j) codec.send(b3, v, rows[i], prod[v][static_cast<std::size_t>(i) * bs + j]);
    });
    Inbox in3 = net.route_oblivious(b3);

    // Step 4: each node sums its n^(1/3) partial fragments per column.
    SrMatrix<SR> p(sr, n);
    {
        InboxReader rd(in3);
        for_each_index(n, net.exec_mode(), [&](int u) {
            WordCodec<SR> codec(sr);
            for (int v : smm_detail::slab1(cube, cube.d1(u)))
                for (int c : smm_detail::slab3(cube, cube.d3(v)))
                    p(u, c) = sr.add(p(u, c), codec.recv(rd, u, v));
        });
    }
    (void)wpe;
    return crop_matrix(p, s_in.n());
}

/// Distance product with argmin witnesses, the witness-carrying variant of
/// mm_semiring over the min-plus semiring. Witness fragments double the
/// step-3 payload. Ties break to the smallest intermediate index.
struct MinPlusProduct {
    SrMatrix<MinPlusSR> p;
    std::vector<int> witness;  // row-major, -1 where no finite sum exists
    int witness_at(int u, int v) const { return witness[static_cast<std::size_t>(u) * p.n() + v]; }
};

inline MinPlusProduct mm_semiring_witness(const SrMatrix<MinPlusSR>& s_in,
                                          const SrMatrix<MinPlusSR>& t_in, CliqueNetwork& net) {
    require_compatible(s_in, t_in);
    const int n = net.n();
    const CubeLayout cube(n);
    const MinPlusSR sr;
    const auto s = pad_matrix(s_in, n), t = pad_matrix(t_in, n);
    const int bs = cube.s * cube.s;

    net.begin_phase("smm.step1");
    Batch b1(n);
    for_each_index(n, net.exec_mode(), [&](int v) {
        WordCodec<MinPlusSR> codec(sr);
        for (int u : smm_detail::slab1(cube, cube.d1(v)))
            for (int c : smm_detail::slab2(cube, cube.d2(u))) codec.send(b1, v, u, s(v, c));
        for (int w : smm_detail::slab2(cube, cube.d2(v)))
            for (int c : smm_detail::slab3(cube, cube.d3(w))) codec.send(b1, v, w, t(v, c));
    });
    Inbox in1 = net.route_oblivious(b1);

    std::vector<std::vector<Weight>> pv(n);
    std::vector<std::vector<int>> wv(n);
    {
        InboxReader rd(in1);
        for_each_index(n, net.exec_mode(), [&](int v) {
            WordCodec<MinPlusSR> codec(sr);
            auto rows = smm_detail::slab1(cube, cube.d1(v));
            auto inner = smm_detail::slab2(cube, cube.d2(v));
            std::vector<Weight> sblk(static_cast<std::size_t>(bs) * bs, Weight::inf());
            std::vector<Weight> tblk(static_cast<std::size_t>(bs) * bs, Weight::inf());
            for (int i = 0; i < bs; ++i)
                for (int j = 0; j < bs; ++j) sblk[static_cast<std::size_t>(i) * bs + j] = codec.recv(rd, v, rows[i]);
            for (int i = 0; i < bs; ++i)
                for (int j = 0; j < bs; ++j) tblk[static_cast<std::size_t>(i) * bs + j] = codec.recv(rd, v, inner[i]);
            pv[v].assign(static_cast<std::size_t>(bs) * bs, Weight::inf());
            wv[v].assign(static_cast<std::size_t>(bs) * bs, -1);
            for (int i = 0; i < bs; ++i)
                for (int j = 0; j < bs; ++j) {
                    Weight best = Weight::inf();
                    int wit = -1;
                    for (int k = 0; k < bs; ++k) {
                        Weight cand = sblk[static_cast<std::size_t>(i) * bs + k] +
                                      tblk[static_cast<std::size_t>(k) * bs + j];
                        if (cand < best) {
                            best = cand;
                            wit = inner[k];
                        }
                    }
                    pv[v][static_cast<std::size_t>(i) * bs + j] = best;
                    wv[v][static_cast<std::size_t>(i) * bs + j] = best.is_inf() ? -1 : wit;
                }
        });
    }

    net.begin_phase("smm.step3");
    Batch b3(n);
    for_each_index(n, net.exec_mode(), [&](int v) {
        WordCodec<MinPlusSR> codec(sr);
        auto rows = smm_detail::slab1(cube, cube.d1(v));
        for (int i = 0; i < bs; ++i)
            for (int j = 0; j < bs; ++j) {
                codec.send(b3, v, rows[i], pv[v][static_cast<std::size_t>(i) * bs + j]);
                b3.push(v, rows[i], static_cast<Word>(
                                        static_cast<long long>(wv[v][static_cast<std::size_t>(i) * bs + j])));
            }
    });
    Inbox in3 = net.route_oblivious(b3);

    MinPlusProduct out{SrMatrix<MinPlusSR>(sr, n),
                       std::vector<int>(static_cast<std::size_t>(n) * n, -1)};
    {
        InboxReader rd(in3);
        for_each_index(n, net.exec_mode(), [&](int u) {
            WordCodec<MinPlusSR> codec(sr);
            for (int v : smm_detail::slab1(cube, cube.d1(u)))
                for (int c : smm_detail::slab3(cube, cube.d3(v))) {
                    Weight val = codec.recv(rd, u, v);
                    int wit = static_cast<int>(static_cast<long long>(rd.next(u, v)));
                    std::size_t key = static_cast<std::size_t>(u) * n + c;
                    Weight cur = out.p(u, c);
                    if (val < cur || (val == cur && !val.is_inf() && wit < out.witness[key])) {
                        out.p(u, c) = val;
                        out.witness[key] = val.is_inf() ? -1 : wit;
                    }
                }
        });
    }
    out.p = crop_matrix(out.p, s_in.n());
    if (s_in.n() != n) {
        std::vector<int> w2(static_cast<std::size_t>(s_in.n()) * s_in.n());
        for (int u = 0; u < s_in.n(); ++u)
            for (int c = 0; c < s_in.n(); ++c)
                w2[static_cast<std::size_t>(u) * s_in.n() + c] = out.witness[static_cast<std::size_t>(u) * n + c];
        out.witness = std::move(w2);
    }
    return out;
}

/// Fast (bilinear) matrix multiplication on the clique, §Steps 1-7 of the
/// two-level grid scheme. Requires a ring; the scheme's m products run on
/// the first m nodes and the label grid folds onto real nodes when the label
/// space outnumbers them.
template <class SR>
SrMatrix<SR> mm_bilinear(const SrMatrix<SR>& s_in, const SrMatrix<SR>& t_in,
                         const BilinearAlgorithm& ba, CliqueNetwork& net) {
    static_assert(SR::is_ring, "mm_bilinear needs a ring (negation)");
    require_compatible(s_in, t_in);
    const int n = net.n();
    if (ba.m() > n)
        throw std::invalid_argument("bilinear algorithm needs " + std::to_string(ba.m()) +
                                    " nodes, network has " + std::to_string(n));
    const SR sr = s_in.sr();
    const GridLayout g(n, ba.d());
    const auto s = pad_matrix(s_in, n), t = pad_matrix(t_in, n);
    const int r = g.r;
    const int rr = r * r;

    std::vector<std::vector<int>> with_sub(g.s);
    for (int x = 0; x < g.s; ++x) with_sub[x] = g.real_with_sub(x);

    using V = typename SR::value_type;
    auto at = [&](const std::vector<V>& blk, int o1, int o2) -> const V& { return blk[o1 * r + o2]; };

    // Step 1: row owners scatter column slices to the label grid.
    net.begin_phase("fmm.step1");
    Batch b1(n);
    for_each_index(n, net.exec_mode(), [&](int v) {
        WordCodec<SR> codec(sr);
        for (int x2 = 0; x2 < g.s; ++x2) {
            NodeId dst = g.label_node(g.sub(v), x2);
            for (int c : with_sub[x2]) codec.send(b1, v, dst, s(v, c));
            for (int c : with_sub[x2]) codec.send(b1, v, dst, t(v, c));
        }
    });
    Inbox in1 = net.route_oblivious(b1);

    // Steps 2-3: local linear combinations, shipped to the product nodes.
    net.begin_phase("fmm.step3");
    Batch b3(n);
    {
        InboxReader rd(in1);
        for_each_index(n, net.exec_mode(), [&](int u) {
            WordCodec<SR> codec(sr);
            for (auto [x1, x2] : g.labels_of(u)) {
                // S[*x1*, *x2*] and T[*x1*, *x2*] as d x d grids of r x r blocks.
                std::vector<std::vector<V>> ssub(static_cast<std::size_t>(g.d) * g.d,
                                                 std::vector<V>(rr, sr.zero()));
                auto tsub = ssub;
                for (int v : with_sub[x1]) {
                    for (int c : with_sub[x2])
                        ssub[static_cast<std::size_t>(g.blk(v)) * g.d + g.blk(c)][g.off(v) * r + g.off(c)] =
                            codec.recv(rd, u, v);
                    for (int c : with_sub[x2])
                        tsub[static_cast<std::size_t>(g.blk(v)) * g.d + g.blk(c)][g.off(v) * r + g.off(c)] =
                            codec.recv(rd, u, v);
                }
                std::vector<V> shat(rr), that(rr);
                for (int w = 0; w < ba.m(); ++w) {
                    std::fill(shat.begin(), shat.end(), sr.zero());
                    std::fill(that.begin(), that.end(), sr.zero());
                    for (const auto& term : ba.alpha_by_w()[w]) {
                        const auto& blk = ssub[static_cast<std::size_t>(term.i) * g.d + term.j];
                        for (int e = 0; e < rr; ++e) shat[e] = sr.add(shat[e], sr.scale(term.coef, blk[e]));
                    }
                    for (const auto& term : ba.beta_by_w()[w]) {
                        const auto& blk = tsub[static_cast<std::size_t>(term.i) * g.d + term.j];
                        for (int e = 0; e < rr; ++e) that[e] = sr.add(that[e], sr.scale(term.coef, blk[e]));
                    }
                    for (int e = 0; e < rr; ++e) codec.send(b3, u, w, shat[e]);
                    for (int e = 0; e < rr; ++e) codec.send(b3, u, w, that[e]);
                }
            }
        });
    }
    Inbox in3 = net.route_oblivious(b3);

    // Steps 4-5: one block product per node, sub-blocks scattered back.
    net.begin_phase("fmm.step5");
    Batch b5(n);
    {
        InboxReader rd(in3);
        const int side = g.s * r;
        for_each_index(n, net.exec_mode(), [&](int w) {
            if (w >= ba.m()) return;
            WordCodec<SR> codec(sr);
            std::vector<V> shat(static_cast<std::size_t>(side) * side, sr.zero());
            std::vector<V> that(static_cast<std::size_t>(side) * side, sr.zero());
            for (int x1 = 0; x1 < g.s; ++x1)
                for (int x2 = 0; x2 < g.s; ++x2) {
                    NodeId src = g.label_node(x1, x2);
                    for (int o1 = 0; o1 < r; ++o1)
                        for (int o2 = 0; o2 < r; ++o2)
                            shat[static_cast<std::size_t>(x1 * r + o1) * side + x2 * r + o2] =
                                codec.recv(rd, w, src);
                    for (int o1 = 0; o1 < r; ++o1)
                        for (int o2 = 0; o2 < r; ++o2)
                            that[static_cast<std::size_t>(x1 * r + o1) * side + x2 * r + o2] =
                                codec.recv(rd, w, src);
                }
            std::vector<V> phat(static_cast<std::size_t>(side) * side, sr.zero());
            for (int i = 0; i < side; ++i)
                for (int j = 0; j < side; ++j) {
                    auto acc = sr.acc_make();
                    for (int k = 0; k < side; ++k)
                        sr.acc_addmul(acc, shat[static_cast<std::size_t>(i) * side + k],
                                      that[static_cast<std::size_t>(k) * side + j]);
                    phat[static_cast<std::size_t>(i) * side + j] = sr.acc_value(acc);
                }
            for (int x1 = 0; x1 < g.s; ++x1)
                for (int x2 = 0; x2 < g.s; ++x2) {
                    NodeId dst = g.label_node(x1, x2);
                    for (int o1 = 0; o1 < r; ++o1)
                        for (int o2 = 0; o2 < r; ++o2)
                            codec.send(b5, w, dst, phat[static_cast<std::size_t>(x1 * r + o1) * side + x2 * r + o2]);
                }
        });
    }
    Inbox in5 = net.route_oblivious(b5);

    // Steps 6-7: recombine with lambda, return rows to their owners.
    net.begin_phase("fmm.step7");
    Batch b7(n);
    {
        InboxReader rd(in5);
        for_each_index(n, net.exec_mode(), [&](int u) {
            WordCodec<SR> codec(sr);
            for (auto [x1, x2] : g.labels_of(u)) {
                std::vector<std::vector<V>> phat_sub(ba.m());
                for (int w = 0; w < ba.m(); ++w) {
                    phat_sub[w].resize(rr);
                    for (int e = 0; e < rr; ++e) phat_sub[w][e] = codec.recv(rd, u, w);
                }
                std::vector<std::vector<V>> psub(static_cast<std::size_t>(g.d) * g.d,
                                                 std::vector<V>(rr, sr.zero()));
                for (int i = 0; i < g.d; ++i)
                    for (int j = 0; j < g.d; ++j) {
                        auto& blk = psub[static_cast<std::size_t>(i) * g.d + j];
                        for (const auto& term : ba.lambda_by_ij()[static_cast<std::size_t>(i) * g.d + j])
                            for (int e = 0; e < rr; ++e)
                                blk[e] = sr.add(blk[e], sr.scale(term.coef, phat_sub[term.w][e]));
                    }
                for (int row : with_sub[x1])
                    for (int c : with_sub[x2])
                        codec.send(b7, u, row,
                                   at(psub[static_cast<std::size_t>(g.blk(row)) * g.d + g.blk(c)],
                                      g.off(row), g.off(c)));
            }
        });
    }
    Inbox in7 = net.route_oblivious(b7);

    SrMatrix<SR> p(sr, n);
    {
        InboxReader rd(in7);
        for_each_index(n, net.exec_mode(), [&](int u) {
            WordCodec<SR> codec(sr);
            for (int x2 = 0; x2 < g.s; ++x2) {
                NodeId src = g.label_node(g.sub(u), x2);
                for (int c : with_sub[x2]) p(u, c) = codec.recv(rd, u, src);
            }
        });
    }
    return crop_matrix(p, s_in.n());
}

/// Boolean product through the integer ring: run the fast multiplication
/// over Z and threshold nonzero entries.
inline SrMatrix<BooleanSR> mm_boolean(const SrMatrix<BooleanSR>& s, const SrMatrix<BooleanSR>& t,
                                      CliqueNetwork& net) {
    require_compatible(s, t);
    IntRing ring;
    SrMatrix<IntRing> si(ring, s.n()), ti(ring, t.n());
    for (int u = 0; u < s.n(); ++u)
        for (int v = 0; v < s.n(); ++v) {
            si(u, v) = s(u, v) ? 1 : 0;
            ti(u, v) = t(u, v) ? 1 : 0;
        }
    BilinearAlgorithm ba = BilinearAlgorithm::for_nodes(net.n());
    SrMatrix<IntRing> pi = mm_bilinear(si, ti, ba, net);
    SrMatrix<BooleanSR> p(BooleanSR{}, s.n());
    for (int u = 0; u < s.n(); ++u)
        for (int v = 0; v < s.n(); ++v) p(u, v) = !pi(u, v).is_zero();
    return p;
}

}  // namespace cclique
