#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "cclique/core.hpp"

namespace cclique {

inline int exact_cube_root(int n) {
    int s = static_cast<int>(std::lround(std::cbrt(static_cast<double>(n))));
    while (s > 1 && s * s * s > n) --s;
    while ((s + 1) * (s + 1) * (s + 1) <= n) ++s;
    return s * s * s == n ? s : -1;
}

inline int ceil_sqrt(int n) {
    int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    while (s > 0 && s * s >= n + 1 && (s - 1) * (s - 1) >= n) --s;
    while (s * s < n) ++s;
    return s;
}

/// Node/index ids as three digits in base n^(1/3), for the 3D algorithm.
struct CubeLayout {
    int n, s;  // s^3 == n

    explicit CubeLayout(int n_) : n(n_), s(exact_cube_root(n_)) {
        if (s < 0) throw std::invalid_argument("node count must be a perfect cube (nearest: " +
                                               nearest_hint(n_) + ")");
    }

    int d1(int v) const { return v / (s * s); }
    int d2(int v) const { return (v / s) % s; }
    int d3(int v) const { return v % s; }
    int id(int a, int b, int c) const { return (a * s + b) * s + c; }

    static std::string nearest_hint(int n_) {
        int lo = 1;
        while ((lo + 1) * (lo + 1) * (lo + 1) <= n_) ++lo;
        int a = lo * lo * lo, b = (lo + 1) * (lo + 1) * (lo + 1);
        return std::to_string(a) + " or " + std::to_string(b);
    }
};

/// Two-level grid for the bilinear algorithm: matrix indices split into
/// (block, sub, offset) with block in [d], sub in [s], offset in [r]. The
/// matrix is implicitly padded to d*s*r with zeros so all sub-blocks share
/// the r x r shape; trailing pieces simply contain padding.
///
/// Secondary labels (x1, x2) in [s]^2 are the base-s digits of a node id;
/// when s^2 > n the surplus labels fold back onto real nodes modulo n, so a
/// node may simulate up to ceil(s^2 / n) label slots.
struct GridLayout {
    int n;       // node count == matrix dimension before padding
    int d;       // bilinear base dimension
    int s;       // ceil(sqrt(n)), the sub-grid side
    int r;       // sub-block side
    int padded;  // d * s * r >= n

    GridLayout(int n_, int d_) : n(n_), d(d_), s(ceil_sqrt(n_)) {
        if (d < 1 || d > n) throw std::invalid_argument("bilinear base dimension out of range");
        int block = (n + d - 1) / d;
        r = (block + s - 1) / s;
        padded = d * s * r;
    }

    int blk(int idx) const { return idx / (s * r); }
    int sub(int idx) const { return (idx / r) % s; }
    int off(int idx) const { return idx % r; }
    int index(int b, int x, int o) const { return (b * s + x) * r + o; }

    NodeId label_node(int x1, int x2) const { return (x1 * s + x2) % n; }

    /// Label slots simulated by node v, in lexicographic order.
    std::vector<std::pair<int, int>> labels_of(NodeId v) const {
        std::vector<std::pair<int, int>> out;
        for (int t = v; t < s * s; t += n) out.emplace_back(t / s, t % s);
        return out;
    }

    /// Real (unpadded) indices with the given sub digit, ascending.
    std::vector<int> real_with_sub(int x) const {
        std::vector<int> out;
        for (int b = 0; b < d; ++b)
            for (int o = 0; o < r; ++o) {
                int idx = index(b, x, o);
                if (idx < n) out.push_back(idx);
            }
        return out;
    }
};

}  // namespace cclique
