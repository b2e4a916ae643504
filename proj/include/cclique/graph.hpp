#pragma once

#include <string>
#include <vector>

#include "cclique/matrix.hpp"
#include "cclique/rng.hpp"
#include "cclique/weight.hpp"

namespace cclique {

/// Unweighted graph as a dense boolean adjacency matrix. Undirected edges are
/// stored oriented both ways. Self-loops are rejected unless explicitly
/// permitted (directed girth needs them).
class Graph {
public:
    Graph(int n, bool directed) : n_(n), directed_(directed), adj_(static_cast<std::size_t>(n) * n, 0) {}

    int n() const { return n_; }
    bool directed() const { return directed_; }

    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }

    void add_edge(int u, int v, bool allow_self_loop = false) {
        check_node(u);
        check_node(v);
        if (u == v && !allow_self_loop) throw std::invalid_argument("self-loop not permitted");
        set(u, v);
        if (!directed_) set(v, u);
    }

    /// Out-degree row sums; equals the undirected degree when symmetric.
    std::vector<int> degrees() const {
        std::vector<int> d(n_, 0);
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v) d[u] += has_edge(u, v) ? 1 : 0;
        return d;
    }

    /// Mutual degree: number of u with both (u,v) and (v,u) present.
    std::vector<int> mutual_degrees() const {
        std::vector<int> d(n_, 0);
        for (int v = 0; v < n_; ++v)
            for (int u = 0; u < n_; ++u)
                if (u != v && has_edge(u, v) && has_edge(v, u)) ++d[v];
        return d;
    }

    int edge_count() const {
        int m = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (has_edge(u, v)) ++m;
        return directed_ ? m : m / 2;
    }

    std::vector<int> neighbours(int u) const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (has_edge(u, v)) out.push_back(v);
        return out;
    }

    SrMatrix<BooleanSR> adjacency() const {
        SrMatrix<BooleanSR> a(BooleanSR{}, n_);
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v) a(u, v) = has_edge(u, v);
        return a;
    }

    SrMatrix<IntRing> adjacency_int() const {
        SrMatrix<IntRing> a(IntRing{}, n_);
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v) a(u, v) = has_edge(u, v) ? 1 : 0;
        return a;
    }

private:
    void check_node(int u) const {
        if (u < 0 || u >= n_) throw std::out_of_range("node id out of range");
    }
    void set(int u, int v) { adj_[static_cast<std::size_t>(u) * n_ + v] = 1; }

    int n_;
    bool directed_;
    std::vector<std::uint8_t> adj_;
};

/// Edge-weight matrix with zero diagonal and the infinity sentinel on
/// non-edges.
class WeightMatrix {
public:
    WeightMatrix(int n, bool directed)
        : n_(n), directed_(directed), w_(static_cast<std::size_t>(n) * n, Weight::inf()) {
        for (int i = 0; i < n; ++i) at(i, i) = Weight(0);
    }

    int n() const { return n_; }
    bool directed() const { return directed_; }

    Weight& at(int u, int v) { return w_[static_cast<std::size_t>(u) * n_ + v]; }
    const Weight& at(int u, int v) const { return w_[static_cast<std::size_t>(u) * n_ + v]; }

    void add_edge(int u, int v, long long weight) {
        if (u == v) throw std::invalid_argument("self-loop not permitted");
        at(u, v) = Weight(weight);
        if (!directed_) at(v, u) = Weight(weight);
    }

    /// Largest finite |entry|; 0 for an edgeless graph.
    long long weight_bound() const {
        long long m = 0;
        for (const auto& x : w_)
            if (!x.is_inf()) m = std::max(m, std::abs(x.raw()));
        return m;
    }

    SrMatrix<MinPlusSR> matrix() const {
        SrMatrix<MinPlusSR> s(MinPlusSR{}, n_);
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v) s(u, v) = at(u, v);
        return s;
    }

    static WeightMatrix from_matrix(const SrMatrix<MinPlusSR>& s, bool directed) {
        WeightMatrix w(s.n(), directed);
        for (int u = 0; u < s.n(); ++u)
            for (int v = 0; v < s.n(); ++v) w.at(u, v) = s(u, v);
        return w;
    }

    static WeightMatrix unit_weights(const Graph& g) {
        WeightMatrix w(g.n(), g.directed());
        for (int u = 0; u < g.n(); ++u)
            for (int v = 0; v < g.n(); ++v)
                if (u != v && g.has_edge(u, v)) w.at(u, v) = Weight(1);
        return w;
    }

private:
    int n_;
    bool directed_;
    std::vector<Weight> w_;
};

// Fixture generators.
Graph make_cycle(int n, bool directed = false);
Graph make_path(int n);
Graph make_complete(int n, bool directed = false);
Graph make_star(int n);
Graph make_petersen();
/// Cubic Hamiltonian graph from LCF notation: cycle 0..n-1 plus chord
/// (i, i + shift[i mod shifts]) for each i.
Graph make_lcf(int n, const std::vector<int>& shifts);
Graph make_gnp(int n, std::uint64_t p_num, std::uint64_t p_den, Rng& rng, bool directed = false);
WeightMatrix make_random_weights(int n, bool directed, long long lo, long long hi,
                                 std::uint64_t edge_num, std::uint64_t edge_den, Rng& rng);

// Edge-list file format: one edge per line, "u v" or "u v w", '#' comments.
struct EdgeListOptions {
    bool directed = false;
    bool weighted = false;
    bool allow_self_loops = false;
    int n_override = -1;  // node count when larger than max id + 1
};

Graph ingest_edge_list(const std::string& path, const EdgeListOptions& opt);
WeightMatrix ingest_weighted_edge_list(const std::string& path, const EdgeListOptions& opt);
std::string emit_edge_list(const Graph& g);
void write_text_file(const std::string& path, const std::string& contents);

// Dense matrix text format for the raw matmul subcommand: first line n, then
// n whitespace-separated rows, "inf" for the sentinel.
SrMatrix<MinPlusSR> parse_dense_matrix(const std::string& text);
std::string format_dense_matrix(const SrMatrix<MinPlusSR>& m);

}  // namespace cclique
