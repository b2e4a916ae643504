#include "cclique/graph.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cclique {

Graph make_cycle(int n, bool directed) {
    Graph g(n, directed);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_path(int n) {
    Graph g(n, false);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_complete(int n, bool directed) {
    Graph g(n, directed);
    for (int u = 0; u < n; ++u)
        for (int v = directed ? 0 : u + 1; v < n; ++v)
            if (u != v) g.add_edge(u, v);
    return g;
}

Graph make_star(int n) {
    Graph g(n, false);
    for (int i = 1; i < n; ++i) g.add_edge(0, i);
    return g;
}

Graph make_petersen() {
    Graph g(10, false);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

Graph make_lcf(int n, const std::vector<int>& shifts) {
    Graph g(n, false);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        int s = shifts[i % shifts.size()];
        int j = ((i + s) % n + n) % n;
        if (!g.has_edge(i, j)) g.add_edge(i, j);
    }
    return g;
}

Graph make_gnp(int n, std::uint64_t p_num, std::uint64_t p_den, Rng& rng, bool directed) {
    Graph g(n, directed);
    for (int u = 0; u < n; ++u)
        for (int v = directed ? 0 : u + 1; v < n; ++v)
            if (u != v && rng.chance(p_num, p_den)) g.add_edge(u, v);
    return g;
}

WeightMatrix make_random_weights(int n, bool directed, long long lo, long long hi,
                                 std::uint64_t edge_num, std::uint64_t edge_den, Rng& rng) {
    WeightMatrix w(n, directed);
    for (int u = 0; u < n; ++u)
        for (int v = directed ? 0 : u + 1; v < n; ++v)
            if (u != v && rng.chance(edge_num, edge_den)) w.add_edge(u, v, rng.range(lo, hi));
    return w;
}

namespace {

struct ParsedEdge {
    int line;
    int u, v;
    long long w;
    bool has_w;
};

std::vector<ParsedEdge> parse_lines(const std::string& path, int& max_id) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::vector<ParsedEdge> edges;
    std::string line;
    int lineno = 0;
    max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ss(stripped);
        long long u, v, w;
        if (!(ss >> u)) continue;  // blank or comment-only line
        if (!(ss >> v)) throw std::runtime_error("parse error at line " + std::to_string(lineno));
        ParsedEdge e{lineno, static_cast<int>(u), static_cast<int>(v), 0, false};
        if (ss >> w) {
            e.w = w;
            e.has_w = true;
        }
        std::string rest;
        if (ss >> rest) throw std::runtime_error("parse error at line " + std::to_string(lineno));
        if (u < 0 || v < 0) throw std::runtime_error("id out of range at line " + std::to_string(lineno));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
        edges.push_back(e);
    }
    return edges;
}

int resolve_n(int max_id, const EdgeListOptions& opt) {
    int n = max_id + 1;
    if (opt.n_override >= 0) {
        if (opt.n_override < n) throw std::runtime_error("id out of range for requested node count");
        n = opt.n_override;
    }
    if (n <= 0) throw std::runtime_error("empty graph: no edges and no node count given");
    return n;
}

}  // namespace

Graph ingest_edge_list(const std::string& path, const EdgeListOptions& opt) {
    int max_id = -1;
    auto edges = parse_lines(path, max_id);
    Graph g(resolve_n(max_id, opt), opt.directed);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.has_w) throw std::runtime_error("unexpected weight at line " + std::to_string(e.line));
        if (e.u == e.v && !opt.allow_self_loops)
            throw std::runtime_error("self-loop at line " + std::to_string(e.line));
        auto key = opt.directed ? std::pair{e.u, e.v} : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (!seen.insert(key).second)
            throw std::runtime_error("duplicate edge at line " + std::to_string(e.line));
        g.add_edge(e.u, e.v, opt.allow_self_loops);
    }
    return g;
}

WeightMatrix ingest_weighted_edge_list(const std::string& path, const EdgeListOptions& opt) {
    int max_id = -1;
    auto edges = parse_lines(path, max_id);
    WeightMatrix w(resolve_n(max_id, opt), opt.directed);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges) {
        if (e.u == e.v) throw std::runtime_error("self-loop at line " + std::to_string(e.line));
        auto key = opt.directed ? std::pair{e.u, e.v} : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
        if (!seen.insert(key).second)
            throw std::runtime_error("duplicate edge at line " + std::to_string(e.line));
        w.add_edge(e.u, e.v, e.has_w ? e.w : 1);
    }
    return w;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# n=" << g.n() << (g.directed() ? " directed" : " undirected") << "\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.directed() ? 0 : u; v < g.n(); ++v)
            if (g.has_edge(u, v) && (g.directed() || u <= v)) out << u << " " << v << "\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
}

SrMatrix<MinPlusSR> parse_dense_matrix(const std::string& text) {
    std::istringstream in(text);
    int n;
    if (!(in >> n) || n <= 0) throw std::runtime_error("matrix file: bad dimension line");
    SrMatrix<MinPlusSR> m(MinPlusSR{}, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            std::string tok;
            if (!(in >> tok)) throw std::runtime_error("matrix file: too few entries");
            if (tok == "inf") {
                m(u, v) = Weight::inf();
            } else {
                try {
                    m(u, v) = Weight(std::stoll(tok));
                } catch (const std::exception&) {
                    throw std::runtime_error("matrix file: bad entry '" + tok + "'");
                }
            }
        }
    return m;
}

std::string format_dense_matrix(const SrMatrix<MinPlusSR>& m) {
    std::ostringstream out;
    out << m.n() << "\n";
    for (int u = 0; u < m.n(); ++u) {
        for (int v = 0; v < m.n(); ++v) out << (v ? " " : "") << m(u, v).str();
        out << "\n";
    }
    return out.str();
}

}  // namespace cclique
