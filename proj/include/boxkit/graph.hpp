#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxkit/bitset.hpp"

namespace boxkit {

// Raised when text or JSON input does not match the documented formats.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("edge endpoints must differ");
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph over dense 0-based vertex indices. Immutable after
// construction; the edge list is kept in lexicographic order so that derived
// numberings (line-graph vertices, certificates) are identical across runs.
// Adjacency is also held as per-vertex bitsets for O(1) tests and fast
// set intersection in the search code.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        for (auto& e : edges_) {
            if (e.u == e.v) throw std::invalid_argument("loop edge");
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("duplicate edge");
        adj_.assign(n_, Bitset(n_));
        edge_index_.assign(std::size_t(n_) * n_, -1);
        for (int i = 0; i < int(edges_.size()); ++i) {
            const Edge& e = edges_[i];
            adj_[e.u].set(e.v);
            adj_[e.v].set(e.u);
            edge_index_[std::size_t(e.u) * n_ + e.v] = i;
            edge_index_[std::size_t(e.v) * n_ + e.u] = i;
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    Edge edge_at(int idx) const { return edges_[idx]; }

    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    // Index of {u,v} in the sorted edge list, or -1.
    int edge_index(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return -1;
        return edge_index_[std::size_t(u) * n_ + v];
    }

    const Bitset& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Bitset> adj_;
    std::vector<int> edge_index_;
};

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    edges.reserve(std::size_t(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

// The line graph's vertices are the base graph's edges in canonical order:
// line vertex i corresponds to base.edges()[i]. Two line vertices are
// adjacent exactly when the base edges share an endpoint.
struct LineGraphMap {
    Graph base;
    Graph lg;

    int to_lg(int u, int v) const {
        int idx = base.edge_index(u, v);
        if (idx < 0) throw std::invalid_argument("not an edge of the base graph");
        return idx;
    }
    Edge from_lg(int line_vertex) const { return base.edge_at(line_vertex); }
};

inline LineGraphMap line_graph(const Graph& g) {
    int m = g.edge_count();
    std::vector<Edge> lg_edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge a = g.edge_at(i);
            const Edge b = g.edge_at(j);
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                lg_edges.push_back({i, j});
        }
    return LineGraphMap{g, Graph(m, std::move(lg_edges))};
}

// Kneser graph KG(n,2): vertices are the 2-subsets of {0..n-1} in the same
// lexicographic order as the edges of K_n, adjacent when disjoint. Identical
// to complement(line_graph(complete_graph(n)).lg) vertex for vertex.
inline Graph kneser_n2(int n) {
    if (n < 5) throw std::invalid_argument("kneser_n2 requires n >= 5");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    int m = int(pairs.size());
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Edge a = pairs[i];
            const Edge b = pairs[j];
            if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v)
                edges.push_back({i, j});
        }
    return Graph(m, std::move(edges));
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertices;  // vertices[new_index] = old index, ascending
};

inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> s) {
    std::vector<int> keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw std::invalid_argument("duplicate vertex in induced set");
    std::vector<int> new_index(g.vertex_count(), -1);
    for (int i = 0; i < int(keep.size()); ++i) {
        if (keep[i] < 0 || keep[i] >= g.vertex_count())
            throw std::invalid_argument("vertex out of range in induced set");
        new_index[keep[i]] = i;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (new_index[e.u] >= 0 && new_index[e.v] >= 0)
            edges.push_back({new_index[e.u], new_index[e.v]});
    return InducedSubgraph{Graph(int(keep.size()), std::move(edges)), std::move(keep)};
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

// Edge-list text format: first line "n m", then m lines "u v" with 0 <= u < v
// and the lines in strictly ascending lexicographic order.
inline Graph parse_edge_list(std::istream& in) {
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw FormatError("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw FormatError("edge list: negative counts in header");
    std::vector<Edge> edges;
    edges.reserve(std::size_t(m));
    Edge prev{-1, -1};
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw FormatError("edge list: fewer edges than header declares");
        if (u < 0 || v >= n) throw FormatError("edge list: endpoint out of range");
        if (u >= v) throw FormatError("edge list: edges must satisfy u < v");
        Edge e{int(u), int(v)};
        if (!(prev < e)) throw FormatError("edge list: edges must be strictly ascending");
        prev = e;
        edges.push_back(e);
    }
    std::string trailing;
    if (in >> trailing) throw FormatError("edge list: trailing content after declared edges");
    return Graph(int(n), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

}  // namespace boxkit
