#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxkit/interval_order.hpp"

namespace boxkit {

// Closed-form construction of the maximal interval-order subgraphs of the
// line graph of K_n. Every such subgraph is determined by at most five base
// vertices and falls into one of four families (a, b, c, c'); the catalog
// instantiates the families over all ordered tuples, deduplicates, and
// filters to the inclusion-maximal sets.

// Named edge subsets of L(K_n), written against base-vertex indices.
// Throughout, a "line vertex" is a base edge and a "line edge" joins two
// base edges sharing an endpoint.
class LineContext {
public:
    explicit LineContext(int n) : n_(n), lgm_(line_graph(complete_graph(n))) {
        if (n < 3) throw std::invalid_argument("LineContext requires n >= 3");
    }

    int n() const { return n_; }
    const LineGraphMap& map() const { return lgm_; }
    const Graph& lg() const { return lgm_.lg; }

    int line_vertex(int u, int v) const { return lgm_.to_lg(u, v); }

    int line_edge(int lv1, int lv2) const {
        int idx = lgm_.lg.edge_index(lv1, lv2);
        if (idx < 0) throw std::invalid_argument("base edges do not share an endpoint");
        return idx;
    }

    Bitset empty_edge_set() const { return Bitset(lgm_.lg.edge_count()); }

    // Q_v: the clique formed by the n-1 base edges through v.
    Bitset clique_set(int v) const {
        check(v);
        Bitset out = empty_edge_set();
        for (int x = 0; x < n_; ++x) {
            if (x == v) continue;
            for (int y = x + 1; y < n_; ++y) {
                if (y == v) continue;
                out.set(line_edge(line_vertex(v, x), line_vertex(v, y)));
            }
        }
        return out;
    }

    // The star of the line vertex uv: all line edges at uv.
    Bitset star_set(int u, int v) const {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("star_set: u and v must differ");
        Bitset out = empty_edge_set();
        int e = line_vertex(u, v);
        lg().neighbors(e).for_each([&](int f) { out.set(line_edge(e, f)); });
        return out;
    }

    // Half star: only the line edges from uv to the other base edges at u.
    Bitset half_star_set(int u, int v) const {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("half_star_set: u and v must differ");
        Bitset out = empty_edge_set();
        int e = line_vertex(u, v);
        for (int x = 0; x < n_; ++x) {
            if (x == u || x == v) continue;
            out.set(line_edge(e, line_vertex(u, x)));
        }
        return out;
    }

    // K_U: the edge set of the line graph of the complete graph on U.
    Bitset clique_on_subset(std::span<const int> subset) const {
        for (std::size_t i = 0; i < subset.size(); ++i) {
            check(subset[i]);
            for (std::size_t j = i + 1; j < subset.size(); ++j)
                if (subset[i] == subset[j])
                    throw std::invalid_argument("clique_on_subset: repeated vertex");
        }
        Bitset out = empty_edge_set();
        std::vector<int> lvs;
        for (std::size_t i = 0; i < subset.size(); ++i)
            for (std::size_t j = i + 1; j < subset.size(); ++j)
                lvs.push_back(line_vertex(subset[i], subset[j]));
        for (std::size_t i = 0; i < lvs.size(); ++i)
            for (std::size_t j = i + 1; j < lvs.size(); ++j)
                if (lg().has_edge(lvs[i], lvs[j])) out.set(line_edge(lvs[i], lvs[j]));
        return out;
    }

    // The pair {(uv,uw), (uv,vw)}.
    Bitset triple_half(int u, int v, int w) const {
        check(u);
        check(v);
        check(w);
        if (u == v || u == w || v == w)
            throw std::invalid_argument("triple_half: vertices must be distinct");
        Bitset out = empty_edge_set();
        out.set(line_edge(line_vertex(u, v), line_vertex(u, w)));
        out.set(line_edge(line_vertex(u, v), line_vertex(v, w)));
        return out;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("base vertex out of range");
    }

    int n_;
    LineGraphMap lgm_;
};

enum class Family { A, B, C, CPrime };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "a";
        case Family::B: return "b";
        case Family::C: return "c";
        case Family::CPrime: return "c'";
    }
    return "?";
}

struct CatalogEntry {
    Family family = Family::A;
    std::array<int, 5> tuple{-1, -1, -1, -1, -1};  // last slot unused except family a
    Bitset edges;       // over the line-graph edge indices of K_n
    Ordering witness;   // line-vertex prefix realizing `edges`
    int size() const { return edges.count(); }
};

namespace detail {

inline void require_distinct(std::initializer_list<int> vs, int n) {
    std::vector<int> v(vs);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] >= n) throw std::invalid_argument("base vertex out of range");
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) throw std::invalid_argument("tuple vertices must be distinct");
    }
}

}  // namespace detail

// Family a: the clique at a, both stars at ab and ad, and the two triangles
// abc and ade. Witness: ab, ac, the other a-edges except ad and ae, then de,
// the d-edges other than ad, and finally ae; ties in ascending order.
inline CatalogEntry family_a(const LineContext& ctx, int a, int b, int c, int d, int e) {
    detail::require_distinct({a, b, c, d, e}, ctx.n());
    if (ctx.n() < 5) throw std::invalid_argument("family_a requires n >= 5");
    CatalogEntry out;
    out.family = Family::A;
    out.tuple = {a, b, c, d, e};
    out.edges = ctx.clique_set(a);
    out.edges |= ctx.star_set(a, b);
    out.edges |= ctx.star_set(a, d);
    std::array<int, 3> abc{a, b, c}, ade{a, d, e};
    out.edges |= ctx.clique_on_subset(abc);
    out.edges |= ctx.clique_on_subset(ade);

    out.witness.push_back(ctx.line_vertex(a, b));
    out.witness.push_back(ctx.line_vertex(a, c));
    for (int x = 0; x < ctx.n(); ++x)
        if (x != a && x != b && x != c && x != d && x != e)
            out.witness.push_back(ctx.line_vertex(a, x));
    out.witness.push_back(ctx.line_vertex(d, e));
    for (int x = 0; x < ctx.n(); ++x)
        if (x != a && x != d && x != e) out.witness.push_back(ctx.line_vertex(d, x));
    out.witness.push_back(ctx.line_vertex(a, e));
    return out;
}

// Family b: both stars at ab and ad plus the full line graph of {a,b,c,d}.
// Witness: ab, cd, ac, bd, then the remaining a-edges and d-edges.
inline CatalogEntry family_b(const LineContext& ctx, int a, int b, int c, int d) {
    detail::require_distinct({a, b, c, d}, ctx.n());
    if (ctx.n() < 5) throw std::invalid_argument("family_b requires n >= 5");
    CatalogEntry out;
    out.family = Family::B;
    out.tuple = {a, b, c, d, -1};
    out.edges = ctx.star_set(a, b);
    out.edges |= ctx.star_set(a, d);
    std::array<int, 4> abcd{a, b, c, d};
    out.edges |= ctx.clique_on_subset(abcd);

    out.witness.push_back(ctx.line_vertex(a, b));
    out.witness.push_back(ctx.line_vertex(c, d));
    out.witness.push_back(ctx.line_vertex(a, c));
    out.witness.push_back(ctx.line_vertex(b, d));
    for (int x = 0; x < ctx.n(); ++x)
        if (x != a && x != b && x != c && x != d) out.witness.push_back(ctx.line_vertex(a, x));
    for (int x = 0; x < ctx.n(); ++x)
        if (x != a && x != b && x != c && x != d) out.witness.push_back(ctx.line_vertex(d, x));
    return out;
}

// Families c and c': stars at ab and ad (or bc for the primed variant), the
// half star at ac, triangles abc and abd, and the half triangles at ad/c and
// bc/d. Witness: ab, ac, bd, cd, then the remaining a- and d-edges (c), or
// the remaining b- and c-edges (c').
inline CatalogEntry family_c(const LineContext& ctx, int a, int b, int c, int d,
                             bool primed = false) {
    detail::require_distinct({a, b, c, d}, ctx.n());
    if (ctx.n() < 5) throw std::invalid_argument("family_c requires n >= 5");
    CatalogEntry out;
    out.family = primed ? Family::CPrime : Family::C;
    out.tuple = {a, b, c, d, -1};
    out.edges = ctx.star_set(a, b);
    out.edges |= primed ? ctx.star_set(b, c) : ctx.star_set(a, d);
    out.edges |= ctx.half_star_set(a, c);
    std::array<int, 3> abc{a, b, c}, abd{a, b, d};
    out.edges |= ctx.clique_on_subset(abc);
    out.edges |= ctx.clique_on_subset(abd);
    out.edges |= ctx.triple_half(a, d, c);
    out.edges |= ctx.triple_half(b, c, d);

    out.witness.push_back(ctx.line_vertex(a, b));
    out.witness.push_back(ctx.line_vertex(a, c));
    out.witness.push_back(ctx.line_vertex(b, d));
    out.witness.push_back(ctx.line_vertex(c, d));
    int s = primed ? b : a;
    int t = primed ? c : d;
    for (int x = 0; x < ctx.n(); ++x)
        if (x != a && x != b && x != c && x != d) out.witness.push_back(ctx.line_vertex(s, x));
    for (int x = 0; x < ctx.n(); ++x)
        if (x != a && x != b && x != c && x != d) out.witness.push_back(ctx.line_vertex(t, x));
    return out;
}

// Generates all family instances over ordered tuples, removes duplicates
// (keeping the first generator), and drops entries strictly contained in
// another entry. Every maximal interval-order subgraph of L(K_n) is among
// the generated sets, so the survivors are exactly the maximal ones.
inline std::vector<CatalogEntry> enumerate_catalog(const LineContext& ctx) {
    int n = ctx.n();
    if (n < 5) throw std::invalid_argument("enumerate_catalog requires n >= 5");

    std::vector<CatalogEntry> raw;
    std::array<int, 5> t{};
    for (t[0] = 0; t[0] < n; ++t[0])
        for (t[1] = 0; t[1] < n; ++t[1]) {
            if (t[1] == t[0]) continue;
            for (t[2] = 0; t[2] < n; ++t[2]) {
                if (t[2] == t[0] || t[2] == t[1]) continue;
                for (t[3] = 0; t[3] < n; ++t[3]) {
                    if (t[3] == t[0] || t[3] == t[1] || t[3] == t[2]) continue;
                    for (t[4] = 0; t[4] < n; ++t[4]) {
                        if (t[4] == t[0] || t[4] == t[1] || t[4] == t[2] || t[4] == t[3]) continue;
                        raw.push_back(family_a(ctx, t[0], t[1], t[2], t[3], t[4]));
                    }
                    raw.push_back(family_b(ctx, t[0], t[1], t[2], t[3]));
                    raw.push_back(family_c(ctx, t[0], t[1], t[2], t[3], false));
                    raw.push_back(family_c(ctx, t[0], t[1], t[2], t[3], true));
                }
            }
        }

    // Dedup keeping the first generator tuple.
    std::vector<CatalogEntry> uniq;
    std::unordered_map<std::size_t, std::vector<int>> seen;
    for (auto& entry : raw) {
        std::size_t h = entry.edges.hash();
        auto& bucket = seen[h];
        bool dup = false;
        for (int idx : bucket)
            if (uniq[idx].edges == entry.edges) {
                dup = true;
                break;
            }
        if (!dup) {
            bucket.push_back(int(uniq.size()));
            uniq.push_back(std::move(entry));
        }
    }

    // Containment pass. Equal sizes cannot nest strictly, so only pairs from
    // different size classes are compared.
    std::vector<int> size(uniq.size());
    for (std::size_t i = 0; i < uniq.size(); ++i) size[i] = uniq[i].edges.count();
    std::vector<char> dominated(uniq.size(), 0);
    for (std::size_t i = 0; i < uniq.size(); ++i)
        for (std::size_t j = 0; j < uniq.size(); ++j)
            if (size[j] > size[i] && uniq[i].edges.is_subset_of(uniq[j].edges)) {
                dominated[i] = 1;
                break;
            }
    std::vector<CatalogEntry> out;
    for (std::size_t i = 0; i < uniq.size(); ++i)
        if (!dominated[i]) out.push_back(std::move(uniq[i]));
    return out;
}

inline std::vector<CatalogEntry> enumerate_catalog(int n) {
    LineContext ctx(n);
    return enumerate_catalog(ctx);
}

}  // namespace boxkit
