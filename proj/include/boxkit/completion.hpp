#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boxkit/catalog.hpp"

namespace boxkit {

// Minimal interval completions of complements of line graphs, and exact
// bounded-color cover search. Completing the complement of L(g) to an
// interval graph is, after complementation, the same as choosing a maximal
// interval-order subgraph of L(g); for a base graph on at least five
// vertices those are exactly the restrictions of the K_n catalog entries.

// One edge-disjointness color: an interval-order edge set together with an
// ordering prefix certifying it.
struct CoverColor {
    std::vector<Edge> edges;
    Ordering witness;
};

// A family of colors whose union is meant to be the host graph's edge set.
struct Cover {
    int vertices = 0;  // vertex count of the host (line) graph
    std::vector<CoverColor> colors;
};

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
};

// Checks a cover certificate against the graph whose edges it should cover:
// every color must be a subset of E(lg), every witness must pass the chain
// check on its color graph (witnesses may be prefixes; the remaining
// vertices are appended in ascending order), and the union must be all of
// E(lg). Structural defects (indices out of range, repeated witness
// vertices, loops) raise FormatError.
inline VerifyResult verify_cover(const Graph& lg, const Cover& cover) {
    if (cover.vertices != lg.vertex_count())
        throw FormatError("cover: vertex count does not match the graph");
    Bitset covered(lg.edge_count());
    for (std::size_t i = 0; i < cover.colors.size(); ++i) {
        const CoverColor& color = cover.colors[i];
        std::vector<char> seen(lg.vertex_count(), 0);
        for (int v : color.witness) {
            if (v < 0 || v >= lg.vertex_count())
                throw FormatError("cover: witness vertex out of range in color " +
                                  std::to_string(i));
            if (seen[v])
                throw FormatError("cover: repeated witness vertex in color " + std::to_string(i));
            seen[v] = 1;
        }
        std::vector<Edge> edges;
        for (const Edge& e : color.edges) {
            if (e.u < 0 || e.v >= lg.vertex_count() || e.u == e.v)
                throw FormatError("cover: bad edge in color " + std::to_string(i));
            edges.push_back(make_edge(e.u, e.v));
        }
        Graph h(lg.vertex_count(), edges);
        for (const Edge& e : h.edges()) {
            int idx = lg.edge_index(e.u, e.v);
            if (idx < 0)
                return VerifyResult{false, "color " + std::to_string(i) + " contains {" +
                                               std::to_string(e.u) + "," + std::to_string(e.v) +
                                               "}, not an edge of the graph"};
            covered.set(idx);
        }
        ChainCheckResult chk = check_chain_property(h, complete_ordering(h, color.witness));
        if (!chk.ok)
            return VerifyResult{false, "color " + std::to_string(i) +
                                           " fails the chain property at positions (" +
                                           std::to_string(chk.i) + "," + std::to_string(chk.j) +
                                           ") with vertex " + std::to_string(chk.x)};
    }
    for (int idx = 0; idx < lg.edge_count(); ++idx)
        if (!covered.test(idx)) {
            Edge e = lg.edge_at(idx);
            return VerifyResult{false, "edge {" + std::to_string(e.u) + "," +
                                           std::to_string(e.v) + "} is not covered"};
        }
    return VerifyResult{true, ""};
}

// A catalog entry cut down to the line graph of g: only the line vertices
// corresponding to edges of g survive, re-indexed through lgm_g.
struct RestrictedEntry {
    Bitset edges;      // over the edge indices of L(g)
    Ordering witness;  // surviving witness vertices, as L(g) indices
};

inline RestrictedEntry restrict_entry(const LineContext& ctx, const CatalogEntry& entry,
                                      const LineGraphMap& lgm_g) {
    const Graph& g = lgm_g.base;
    if (g.vertex_count() != ctx.n())
        throw std::invalid_argument("restrict_entry: vertex count mismatch");
    RestrictedEntry out;
    out.edges = Bitset(lgm_g.lg.edge_count());
    entry.edges.for_each([&](int idx) {
        Edge le = ctx.lg().edge_at(idx);
        Edge e = ctx.map().from_lg(le.u);
        Edge f = ctx.map().from_lg(le.v);
        int eu = g.edge_index(e.u, e.v);
        int fv = g.edge_index(f.u, f.v);
        if (eu >= 0 && fv >= 0) out.edges.set(lgm_g.lg.edge_index(eu, fv));
    });
    for (int lv : entry.witness) {
        Edge e = ctx.map().from_lg(lv);
        int idx = g.edge_index(e.u, e.v);
        if (idx >= 0) out.witness.push_back(idx);
    }
    return out;
}

inline RestrictedEntry restrict_entry(const LineContext& ctx, const CatalogEntry& entry,
                                      const Graph& g) {
    LineGraphMap lgm_g = line_graph(g);
    return restrict_entry(ctx, entry, lgm_g);
}

namespace detail {

struct ColorCandidate {
    Bitset mask;  // over the edge indices of L(g)
    Ordering witness;
};

// The maximal interval-order subgraphs of L(g): restrictions of the catalog
// entries for base graphs with at least five vertices, brute force below
// that (the catalog families need five distinct base vertices).
inline std::vector<ColorCandidate> color_candidates(const LineGraphMap& lgm_g,
                                                    const EnumOptions& opts = {}) {
    const Graph& g = lgm_g.base;
    std::vector<ColorCandidate> cands;
    if (g.vertex_count() >= 5) {
        LineContext ctx(g.vertex_count());
        std::vector<CatalogEntry> catalog = enumerate_catalog(ctx);
        std::vector<Candidate> restricted;
        for (const CatalogEntry& entry : catalog) {
            RestrictedEntry r = restrict_entry(ctx, entry, lgm_g);
            restricted.push_back(Candidate{std::move(r.edges), std::move(r.witness)});
        }
        CandidateSet dedup;
        for (auto& c : restricted) dedup.add(std::move(c.mask), std::move(c.witness));
        for (auto& c : keep_maximal(dedup.take()))
            cands.push_back(ColorCandidate{std::move(c.mask), std::move(c.witness)});
    } else {
        EnumOptions small = opts;
        small.max_vertices = std::max(small.max_vertices, lgm_g.lg.vertex_count());
        for (auto& ms : maximal_interval_order_subgraphs_bruteforce(lgm_g.lg, small))
            cands.push_back(ColorCandidate{std::move(ms.edge_mask), std::move(ms.witness)});
    }
    std::sort(cands.begin(), cands.end(), [](const ColorCandidate& a, const ColorCandidate& b) {
        return Bitset::sequence_less(a.mask, b.mask);
    });
    return cands;
}

// Exact search for at most `k` candidates covering the whole edge set.
// Branches on the lowest uncovered edge over the candidates containing it;
// candidates are tried largest first. Already-chosen candidates never
// reappear because they cannot contain an uncovered edge.
class CoverSearch {
public:
    CoverSearch(const Graph& lg, const std::vector<ColorCandidate>& cands,
                std::uint64_t node_budget = 0)
        : lg_(&lg), budget_(node_budget) {
        order_.resize(cands.size());
        for (std::size_t i = 0; i < cands.size(); ++i) order_[i] = int(i);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return cands[a].mask.count() > cands[b].mask.count();
        });
        cands_ = &cands;
        by_edge_.assign(lg.edge_count(), {});
        for (int rank = 0; rank < int(order_.size()); ++rank)
            cands[order_[rank]].mask.for_each([&](int e) { by_edge_[e].push_back(rank); });
        max_size_ = 0;
        for (const auto& c : cands) max_size_ = std::max(max_size_, c.mask.count());
    }

    std::uint64_t nodes() const { return nodes_; }

    // Candidate index sequence (into the original list) or nothing.
    std::optional<std::vector<int>> find(int k) {
        chosen_.clear();
        Bitset covered(lg_->edge_count());
        if (dfs(covered, k)) {
            std::vector<int> picked;
            for (int rank : chosen_) picked.push_back(order_[rank]);
            return picked;
        }
        return std::nullopt;
    }

private:
    bool dfs(const Bitset& covered, int remaining) {
        ++nodes_;
        if (budget_ && nodes_ > budget_)
            throw std::runtime_error("cover search: node budget exceeded");
        Bitset uncovered(lg_->edge_count());
        uncovered.set_all();
        uncovered.subtract(covered);
        int miss = uncovered.count();
        if (miss == 0) return true;
        if (remaining <= 0) return false;
        if (std::int64_t(remaining) * max_size_ < miss) return false;
        int e = uncovered.find_first();
        for (int rank : by_edge_[e]) {
            chosen_.push_back(rank);
            Bitset next = covered;
            next |= (*cands_)[order_[rank]].mask;
            if (dfs(next, remaining - 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const Graph* lg_;
    const std::vector<ColorCandidate>* cands_ = nullptr;
    std::vector<int> order_;                // candidate indices, largest first
    std::vector<std::vector<int>> by_edge_; // ranks of candidates containing each edge
    int max_size_ = 0;
    std::vector<int> chosen_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = 0;
};

inline Cover cover_from_candidates(const Graph& lg, const std::vector<ColorCandidate>& cands,
                                   const std::vector<int>& picked) {
    Cover cover;
    cover.vertices = lg.vertex_count();
    for (int idx : picked) {
        CoverColor color;
        cands[idx].mask.for_each([&](int e) { color.edges.push_back(lg.edge_at(e)); });
        color.witness = cands[idx].witness;
        cover.colors.push_back(std::move(color));
    }
    return cover;
}

}  // namespace detail

// Nonnegative weights on line-graph vertex pairs; unspecified pairs weigh 1.
class WeightMap {
public:
    void set(int u, int v, double w) {
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
        weights_[make_edge(u, v)] = w;
    }
    double get(int u, int v) const {
        auto it = weights_.find(make_edge(u, v));
        return it == weights_.end() ? 1.0 : it->second;
    }
    bool empty() const { return weights_.empty(); }

private:
    std::map<Edge, double> weights_;
};

// One interval completion of the complement of L(g): the added edges turn
// co-L(g) into an interval graph, equivalently E(L(g)) minus the added set
// spans an interval-order graph, certified by `witness`.
struct Completion {
    std::vector<Edge> added_edges;  // over the line vertices of g
    Ordering witness;
    double weight = 0;
};

// All inclusion-wise minimal interval completions of the complement of L(g),
// each weighted by its added-edge count. Deterministically ordered by
// (size, added edge list).
inline std::vector<Completion> minimal_interval_completions(const Graph& g) {
    LineGraphMap lgm_g = line_graph(g);
    std::vector<Completion> out;
    for (const auto& cand : detail::color_candidates(lgm_g)) {
        Completion c;
        for (int idx = 0; idx < lgm_g.lg.edge_count(); ++idx)
            if (!cand.mask.test(idx)) c.added_edges.push_back(lgm_g.lg.edge_at(idx));
        c.witness = cand.witness;
        c.weight = double(c.added_edges.size());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const Completion& a, const Completion& b) {
        if (a.added_edges.size() != b.added_edges.size())
            return a.added_edges.size() < b.added_edges.size();
        return a.added_edges < b.added_edges;
    });
    return out;
}

// The minimum-weight completion; ties go to the canonically first one.
inline Completion min_completion(const Graph& g, const WeightMap& w = {}) {
    std::vector<Completion> all = minimal_interval_completions(g);
    const Completion* best = nullptr;
    double best_weight = 0;
    for (auto& c : all) {
        double total = 0;
        for (const Edge& e : c.added_edges) total += w.get(e.u, e.v);
        if (!best || total < best_weight) {
            best = &c;
            best_weight = total;
        }
    }
    if (!best) throw std::logic_error("no completion candidates");
    Completion out = *best;
    out.weight = best_weight;
    return out;
}

// Exact decision: can E(L(g)) be covered by at most k interval-order edge
// sets? Returns a verified cover on success.
inline std::optional<Cover> boxicity_le_k(const Graph& g, int k, std::uint64_t node_budget = 0) {
    if (k < 0) return std::nullopt;
    LineGraphMap lgm_g = line_graph(g);
    std::vector<detail::ColorCandidate> cands = detail::color_candidates(lgm_g);
    detail::CoverSearch search(lgm_g.lg, cands, node_budget);
    auto picked = search.find(k);
    if (!picked) return std::nullopt;
    return detail::cover_from_candidates(lgm_g.lg, cands, *picked);
}

struct BoxicityResult {
    std::optional<int> boxicity;  // empty when every k <= max_k failed
    int max_k = 0;
    Cover cover;                  // certificate for the reported value
};

// Boxicity of the complement of L(g): smallest k admitting a k-cover of
// E(L(g)). The default bound n-2 always suffices.
inline BoxicityResult boxicity_co_line(const Graph& g, int max_k = -1,
                                       std::uint64_t node_budget = 0) {
    LineGraphMap lgm_g = line_graph(g);
    if (max_k < 0) max_k = std::max(g.vertex_count() - 2, lgm_g.lg.vertex_count() / 2 + 1);
    std::vector<detail::ColorCandidate> cands = detail::color_candidates(lgm_g);
    for (int k = 0; k <= max_k; ++k) {
        detail::CoverSearch search(lgm_g.lg, cands, node_budget);
        auto picked = search.find(k);
        if (picked)
            return BoxicityResult{k, max_k, detail::cover_from_candidates(lgm_g.lg, cands, *picked)};
    }
    return BoxicityResult{std::nullopt, max_k, Cover{lgm_g.lg.vertex_count(), {}}};
}

// Boxicity of an arbitrary small graph h via the maximal interval-order
// subgraphs of its complement. The cover lives on complement(h).
inline BoxicityResult boxicity_bruteforce(const Graph& h, int max_k = -1,
                                          const EnumOptions& opts = {}) {
    Graph co = complement(h);
    if (max_k < 0) max_k = h.vertex_count() / 2 + 1;
    std::vector<detail::ColorCandidate> cands;
    for (auto& ms : maximal_interval_order_subgraphs_bruteforce(co, opts))
        cands.push_back(detail::ColorCandidate{std::move(ms.edge_mask), std::move(ms.witness)});
    for (int k = 0; k <= max_k; ++k) {
        detail::CoverSearch search(co, cands, 0);
        auto picked = search.find(k);
        if (picked)
            return BoxicityResult{k, max_k, detail::cover_from_candidates(co, cands, *picked)};
    }
    return BoxicityResult{std::nullopt, max_k, Cover{co.vertex_count(), {}}};
}

}  // namespace boxkit
