#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "boxkit/graph.hpp"

namespace boxkit {

// An interval-order graph (complement of an interval graph) is characterized
// by a vertex ordering whose forward neighborhoods are nested: orienting the
// edges from smaller to larger position, N+(v_i) contains N+(v_j) whenever
// i < j. This header holds the ordering checks, the greedy subgraph
// construction driven by the running frontier V_i = V_{i-1} & N(v_i), an
// integer interval model extracted from an accepted ordering, and pruned
// brute-force searches for small instances.

using Ordering = std::vector<int>;

namespace detail {

inline void check_distinct_vertices(const Graph& g, const Ordering& seq) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : seq) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("ordering: vertex out of range");
        if (seen[v]) throw std::invalid_argument("ordering: repeated vertex");
        seen[v] = 1;
    }
}

}  // namespace detail

// Appends the vertices missing from `seq` in ascending order. Safe on any
// prefix: the appended tail never adds forward edges, so an ordering produced
// by the frontier recursion stays valid however it is completed.
inline Ordering complete_ordering(const Graph& g, const Ordering& seq) {
    detail::check_distinct_vertices(g, seq);
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : seq) seen[v] = 1;
    Ordering full = seq;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!seen[v]) full.push_back(v);
    return full;
}

struct ChainCheckResult {
    bool ok = false;
    // On failure: positions i > j in the ordering and a vertex x that lies in
    // N+(order[i]) but not in N+(order[j]).
    int i = -1;
    int j = -1;
    int x = -1;
    explicit operator bool() const { return ok; }
};

// Verifies the nested-forward-neighborhood condition for a full ordering.
inline ChainCheckResult check_chain_property(const Graph& h, const Ordering& order) {
    if (int(order.size()) != h.vertex_count())
        throw std::invalid_argument("chain check: ordering must be a permutation of V");
    detail::check_distinct_vertices(h, order);
    int n = h.vertex_count();
    // later[p] = vertices placed after position p
    Bitset later(n);
    later.set_all();
    std::vector<Bitset> nplus(n, Bitset(n));
    for (int p = 0; p < n; ++p) {
        later.reset(order[p]);
        nplus[p] = h.neighbors(order[p]);
        nplus[p] &= later;
    }
    // Nestedness of consecutive forward neighborhoods implies the full chain.
    for (int p = 0; p + 1 < n; ++p) {
        if (!nplus[p + 1].is_subset_of(nplus[p])) {
            Bitset diff = nplus[p + 1];
            diff.subtract(nplus[p]);
            return ChainCheckResult{false, p + 1, p, diff.find_first()};
        }
    }
    return ChainCheckResult{true, -1, -1, -1};
}

// Running state of the frontier recursion: after placing the prefix
// v_1..v_i, frontier() is V_i and captured_edges() is E_1 | ... | E_i where
// E_j are the edges from v_j into V_j. The state is terminal once the
// frontier empties; later placements cannot capture anything.
class PrefixState {
public:
    explicit PrefixState(Graph&&) = delete;  // the state refers to the graph
    explicit PrefixState(const Graph& g)
        : g_(&g),
          placed_(g.vertex_count()),
          frontier_(g.vertex_count()),
          captured_(g.edge_count()) {
        frontier_.set_all();
    }

    const Graph& graph() const { return *g_; }
    const Ordering& prefix() const { return prefix_; }
    const Bitset& frontier() const { return frontier_; }
    const Bitset& placed() const { return placed_; }
    const Bitset& captured_edges() const { return captured_; }
    int captured_count() const { return captured_count_; }
    bool terminal() const { return frontier_.none(); }
    bool is_placed(int v) const { return placed_.test(v); }

    void extend(int v) {
        if (v < 0 || v >= g_->vertex_count())
            throw std::invalid_argument("prefix: vertex out of range");
        if (placed_.test(v)) throw std::invalid_argument("prefix: repeated vertex");
        frontier_ &= g_->neighbors(v);
        frontier_.for_each([&](int x) {
            captured_.set(g_->edge_index(v, x));
            ++captured_count_;
        });
        placed_.set(v);
        prefix_.push_back(v);
    }

    Ordering full_ordering() const { return complete_ordering(*g_, prefix_); }

private:
    const Graph* g_;
    Ordering prefix_;
    Bitset placed_;
    Bitset frontier_;
    Bitset captured_;
    int captured_count_ = 0;
};

// Runs the frontier recursion over `seq` (a prefix or a full ordering),
// stopping early once the frontier empties.
PrefixState subgraph_from_ordering(Graph&& g, const Ordering& seq) = delete;
inline PrefixState subgraph_from_ordering(const Graph& g, const Ordering& seq) {
    detail::check_distinct_vertices(g, seq);
    PrefixState st(g);
    for (int v : seq) {
        if (st.terminal()) break;
        st.extend(v);
    }
    return st;
}

// Vertices that any maximal completion of this prefix must take next, in
// arbitrary order: the unplaced v with N(v) containing the whole frontier.
// Appending them leaves the frontier unchanged.
inline Bitset next_mandatory_vertices(const PrefixState& st) {
    const Graph& g = st.graph();
    Bitset out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!st.is_placed(v) && st.frontier().is_subset_of(g.neighbors(v))) out.set(v);
    return out;
}

// When the frontier is a pair {x,y}, a maximal completion first appends every
// unplaced vertex adjacent to both, then commits to x or y: it continues with
// all remaining vertices adjacent only to x, or with all adjacent only to y.
struct TwoWayBranch {
    int x = -1;
    int y = -1;
    std::vector<int> both;    // adjacent to x and y; appended first
    std::vector<int> only_x;  // completion 1 appends these after `both`
    std::vector<int> only_y;  // completion 2 appends these after `both`
};

inline TwoWayBranch two_way_branch(const PrefixState& st) {
    if (st.frontier().count() != 2)
        throw std::invalid_argument("two_way_branch: frontier must have exactly two vertices");
    TwoWayBranch out;
    out.x = st.frontier().find_first();
    st.frontier().for_each([&](int v) { out.y = v; });
    const Graph& g = st.graph();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (st.is_placed(v) || v == out.x || v == out.y) continue;
        bool ax = g.has_edge(v, out.x);
        bool ay = g.has_edge(v, out.y);
        if (ax && ay)
            out.both.push_back(v);
        else if (ax)
            out.only_x.push_back(v);
        else if (ay)
            out.only_y.push_back(v);
    }
    return out;
}

struct Interval {
    int lo = 0;
    int hi = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct IntervalModel {
    std::vector<Interval> intervals;  // indexed by vertex
};

// Integer interval representation extracted from an accepted ordering: the
// vertex at position j (1-based) gets [2e+1, 2j], where e is the last earlier
// position adjacent to it (0 if none). Right endpoints increase with j, and
// under the nesting condition two intervals are disjoint exactly when the
// corresponding vertices are adjacent in h.
inline IntervalModel intervals_from_ordering(const Graph& h, const Ordering& order) {
    ChainCheckResult chk = check_chain_property(h, order);
    if (!chk.ok)
        throw std::invalid_argument("intervals_from_ordering: ordering fails the chain property");
    int n = h.vertex_count();
    IntervalModel model;
    model.intervals.assign(n, Interval{});
    for (int p = 0; p < n; ++p) {
        int e = 0;
        for (int q = 0; q < p; ++q)
            if (h.has_edge(order[q], order[p])) e = q + 1;
        model.intervals[order[p]] = Interval{2 * e + 1, 2 * (p + 1)};
    }
    return model;
}

// Graph on the model's vertices with an edge per disjoint interval pair.
inline Graph disjointness_graph(const IntervalModel& model) {
    int n = int(model.intervals.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const Interval& a = model.intervals[u];
            const Interval& b = model.intervals[v];
            if (a.hi < b.lo || b.hi < a.lo) edges.push_back({u, v});
        }
    return Graph(n, std::move(edges));
}

struct EnumOptions {
    int max_vertices = 10;
    int threads = 1;  // 0 = hardware concurrency
};

struct MaximalSubgraph {
    std::vector<Edge> edges;
    Bitset edge_mask;   // over the host graph's edge indices
    Ordering witness;   // prefix realizing the set through the frontier recursion
};

namespace detail {

// Depth-first enumeration of the candidate maximal edge sets. Two prunings
// keep the tree small: mandatory vertices are appended as a block (their
// relative order changes neither the captured set nor the frontier), and a
// branch only continues through vertices that keep the frontier nonempty.
template <typename Emit>
void enumerate_from(PrefixState st, Emit& emit) {
    for (;;) {
        if (st.terminal()) {
            emit(st);
            return;
        }
        Bitset mandatory = next_mandatory_vertices(st);
        if (mandatory.any()) {
            mandatory.for_each([&](int v) { st.extend(v); });
            continue;
        }
        const Graph& g = st.graph();
        bool branched = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (st.is_placed(v)) continue;
            if (!st.frontier().intersects(g.neighbors(v))) continue;
            branched = true;
            PrefixState child = st;
            child.extend(v);
            enumerate_from(std::move(child), emit);
        }
        if (!branched) emit(st);
        return;
    }
}

struct Candidate {
    Bitset mask;
    Ordering witness;
};

// Deduplicating sink; keeps the first witness per distinct edge set.
class CandidateSet {
public:
    void add(Bitset mask, Ordering witness) {
        std::size_t h = mask.hash();
        auto& bucket = seen_[h];
        for (int idx : bucket)
            if (items_[idx].mask == mask) return;
        bucket.push_back(int(items_.size()));
        items_.push_back(Candidate{std::move(mask), std::move(witness)});
    }
    std::vector<Candidate> take() { return std::move(items_); }

private:
    std::vector<Candidate> items_;
    std::unordered_map<std::size_t, std::vector<int>> seen_;
};

// All candidate sets, deduplicated keeping the first witness in canonical
// branch order. Roots (first-vertex choices) may be spread across workers;
// per-root results are concatenated back in root order, so the output is
// identical for any thread count.
inline std::vector<Candidate> collect_candidates(const Graph& g, int threads) {
    int n = g.vertex_count();
    std::vector<int> roots;
    for (int v = 0; v < n; ++v)
        if (g.neighbors(v).any()) roots.push_back(v);

    auto run_root = [&g](int r) {
        CandidateSet local;
        auto emit = [&](const PrefixState& st) { local.add(st.captured_edges(), st.prefix()); };
        PrefixState st(g);
        st.extend(r);
        enumerate_from(std::move(st), emit);
        return local.take();
    };

    int workers = threads == 0 ? int(std::thread::hardware_concurrency()) : threads;
    workers = std::max(1, std::min<int>(workers, int(roots.size())));

    std::vector<std::vector<Candidate>> per_root(roots.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < roots.size(); ++i) per_root[i] = run_root(roots[i]);
    } else {
        std::vector<std::future<void>> futs;
        for (int w = 0; w < workers; ++w)
            futs.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < roots.size(); i += workers)
                    per_root[i] = run_root(roots[i]);
            }));
        for (auto& f : futs) f.get();
    }

    CandidateSet all;
    for (auto& part : per_root)
        for (auto& cand : part) all.add(std::move(cand.mask), std::move(cand.witness));
    std::vector<Candidate> out = all.take();
    if (out.empty()) {
        // Edgeless graph: the empty set is the unique maximal subgraph.
        out.push_back(Candidate{Bitset(g.edge_count()), {}});
    }
    return out;
}

// Keeps the inclusion-wise maximal sets. Distinct sets of equal size cannot
// contain one another, so only strictly-larger sets are tested.
inline std::vector<Candidate> keep_maximal(std::vector<Candidate> cands) {
    std::vector<int> size(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) size[i] = cands[i].mask.count();
    std::vector<char> dominated(cands.size(), 0);
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = 0; j < cands.size(); ++j)
            if (size[j] > size[i] && cands[i].mask.is_subset_of(cands[j].mask)) {
                dominated[i] = 1;
                break;
            }
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (!dominated[i]) out.push_back(std::move(cands[i]));
    return out;
}

inline std::vector<Candidate> maximal_candidates(const Graph& g, int threads) {
    std::vector<Candidate> out = keep_maximal(collect_candidates(g, threads));
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        return Bitset::sequence_less(a.mask, b.mask);
    });
    return out;
}

}  // namespace detail

// All inclusion-wise maximal interval-order subgraphs of g, each with a
// witness prefix that reproduces its edge set through the frontier recursion.
// Exhaustive over orderings up to the pruning rules; intended for graphs of
// at most opts.max_vertices vertices.
inline std::vector<MaximalSubgraph> maximal_interval_order_subgraphs_bruteforce(
    const Graph& g, const EnumOptions& opts = {}) {
    if (g.vertex_count() > opts.max_vertices)
        throw std::invalid_argument("maximal subgraph enumeration: size bound exceeded");
    std::vector<MaximalSubgraph> out;
    for (auto& cand : detail::maximal_candidates(g, opts.threads)) {
        MaximalSubgraph ms;
        ms.edge_mask = cand.mask;
        cand.mask.for_each([&](int idx) { ms.edges.push_back(g.edge_at(idx)); });
        std::sort(ms.edges.begin(), ms.edges.end());
        ms.witness = std::move(cand.witness);
        out.push_back(std::move(ms));
    }
    return out;
}

// Searches for an ordering that captures every edge of h, i.e. decides
// whether h itself is an interval-order graph. Returns a full ordering
// passing the chain check, or nothing. Prunes placements that lose an edge
// for good: a vertex may only be placed while all its unplaced neighbors sit
// in the frontier.
inline std::optional<Ordering> is_interval_order_bruteforce(const Graph& h,
                                                            const EnumOptions& opts = {}) {
    if (h.vertex_count() > opts.max_vertices)
        throw std::invalid_argument("interval-order recognition: size bound exceeded");
    int target = h.edge_count();
    if (target == 0) return complete_ordering(h, {});

    struct Search {
        const Graph& g;
        int target;
        std::optional<Ordering> found;

        bool loses_edge(const PrefixState& st, int v) const {
            Bitset rest = g.neighbors(v);
            rest.subtract(st.placed());
            rest.subtract(st.frontier());
            return rest.any();
        }

        bool dfs(PrefixState st) {
            for (;;) {
                if (st.captured_count() == target) {
                    found = st.full_ordering();
                    return true;
                }
                if (st.terminal()) return false;
                Bitset mandatory = next_mandatory_vertices(st);
                if (mandatory.any()) {
                    bool lost = false;
                    mandatory.for_each([&](int v) { lost = lost || loses_edge(st, v); });
                    if (lost) return false;
                    mandatory.for_each([&](int v) { st.extend(v); });
                    continue;
                }
                for (int v = 0; v < g.vertex_count(); ++v) {
                    if (st.is_placed(v)) continue;
                    if (!st.frontier().intersects(g.neighbors(v))) continue;
                    if (loses_edge(st, v)) continue;
                    PrefixState child = st;
                    child.extend(v);
                    if (dfs(std::move(child))) return true;
                }
                return false;
            }
        }
    } search{h, target, std::nullopt};

    PrefixState init(h);
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (!h.neighbors(v).any()) continue;
        if (search.loses_edge(init, v)) continue;
        PrefixState st(h);
        st.extend(v);
        if (search.dfs(std::move(st))) return search.found;
    }
    return std::nullopt;
}

}  // namespace boxkit
