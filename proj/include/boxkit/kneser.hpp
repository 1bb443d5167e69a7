#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "boxkit/completion.hpp"

namespace boxkit {

// The boxicity of KG(n,2), the complement of L(K_n), is n-2 for n >= 5. The
// upper bound is an explicit cover by n-2 family-a entries; the lower bound
// is machine-refuted for n <= 6 and follows from exact counting inequalities
// for n >= 7.

// Cover of E(L(K_n)) by n-2 family-a entries: color i uses the clique at
// vertex i plus the stars towards the last two vertices, so colors 0..n-3
// sweep every clique Q_v (the edges at the last two vertices are absorbed
// through the stars). The two free tuple slots take the smallest unused
// vertices.
inline Cover upper_bound_cover(const LineContext& ctx) {
    int n = ctx.n();
    if (n < 5) throw std::invalid_argument("upper_bound_cover requires n >= 5");
    Cover cover;
    cover.vertices = ctx.lg().vertex_count();
    for (int i = 0; i <= n - 3; ++i) {
        int b = n - 2, d = n - 1;
        std::array<int, 2> spare{};
        int found = 0;
        for (int x = 0; x < n && found < 2; ++x)
            if (x != i && x != b && x != d) spare[found++] = x;
        CatalogEntry entry = family_a(ctx, i, b, spare[0], d, spare[1]);
        CoverColor color;
        entry.edges.for_each([&](int idx) { color.edges.push_back(ctx.lg().edge_at(idx)); });
        color.witness = entry.witness;
        cover.colors.push_back(std::move(color));
    }
    return cover;
}

inline Cover upper_bound_cover(int n) {
    LineContext ctx(n);
    return upper_bound_cover(ctx);
}

// Star-union disjointness: (star(a,b) | star(a,c)) meets
// (star(a',b') | star(a',c')) exactly when the vertex triples meet.
// Evaluated by explicit set intersection; the triple criterion is the
// property under test.
inline bool deltas_disjoint(const LineContext& ctx, std::array<int, 3> t1,
                            std::array<int, 3> t2) {
    for (auto& t : {t1, t2})
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
            throw std::invalid_argument("deltas_disjoint: triple vertices must be distinct");
    Bitset left = ctx.star_set(t1[0], t1[1]);
    left |= ctx.star_set(t1[0], t1[2]);
    Bitset right = ctx.star_set(t2[0], t2[1]);
    right |= ctx.star_set(t2[0], t2[2]);
    return !left.intersects(right);
}

inline bool deltas_disjoint(int n, std::array<int, 3> t1, std::array<int, 3> t2) {
    LineContext ctx(n);
    return deltas_disjoint(ctx, t1, t2);
}

struct RefutationReport {
    int n = 0;
    int k = 0;
    bool cover_found = false;
    std::optional<Cover> cover;  // present when one was found
    std::uint64_t nodes = 0;     // search tree nodes visited
    int candidates = 0;          // catalog size after maximality filtering
};

// Exhaustive test whether k catalog entries can cover E(L(K_n)). A negative
// answer certifies that the boxicity of the complement exceeds k. The node
// budget (0 = unlimited) turns runaway searches into an error.
inline RefutationReport refute_cover(int n, int k, std::uint64_t node_budget = 0) {
    LineContext ctx(n);
    std::vector<CatalogEntry> catalog = enumerate_catalog(ctx);
    std::vector<detail::ColorCandidate> cands;
    for (auto& entry : catalog)
        cands.push_back(detail::ColorCandidate{std::move(entry.edges), std::move(entry.witness)});
    detail::CoverSearch search(ctx.lg(), cands, node_budget);
    RefutationReport report;
    report.n = n;
    report.k = k;
    report.candidates = int(cands.size());
    auto picked = search.find(k);
    report.nodes = search.nodes();
    if (picked) {
        report.cover_found = true;
        report.cover = detail::cover_from_candidates(ctx.lg(), cands, *picked);
    }
    return report;
}

// The three exact integer facts behind the n >= 7 lower bound: fewer than
// n-4 quadratic-size colors cannot reach |E(L(K_n))|, and the two possible
// color mixes overshoot the edge count by exactly (n-1)(n-6)/2 and n-6.
struct CountingCheck {
    bool short_cover_falls_short = false;  // (n-5)(n+2)(n-1)/2 + 10(n-2) < n*C(n-1,2)
    bool all_a_surplus = false;            // (n-3)(n+2)(n-1)/2 == n*C(n-1,2) + (n-1)(n-6)/2
    bool one_bc_surplus = false;           // (n-4)(n+2)(n-1)/2 + 5(n-2) == n*C(n-1,2) + n-6
    bool ok() const { return short_cover_falls_short && all_a_surplus && one_bc_surplus; }
};

inline CountingCheck counting_check(int n) {
    if (n < 7) throw std::invalid_argument("counting_check requires n >= 7");
    using ll = long long;
    ll N = n;
    ll edges = N * (N - 1) * (N - 2) / 2;  // n * C(n-1,2)
    ll type_a = (N + 2) * (N - 1) / 2;
    ll type_bc = 5 * (N - 2);
    CountingCheck out;
    out.short_cover_falls_short = (N - 5) * type_a + 2 * type_bc < edges;
    out.all_a_surplus = (N - 3) * type_a == edges + (N - 1) * (N - 6) / 2;
    out.one_bc_surplus = (N - 4) * type_a + type_bc == edges + (N - 6);
    return out;
}

enum class LowerBoundMode { exhaustive, counting };

struct KneserResult {
    int n = 0;
    int boxicity = 0;  // always n - 2
    Cover upper_cover;
    LowerBoundMode lower_bound_mode = LowerBoundMode::exhaustive;
    std::optional<RefutationReport> refutation;  // present in exhaustive mode
};

// Boxicity of KG(n,2): verifies the explicit (n-2)-cover, then establishes
// the lower bound exhaustively (n <= 6) or by the counting identities
// (n >= 7). force_refute runs the exhaustive search regardless of n.
inline KneserResult kneser_boxicity(int n, bool force_refute = false,
                                    std::uint64_t node_budget = 0) {
    if (n < 5) throw std::invalid_argument("kneser_boxicity requires n >= 5");
    LineContext ctx(n);
    KneserResult result;
    result.n = n;
    result.boxicity = n - 2;
    result.upper_cover = upper_bound_cover(ctx);
    VerifyResult check = verify_cover(ctx.lg(), result.upper_cover);
    if (!check.ok) throw std::logic_error("upper bound cover failed verification: " + check.diagnostic);
    if (n <= 6 || force_refute) {
        RefutationReport report = refute_cover(n, n - 3, node_budget);
        if (report.cover_found)
            throw std::logic_error("unexpected (n-3)-cover found for n=" + std::to_string(n));
        result.lower_bound_mode = LowerBoundMode::exhaustive;
        result.refutation = std::move(report);
    } else {
        CountingCheck counts = counting_check(n);
        if (!counts.ok()) throw std::logic_error("counting identities failed");
        result.lower_bound_mode = LowerBoundMode::counting;
    }
    return result;
}

}  // namespace boxkit
