#pragma once

#include <json.hpp>

#include "boxkit/kneser.hpp"

// JSON forms of the certificate types. Every document carries
// "format": "boxkit/1"; orderings are arrays of vertex indices, edge sets
// arrays of [u,v] pairs, interval models arrays of [lo,hi] pairs.

namespace boxkit {

using json = nlohmann::ordered_json;

inline json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const Edge& e : edges) out.push_back(json::array({e.u, e.v}));
    return out;
}

inline std::vector<Edge> edges_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("expected an array of edges");
    std::vector<Edge> out;
    for (const json& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
            !item[1].is_number_integer())
            throw FormatError("edge entries must be [u, v] integer pairs");
        out.push_back(Edge{item[0].get<int>(), item[1].get<int>()});
    }
    return out;
}

inline Ordering ordering_from_json(const json& j) {
    if (!j.is_array()) throw FormatError("expected an array of vertex indices");
    Ordering out;
    for (const json& item : j) {
        if (!item.is_number_integer()) throw FormatError("ordering entries must be integers");
        out.push_back(item.get<int>());
    }
    return out;
}

inline json cover_to_json(const Cover& cover) {
    json colors = json::array();
    for (const CoverColor& color : cover.colors) {
        json c;
        c["edges"] = edges_to_json(color.edges);
        c["witness"] = color.witness;
        colors.push_back(std::move(c));
    }
    json out;
    out["format"] = "boxkit/1";
    out["type"] = "cover";
    out["vertices"] = cover.vertices;
    out["colors"] = std::move(colors);
    return out;
}

inline Cover cover_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("colors"))
        throw FormatError("cover: expected an object with 'vertices' and 'colors'");
    if (j.contains("format") && j["format"] != "boxkit/1")
        throw FormatError("cover: unsupported format tag");
    Cover out;
    if (!j["vertices"].is_number_integer()) throw FormatError("cover: 'vertices' must be an integer");
    out.vertices = j["vertices"].get<int>();
    if (!j["colors"].is_array()) throw FormatError("cover: 'colors' must be an array");
    for (const json& c : j["colors"]) {
        if (!c.is_object() || !c.contains("edges") || !c.contains("witness"))
            throw FormatError("cover: each color needs 'edges' and 'witness'");
        CoverColor color;
        color.edges = edges_from_json(c["edges"]);
        color.witness = ordering_from_json(c["witness"]);
        out.colors.push_back(std::move(color));
    }
    return out;
}

inline json completion_to_json(const Completion& completion, int line_vertices) {
    json out;
    out["format"] = "boxkit/1";
    out["type"] = "completion";
    out["line_vertices"] = line_vertices;
    out["added_edges"] = edges_to_json(completion.added_edges);
    out["weight"] = completion.weight;
    out["witness"] = completion.witness;
    return out;
}

inline json intervals_to_json(const IntervalModel& model) {
    json out = json::array();
    for (const Interval& iv : model.intervals) out.push_back(json::array({iv.lo, iv.hi}));
    return out;
}

inline json catalog_entry_to_json(const CatalogEntry& entry) {
    json out;
    out["family"] = family_name(entry.family);
    json tuple = json::array();
    for (int v : entry.tuple)
        if (v >= 0) tuple.push_back(v);
    out["tuple"] = std::move(tuple);
    out["size"] = entry.size();
    json edges = json::array();
    entry.edges.for_each([&](int idx) { edges.push_back(idx); });
    out["edges"] = std::move(edges);
    out["witness"] = entry.witness;
    return out;
}

// Catalog entries keep their edges as line-graph edge indices internally;
// the JSON form spells them out as [u,v] line-vertex pairs.
inline json catalog_to_json(const LineContext& ctx, const std::vector<CatalogEntry>& catalog) {
    json out = json::array();
    for (const CatalogEntry& entry : catalog) {
        json e = catalog_entry_to_json(entry);
        std::vector<Edge> edges;
        entry.edges.for_each([&](int idx) { edges.push_back(ctx.lg().edge_at(idx)); });
        e["edges"] = edges_to_json(edges);
        out.push_back(std::move(e));
    }
    return out;
}

inline json refutation_to_json(const RefutationReport& report) {
    json out;
    out["k"] = report.k;
    out["cover_found"] = report.cover_found;
    out["nodes"] = report.nodes;
    out["candidates"] = report.candidates;
    return out;
}

inline json kneser_result_to_json(const KneserResult& result) {
    json out;
    out["format"] = "boxkit/1";
    out["type"] = "kneser";
    out["n"] = result.n;
    out["boxicity"] = result.boxicity;
    out["lower_bound_mode"] =
        result.lower_bound_mode == LowerBoundMode::exhaustive ? "exhaustive" : "counting";
    out["refutation"] = result.refutation ? refutation_to_json(*result.refutation) : json(nullptr);
    out["upper_cover"] = cover_to_json(result.upper_cover);
    return out;
}

}  // namespace boxkit
