#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "boxkit/json_io.hpp"

// Command-line surface. Exit codes: 0 = success / verified true,
// 1 = verified false or refuted (bad cover, boxicity above the bound,
// ordering failing the chain check), 2 = usage or input format errors.

namespace boxkit {
namespace cli {

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open graph file: " + path);
    return parse_edge_list(in);
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

// Weight files: one "u v w" line per weighted line-vertex pair; pairs not
// listed weigh 1.
inline WeightMap load_weights(const std::string& path, int line_vertices) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open weight file: " + path);
    WeightMap weights;
    long long u, v;
    double w;
    std::set<std::pair<int, int>> seen;
    while (in >> u >> v >> w) {
        if (u < 0 || v < 0 || u >= line_vertices || v >= line_vertices || u == v)
            throw FormatError("weight file: bad vertex pair");
        if (w < 0) throw FormatError("weight file: negative weight");
        std::pair<int, int> key{int(std::min(u, v)), int(std::max(u, v))};
        if (!seen.insert(key).second) throw FormatError("weight file: repeated pair");
        weights.set(int(u), int(v), w);
    }
    if (!in.eof()) throw FormatError("weight file: expected 'u v w' lines");
    return weights;
}

inline std::string graph_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string cover_dot(const Graph& lg, const Cover& cover) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                    "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62"};
    std::map<Edge, std::vector<int>> colors_of;
    for (int c = 0; c < int(cover.colors.size()); ++c)
        for (const Edge& e : cover.colors[c].edges) colors_of[make_edge(e.u, e.v)].push_back(c);
    std::ostringstream out;
    out << "graph cover {\n";
    for (int v = 0; v < lg.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : lg.edges()) {
        out << "  " << e.u << " -- " << e.v;
        auto it = colors_of.find(e);
        if (it != colors_of.end()) {
            out << " [label=\"";
            for (std::size_t i = 0; i < it->second.size(); ++i) {
                if (i) out << ',';
                out << it->second[i];
            }
            out << "\", color=\"" << palette[it->second.front() % 10] << "\"]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

namespace detail {

struct GenArgs {
    std::string kind;
    std::string value;
    std::string format = "edgelist";
};

inline int parse_positive_int(const std::string& text, const char* what) {
    try {
        std::size_t pos = 0;
        int value = std::stoi(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(what);
        return value;
    } catch (const std::exception&) {
        throw FormatError(std::string(what) + ": expected an integer, got '" + text + "'");
    }
}

inline int run_gen(const GenArgs& args, std::ostream& out) {
    Graph g;
    if (args.kind == "complete") {
        g = complete_graph(parse_positive_int(args.value, "gen complete"));
    } else if (args.kind == "kneser") {
        g = kneser_n2(parse_positive_int(args.value, "gen kneser"));
    } else if (args.kind == "line-graph") {
        g = line_graph(load_graph(args.value)).lg;
    } else if (args.kind == "complement") {
        g = complement(load_graph(args.value));
    } else {
        throw FormatError("gen: unknown kind '" + args.kind +
                          "' (expected complete|kneser|line-graph|complement)");
    }
    if (args.format == "dot")
        out << graph_dot(g);
    else
        write_edge_list(g, out);
    return 0;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"interval-order subgraphs, interval completions, and boxicity "
                 "of complements of line graphs"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker cap for brute-force searches")
        ->envname("BOXKIT_THREADS");

    detail::GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "emit a graph in edge-list format");
    gen->add_option("kind", gen_args.kind, "complete | kneser | line-graph | complement")
        ->required();
    gen->add_option("value", gen_args.value, "vertex count or input graph file")->required();
    gen->add_option("--format", gen_args.format, "edgelist | dot")
        ->check(CLI::IsMember({"edgelist", "dot"}));

    int catalog_n = 0;
    bool catalog_summary = false;
    auto* catalog_cmd = app.add_subcommand("catalog",
                                           "maximal interval-order subgraphs of L(K_n)");
    catalog_cmd->add_option("n", catalog_n, "base vertex count (>= 5)")->required();
    catalog_cmd->add_flag("--summary", catalog_summary, "per-family counts and size histogram");

    std::string complete_file, weights_file, complete_format = "json";
    auto* complete_cmd =
        app.add_subcommand("complete", "minimum interval completion of the complement of L(G)");
    complete_cmd->add_option("graph", complete_file, "base graph edge-list file")->required();
    complete_cmd->add_option("--weights", weights_file, "weight file with 'u v w' lines");
    complete_cmd->add_option("--format", complete_format, "json | human")
        ->check(CLI::IsMember({"json", "human"}));

    std::string box_file, box_format = "json";
    int box_max_k = -1;
    bool box_co_line = false, box_bruteforce = false;
    int box_bound = 10;
    std::uint64_t box_budget = 0;
    auto* box_cmd = app.add_subcommand("boxicity", "boxicity via interval-order covers");
    box_cmd->add_option("graph", box_file, "graph edge-list file")->required();
    box_cmd->add_option("--max-k", box_max_k, "largest k to try");
    auto* co_flag = box_cmd->add_flag("--co-line", box_co_line,
                                      "input is the base graph G; compute boxicity of co-L(G) "
                                      "(default)");
    box_cmd->add_flag("--bruteforce", box_bruteforce,
                      "input is the graph itself; exhaustive small-graph search")
        ->excludes(co_flag);
    box_cmd->add_option("--bound", box_bound, "vertex limit for the brute-force search");
    box_cmd->add_option("--budget", box_budget, "node budget for the cover search (0 = off)");
    box_cmd->add_option("--format", box_format, "json | human | dot")
        ->check(CLI::IsMember({"json", "human", "dot"}));

    int kneser_n = 0;
    bool kneser_refute = false;
    std::uint64_t kneser_budget = 0;
    std::string kneser_format = "json";
    auto* kneser_cmd = app.add_subcommand("kneser", "boxicity of the Kneser graph KG(n,2)");
    kneser_cmd->add_option("n", kneser_n, "n >= 5")->required();
    kneser_cmd->add_flag("--full-refute", kneser_refute,
                         "exhaustively refute (n-3)-covers for any n");
    kneser_cmd->add_option("--budget", kneser_budget, "node budget for the refutation (0 = off)");
    kneser_cmd->add_option("--format", kneser_format, "json | human | dot")
        ->check(CLI::IsMember({"json", "human", "dot"}));

    std::string verify_graph, verify_cover_file;
    auto* verify_cmd = app.add_subcommand("verify", "check a cover certificate against a graph");
    verify_cmd->add_option("graph", verify_graph, "graph edge-list file (the covered graph)")
        ->required();
    verify_cmd->add_option("cover", verify_cover_file, "cover JSON file")->required();

    std::string intervals_graph, intervals_ordering;
    auto* intervals_cmd =
        app.add_subcommand("intervals", "interval model of a graph under an ordering");
    intervals_cmd->add_option("graph", intervals_graph, "graph edge-list file")->required();
    intervals_cmd->add_option("ordering", intervals_ordering, "ordering JSON file")->required();

    std::vector<const char*> argv;
    argv.push_back("boxkit");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(gen)) return detail::run_gen(gen_args, out);

        if (app.got_subcommand(catalog_cmd)) {
            LineContext ctx(catalog_n);
            std::vector<CatalogEntry> catalog = enumerate_catalog(ctx);
            if (catalog_summary) {
                json families, sizes;
                for (Family f : {Family::A, Family::B, Family::C, Family::CPrime}) {
                    int count = 0;
                    for (const auto& entry : catalog)
                        if (entry.family == f) ++count;
                    families[family_name(f)] = count;
                }
                std::map<int, int> histogram;
                for (const auto& entry : catalog) ++histogram[entry.size()];
                for (auto [size, count] : histogram) sizes[std::to_string(size)] = count;
                json doc;
                doc["format"] = "boxkit/1";
                doc["type"] = "catalog-summary";
                doc["n"] = catalog_n;
                doc["total"] = catalog.size();
                doc["families"] = std::move(families);
                doc["sizes"] = std::move(sizes);
                out << doc.dump(2) << '\n';
            } else {
                out << catalog_to_json(ctx, catalog).dump(2) << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(complete_cmd)) {
            Graph g = load_graph(complete_file);
            LineGraphMap lgm = line_graph(g);
            WeightMap weights;
            if (!weights_file.empty())
                weights = load_weights(weights_file, lgm.lg.vertex_count());
            Completion best = min_completion(g, weights);
            if (complete_format == "human") {
                out << "minimum completion of co-L(G): " << best.added_edges.size()
                    << " added edges, weight " << best.weight << '\n';
            } else {
                out << completion_to_json(best, lgm.lg.vertex_count()).dump(2) << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(box_cmd)) {
            Graph g = load_graph(box_file);
            BoxicityResult result;
            Graph host;  // graph the cover certificate lives on
            const char* mode = nullptr;
            if (box_bruteforce) {
                mode = "bruteforce";
                EnumOptions opts{std::max(box_bound, 1), threads};
                result = boxicity_bruteforce(g, box_max_k, opts);
                host = complement(g);
            } else {
                mode = "co-line";
                result = boxicity_co_line(g, box_max_k, box_budget);
                host = line_graph(g).lg;
            }
            if (box_format == "human") {
                if (result.boxicity)
                    out << "boxicity " << *result.boxicity << " (" << mode << ", "
                        << result.cover.colors.size() << " colors)\n";
                else
                    out << "boxicity exceeds max-k " << result.max_k << " (" << mode << ")\n";
            } else if (box_format == "dot") {
                out << cover_dot(host, result.cover);
            } else {
                json doc;
                doc["format"] = "boxkit/1";
                doc["type"] = "boxicity";
                doc["mode"] = mode;
                doc["boxicity"] = result.boxicity ? json(*result.boxicity) : json(nullptr);
                doc["max_k"] = result.max_k;
                doc["cover"] = cover_to_json(result.cover);
                out << doc.dump(2) << '\n';
            }
            return result.boxicity ? 0 : 1;
        }

        if (app.got_subcommand(kneser_cmd)) {
            KneserResult result = kneser_boxicity(kneser_n, kneser_refute, kneser_budget);
            if (kneser_format == "human") {
                out << "boxicity of KG(" << kneser_n << ",2) = " << result.boxicity
                    << " (lower bound: "
                    << (result.lower_bound_mode == LowerBoundMode::exhaustive ? "exhaustive"
                                                                              : "counting")
                    << ", cover: " << result.upper_cover.colors.size() << " colors)\n";
            } else if (kneser_format == "dot") {
                LineContext ctx(kneser_n);
                out << cover_dot(ctx.lg(), result.upper_cover);
            } else {
                out << kneser_result_to_json(result).dump(2) << '\n';
            }
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            Graph lg = load_graph(verify_graph);
            Cover cover = cover_from_json(load_json(verify_cover_file));
            VerifyResult result = verify_cover(lg, cover);
            if (result.ok) {
                out << "cover verified: " << cover.colors.size() << " colors over "
                    << lg.edge_count() << " edges\n";
                return 0;
            }
            out << "cover rejected: " << result.diagnostic << '\n';
            return 1;
        }

        if (app.got_subcommand(intervals_cmd)) {
            Graph g = load_graph(intervals_graph);
            Ordering order = ordering_from_json(load_json(intervals_ordering));
            if (int(order.size()) != g.vertex_count())
                order = complete_ordering(g, order);
            ChainCheckResult chk = check_chain_property(g, order);
            if (!chk.ok) {
                out << "ordering fails the chain property at positions (" << chk.i << "," << chk.j
                    << ") with vertex " << chk.x << '\n';
                return 1;
            }
            out << intervals_to_json(intervals_from_ordering(g, order)).dump() << '\n';
            return 0;
        }
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace cli
}  // namespace boxkit
