#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "boxkit/cli.hpp"

using namespace boxkit;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return RunResult{code, out.str(), err.str()};
}

// Scratch directory shared by the suite; file contents are tiny.
std::filesystem::path scratch() {
    auto dir = std::filesystem::temp_directory_path() / "boxkit_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    auto path = scratch() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen emits parseable canonical edge lists") {
    RunResult r = run_cli({"gen", "kneser", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 6) == "10 15\n");
    CHECK(parse_edge_list(r.out) == kneser_n2(5));

    RunResult k7 = run_cli({"gen", "complete", "7"});
    CHECK(k7.code == 0);
    CHECK(parse_edge_list(k7.out) == complete_graph(7));

    std::string path = write_file("k4.graph", format_edge_list(complete_graph(4)));
    RunResult lg = run_cli({"gen", "line-graph", path});
    CHECK(parse_edge_list(lg.out) == line_graph(complete_graph(4)).lg);
    RunResult co = run_cli({"gen", "complement", path});
    CHECK(parse_edge_list(co.out) == complement(complete_graph(4)));

    RunResult dot = run_cli({"gen", "complete", "3", "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph G {") == 0);
    CHECK(dot.out.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("gen rejects bad input") {
    CHECK(run_cli({"gen", "kneser", "4"}).code == 2);
    CHECK(run_cli({"gen", "kneser", "five"}).code == 2);
    CHECK(run_cli({"gen", "moebius", "5"}).code == 2);
    CHECK(run_cli({"gen", "line-graph", "/nonexistent/input.graph"}).code == 2);
    std::string bad = write_file("bad.graph", "2 1\n1 0\n");
    CHECK(run_cli({"gen", "complement", bad}).code == 2);
}

TEST_CASE("unknown subcommand and help") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    RunResult help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("boxicity") != std::string::npos);
}

TEST_CASE("catalog summary") {
    RunResult r = run_cli({"catalog", "5", "--summary"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["type"] == "catalog-summary");
    CHECK(doc["total"] == 360);
    CHECK(doc["families"]["a"] == 60);
    CHECK(doc["families"]["b"] == 60);
    CHECK(doc["families"]["c"] == 120);
    CHECK(doc["families"]["c'"] == 120);
    CHECK(doc["sizes"]["14"] == 60);
    CHECK(doc["sizes"]["15"] == 240);
    CHECK(doc["sizes"]["16"] == 60);

    RunResult full = run_cli({"catalog", "5"});
    REQUIRE(full.code == 0);
    json entries = json::parse(full.out);
    CHECK(entries.is_array());
    CHECK(entries.size() == 360);
    CHECK(entries[0].contains("family"));
    CHECK(entries[0].contains("tuple"));
    CHECK(entries[0].contains("edges"));
    CHECK(entries[0].contains("witness"));

    CHECK(run_cli({"catalog", "4"}).code == 2);
}

TEST_CASE("complete command") {
    std::string k5 = write_file("k5.graph", format_edge_list(complete_graph(5)));
    RunResult r = run_cli({"complete", k5});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["format"] == "boxkit/1");
    CHECK(doc["type"] == "completion");
    CHECK(doc["added_edges"].size() == 14);
    CHECK(doc["weight"] == 14.0);

    // zero weights on one completion's added edges steer the minimum there
    std::ostringstream weights;
    for (const json& e : doc["added_edges"])
        weights << e[0].get<int>() << ' ' << e[1].get<int>() << " 0\n";
    std::string wfile = write_file("k5.weights", weights.str());
    RunResult weighted = run_cli({"complete", k5, "--weights", wfile});
    REQUIRE(weighted.code == 0);
    CHECK(json::parse(weighted.out)["weight"] == 0.0);

    std::string badw = write_file("bad.weights", "0 1 -2\n");
    CHECK(run_cli({"complete", k5, "--weights", badw}).code == 2);

    RunResult human = run_cli({"complete", k5, "--format", "human"});
    CHECK(human.out.find("14 added edges") != std::string::npos);
}

TEST_CASE("boxicity command") {
    std::string k5 = write_file("k5b.graph", format_edge_list(complete_graph(5)));
    RunResult r = run_cli({"boxicity", k5});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["mode"] == "co-line");
    CHECK(doc["boxicity"] == 3);
    CHECK(doc["cover"]["colors"].size() == 3);

    RunResult capped = run_cli({"boxicity", k5, "--max-k", "2"});
    CHECK(capped.code == 1);
    CHECK(json::parse(capped.out)["boxicity"].is_null());

    std::string petersen = write_file("petersen.graph", format_edge_list(kneser_n2(5)));
    RunResult bf = run_cli({"boxicity", petersen, "--bruteforce"});
    REQUIRE(bf.code == 0);
    CHECK(json::parse(bf.out)["boxicity"] == 3);
    CHECK(json::parse(bf.out)["mode"] == "bruteforce");

    // deterministic across thread counts
    RunResult t1 = run_cli({"--threads", "1", "boxicity", petersen, "--bruteforce"});
    RunResult t2 = run_cli({"--threads", "2", "boxicity", petersen, "--bruteforce"});
    CHECK(t1.out == t2.out);

    RunResult dot = run_cli({"boxicity", k5, "--format", "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("graph cover {") == 0);
}

TEST_CASE("kneser command") {
    RunResult r = run_cli({"kneser", "5"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["n"] == 5);
    CHECK(doc["boxicity"] == 3);
    CHECK(doc["lower_bound_mode"] == "exhaustive");
    CHECK(doc["refutation"]["cover_found"] == false);
    CHECK(doc["upper_cover"]["colors"].size() == 3);

    RunResult seven = run_cli({"kneser", "7"});
    json seven_doc = json::parse(seven.out);
    CHECK(seven_doc["boxicity"] == 5);
    CHECK(seven_doc["lower_bound_mode"] == "counting");
    CHECK(seven_doc["refutation"].is_null());

    CHECK(run_cli({"kneser", "4"}).code == 2);
    // a tiny budget aborts the forced refutation
    CHECK(run_cli({"kneser", "5", "--full-refute", "--budget", "3"}).code == 2);
}

TEST_CASE("verify command round-trips covers") {
    // the covered graph is L(K_5) itself
    RunResult lk5_text = run_cli({"gen", "line-graph",
                                  write_file("k5c.graph", format_edge_list(complete_graph(5)))});
    std::string lk5 = write_file("lk5.graph", lk5_text.out);

    KneserResult kr = kneser_boxicity(5);
    std::string good = write_file("good_cover.json", cover_to_json(kr.upper_cover).dump());
    RunResult ok = run_cli({"verify", lk5, good});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("cover verified") != std::string::npos);

    // drop one whole color: some edge must go uncovered
    Cover broken = kr.upper_cover;
    broken.colors.pop_back();
    std::string bad = write_file("bad_cover.json", cover_to_json(broken).dump());
    RunResult rejected = run_cli({"verify", lk5, bad});
    CHECK(rejected.code == 1);
    CHECK(rejected.out.find("not covered") != std::string::npos);

    // malformed JSON and malformed certificates are usage errors
    std::string garbage = write_file("garbage.json", "{not json");
    CHECK(run_cli({"verify", lk5, garbage}).code == 2);
    Cover out_of_range = kr.upper_cover;
    out_of_range.colors[0].witness.push_back(42);
    std::string malformed = write_file("malformed_cover.json",
                                       cover_to_json(out_of_range).dump());
    CHECK(run_cli({"verify", lk5, malformed}).code == 2);
}

TEST_CASE("intervals command") {
    // C_4 with its valid ordering
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    std::string graph = write_file("c4.graph", format_edge_list(c4));
    std::string good = write_file("c4_order.json", "[0, 2, 1, 3]");
    RunResult ok = run_cli({"intervals", graph, good});
    REQUIRE(ok.code == 0);
    json model = json::parse(ok.out);
    CHECK(model.size() == 4);
    IntervalModel m;
    for (const json& pair : model) m.intervals.push_back({pair[0].get<int>(), pair[1].get<int>()});
    CHECK(disjointness_graph(m) == c4);

    std::string bad = write_file("c4_bad_order.json", "[0, 1, 2, 3]");
    RunResult rejected = run_cli({"intervals", graph, bad});
    CHECK(rejected.code == 1);
    CHECK(rejected.out.find("chain property") != std::string::npos);

    // a witness prefix is completed with the remaining vertices
    std::string prefix = write_file("c4_prefix.json", "[0, 2]");
    CHECK(run_cli({"intervals", graph, prefix}).code == 0);
}

TEST_CASE("outputs are byte-identical across runs") {
    std::string k5 = write_file("k5d.graph", format_edge_list(complete_graph(5)));
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"catalog", "5", "--summary"},
          std::vector<std::string>{"boxicity", k5},
          std::vector<std::string>{"kneser", "6"},
          std::vector<std::string>{"complete", k5}}) {
        RunResult a = run_cli(args);
        RunResult b = run_cli(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
}

}  // TEST_SUITE
