#include <doctest.h>

#include <random>
#include <sstream>

#include "boxkit/graph.hpp"

using namespace boxkit;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

long long choose2(long long k) { return k * (k - 1) / 2; }

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("complete graphs") {
    CHECK(complete_graph(0).edge_count() == 0);
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_graph(7).edge_count() == 21);
    CHECK(max_degree(complete_graph(5)) == 4);
}

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    // unsorted input is normalized
    Graph g(3, {{2, 1}, {1, 0}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(g.edge_index(2, 1) == 1);
}

TEST_CASE("line graph of complete graphs") {
    LineGraphMap l5 = line_graph(complete_graph(5));
    CHECK(l5.lg.vertex_count() == 10);
    CHECK(l5.lg.edge_count() == 30);
    CHECK(max_degree(l5.lg) == 6);

    LineGraphMap l6 = line_graph(complete_graph(6));
    CHECK(l6.lg.vertex_count() == 15);
    CHECK(l6.lg.edge_count() == 60);

    // bijection between base edges and line vertices
    for (int i = 0; i < l5.lg.vertex_count(); ++i) {
        Edge e = l5.from_lg(i);
        CHECK(l5.to_lg(e.u, e.v) == i);
    }
}

TEST_CASE("line graph of a path") {
    Graph path(3, {{0, 1}, {1, 2}});
    LineGraphMap lg = line_graph(path);
    CHECK(lg.lg.vertex_count() == 2);
    CHECK(lg.lg.edge_count() == 1);
}

TEST_CASE("line graph edge count equals sum of C(deg,2)") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(8, 0.4, rng);
        long long expect = 0;
        for (int v = 0; v < g.vertex_count(); ++v) expect += choose2(g.degree(v));
        CHECK(line_graph(g).lg.edge_count() == expect);
    }
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(6)).edge_count() == 0);
    Graph petersen = complement(line_graph(complete_graph(5)).lg);
    CHECK(petersen.vertex_count() == 10);
    CHECK(petersen.edge_count() == 15);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(7, 0.5, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("kneser graphs") {
    Graph p = kneser_n2(5);
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);

    // lexicographic pair ranks: {0,1} = 0, {1,2} = 4, {2,3} = 7
    CHECK(p.has_edge(0, 7));       // disjoint pairs
    CHECK_FALSE(p.has_edge(0, 4)); // pairs sharing vertex 1

    CHECK_THROWS_AS(kneser_n2(4), std::invalid_argument);

    for (int n = 5; n <= 9; ++n) {
        Graph k = kneser_n2(n);
        CHECK(k == complement(line_graph(complete_graph(n)).lg));
        for (int v = 0; v < k.vertex_count(); ++v)
            CHECK(k.degree(v) == choose2(n - 2));
    }
}

TEST_CASE("induced subgraphs") {
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    std::vector<int> all{0, 1, 2, 3, 4};
    CHECK(induced_subgraph(c5, all).graph == c5);

    CHECK(induced_subgraph(c5, std::vector<int>{}).graph.vertex_count() == 0);

    std::vector<int> run{1, 2, 3};
    InducedSubgraph sub = induced_subgraph(c5, run);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.vertices == run);

    std::vector<int> bad{1, 7};
    CHECK_THROWS_AS(induced_subgraph(c5, bad), std::invalid_argument);

    // commutes with complementation
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(7, 0.5, rng);
        std::vector<int> s{0, 2, 3, 6};
        CHECK(complement(induced_subgraph(g, s).graph) ==
              induced_subgraph(complement(g), s).graph);
    }
}

TEST_CASE("max degree of edgeless graph") {
    CHECK(max_degree(Graph(3, {})) == 0);
}

TEST_CASE("edge list round trip") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(9, 0.3, rng);
        CHECK(parse_edge_list(format_edge_list(g)) == g);
    }
    CHECK(parse_edge_list("0 0\n").vertex_count() == 0);
}

TEST_CASE("edge list format errors") {
    CHECK_THROWS_AS(parse_edge_list(""), FormatError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n"), FormatError);            // missing edge
    CHECK_THROWS_AS(parse_edge_list("2 1\n1 0\n"), FormatError);       // u >= v
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 2\n"), FormatError);       // out of range
    CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n0 1\n"), FormatError);  // not ascending
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n0 2\n"), FormatError);  // extra edge
}

}  // TEST_SUITE
