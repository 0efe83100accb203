#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracle.hpp"
#include "treelay/graph_io.hpp"
#include "treelay/multigraph.hpp"

using namespace treelay;

TEST_CASE("complete graph construction") {
    Multigraph k4 = Multigraph::complete(4, 1);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_total() == 6);
    CHECK(k4.is_simple());

    Multigraph single = Multigraph::complete(1, 5);
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_total() == 0);

    CHECK(Multigraph::complete(4, 2).edge_total() == 12);
    CHECK_THROWS_AS(Multigraph::complete(0), std::invalid_argument);
}

TEST_CASE("multigraph invariants") {
    Multigraph g(3, {{0, 1, 2}, {1, 2, 1}});
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(1, 0) == 2);
    CHECK(g.multiplicity(0, 2) == 0);
    CHECK(!g.is_simple());
    CHECK(g.degree(1) == 3);
    CHECK(g.min_degree() == 1);

    CHECK_THROWS_AS(Multigraph(2, {{0, 0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph(2, {{0, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Multigraph(2, {{0, 5, 1}}), std::invalid_argument);

    // duplicate pairs merge
    Multigraph merged(2, {{0, 1, 1}, {1, 0, 2}});
    CHECK(merged.multiplicity(0, 1) == 3);
    CHECK(merged.pair_count() == 1);
}

TEST_CASE("complement") {
    Multigraph k4 = Multigraph::complete(4);
    CHECK(complement(k4).edge_total() == 0);
    CHECK(complement(Multigraph(3)).edge_total() == 3);

    // C5 is self-complementary
    Multigraph c5(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1}});
    Multigraph cc = complement(c5);
    CHECK(cc.edge_total() == 5);
    for (int v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
    CHECK(cc.connected());

    CHECK_THROWS_AS(complement(Multigraph(2, {{0, 1, 2}})), std::invalid_argument);
}

TEST_CASE("edge disjoint union") {
    Multigraph k4 = Multigraph::complete(4);
    Multigraph doubled = edge_disjoint_union(k4, k4);
    CHECK(doubled.multiplicity(0, 1) == 2);
    CHECK(doubled.edge_total() == 12);

    Multigraph k3 = Multigraph::complete(3);
    Multigraph same = edge_disjoint_union(k3, Multigraph(3));
    CHECK(same.edges() == k3.edges());

    Multigraph p3(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(edge_disjoint_union(p3, complement(p3)).edges() == k3.edges());

    CHECK_THROWS_AS(edge_disjoint_union(k3, k4), std::invalid_argument);
}

TEST_CASE("union and complement properties on random graphs") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        Multigraph g = oracle::random_simple_graph(n, rng);
        CHECK(edge_disjoint_union(g, complement(g)).edges() == Multigraph::complete(n).edges());
        CHECK(complement(complement(g)).edges() == g.edges());
        std::int64_t total = 0;
        for (const auto& e : g.edges()) total += e.mult;
        CHECK(total == g.edge_total());
    }
}

TEST_CASE("graph file round trip") {
    Multigraph p3 = read_graph("3 2\n0 1\n1 2\n");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.multiplicity(0, 1) == 1);
    CHECK(p3.multiplicity(1, 2) == 1);
    CHECK(p3.multiplicity(0, 2) == 0);

    Multigraph par = read_graph("2 1\n0 1 3\n");
    CHECK(par.multiplicity(0, 1) == 3);

    const std::string canonical = "4 3\n0 1\n0 3 2\n1 2\n";
    CHECK(write_graph(read_graph(canonical)) == canonical);

    // comments and blank lines are ignored
    Multigraph commented = read_graph("# header\n3 1\n\n0 2 # trailing\n");
    CHECK(commented.multiplicity(0, 2) == 1);
}

TEST_CASE("graph file errors carry line numbers") {
    CHECK_THROWS_AS(read_graph(""), ParseError);
    CHECK_THROWS_AS(read_graph("3 1\n0\n"), ParseError);
    CHECK_THROWS_AS(read_graph("3 1\n0 7\n"), ParseError);
    CHECK_THROWS_AS(read_graph("3 1\n0 1 0\n"), ParseError);
    CHECK_THROWS_AS(read_graph("3 2\n0 1\n"), ParseError);
    try {
        read_graph("3 1\n0 9\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("write/read round trip on random multigraphs") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        std::vector<GraphEdge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) es.push_back({u, v, static_cast<std::int64_t>(1 + rng() % 5)});
        Multigraph g(n, es);
        Multigraph back = read_graph(write_graph(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("vertex partition validation") {
    VertexPartition good{{{0, 1}, {2}}};
    validate_partition(good, 3);
    CHECK_THROWS_AS(validate_partition(VertexPartition{{{0, 1}, {1, 2}}}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_partition(VertexPartition{{{0}, {}}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(validate_partition(VertexPartition{{{0}}}, 2), std::invalid_argument);

    Multigraph p3(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(blocks_are_cliques(VertexPartition{{{0, 1}, {2}}}, p3));
    CHECK(!blocks_are_cliques(VertexPartition{{{0, 2}, {1}}}, p3));
}
