#include "doctest.h"
#include "graph_zoo.hpp"

#include "brooks/errors.hpp"
#include "brooks/io.hpp"

using namespace brooks;

TEST_CASE("edge list parsing") {
    Graph p = parse_edge_list("0 1\n1 2");
    CHECK(p == zoo::path(3));

    Graph e = parse_edge_list("a b\nb a\n");
    CHECK(e.vertex_count() == 2);
    CHECK(e.edge_count() == 1);
    CHECK(e.label(0) == "a");
    CHECK(e.label(1) == "b");

    Graph c = parse_edge_list("# comment\n\n  x y\r\ny z\n#another\n");
    CHECK(c.edge_count() == 2);
    CHECK(c.label(2) == "z");

    // numbering follows first appearance, not numeric value
    Graph f = parse_edge_list("5 3\n");
    CHECK(f.label(0) == "5");
    CHECK(f.label(1) == "3");
}

TEST_CASE("edge list errors") {
    CHECK_THROWS_AS(parse_edge_list("0 0"), ValidationError);
    try {
        parse_edge_list("0 1\n1 2 3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list("0\n"), ParseError);
}

TEST_CASE("dimacs parsing") {
    CHECK(parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 3 1") == zoo::complete(3));
    Graph iso = parse_dimacs("c two isolated\np edge 2 0\n");
    CHECK(iso.vertex_count() == 2);
    CHECK(iso.edge_count() == 0);

    std::vector<std::string> warnings;
    Graph dup = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n", warnings);
    CHECK(dup.edge_count() == 1);
    CHECK(warnings.size() == 1);

    CHECK_THROWS_AS(parse_dimacs("e 1 2\np edge 2 1"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("c nothing"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3"), ValidationError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 2 2"), ValidationError);
}

TEST_CASE("serialization is canonical") {
    CHECK(serialize(zoo::complete(3), Format::dimacs) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3");
    CHECK(serialize(Graph(0, {}), Format::dimacs) == "p edge 0 0");
    CHECK(serialize(zoo::path(3), Format::edge_list) == "#vertices 0 1 2\n0 1\n1 2");
}

TEST_CASE("round trip on random graphs keeps numbering and labels") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
        const int n = static_cast<int>(rng() % 12);
        Graph g = zoo::random_graph(n, 0.3, rng);
        CHECK(parse_dimacs(serialize(g, Format::dimacs)) == g);
        Graph back = parse_edge_list(serialize(g, Format::edge_list));
        CHECK(back == g);
        for (int v = 0; v < n; ++v) CHECK(back.label(v) == g.label(v));
    }
    Graph named = parse_edge_list("u w\nw x\nz u\n");
    CHECK(parse_edge_list(serialize(named, Format::edge_list)).labels() == named.labels());
}

TEST_CASE("oriented input keeps arc directions") {
    auto d = parse_orientation("0 1\n2 1\n", Format::edge_list);
    CHECK(d.in_degree(1) == 2);
    CHECK(d.out_degree(0) == 1);
    auto c = parse_orientation("p edge 3 3\ne 1 2\ne 2 3\ne 3 1", Format::dimacs);
    for (int v = 0; v < 3; ++v) CHECK(c.in_degree(v) == 1);
    CHECK_THROWS_AS(parse_orientation("0 1\n1 0\n", Format::edge_list), ValidationError);
}
