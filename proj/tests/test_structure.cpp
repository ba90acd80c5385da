#include "doctest.h"
#include "graph_zoo.hpp"

#include <algorithm>

#include "brooks/errors.hpp"
#include "brooks/structure.hpp"

using namespace brooks;

namespace {

// Shortest bad cycle by brute force over all cycles, ties by canonical sequence.
std::vector<int> expected_witness_cycle(const Graph& g) {
    std::vector<int> best;
    for (const auto& c : zoo::all_cycles(g)) {
        VertexSet s;
        for (int v : c) s.insert(v);
        const int k = s.size(), m = g.edges_within(s);
        const bool complete = m == k * (k - 1) / 2;
        const bool odd_chordless = k % 2 == 1 && m == k;
        if (complete || odd_chordless) continue;
        if (best.empty() || c.size() < best.size() || (c.size() == best.size() && c < best)) best = c;
    }
    return best;
}

// Invariants checked only through induced_subgraph and adjacency.
void check_witness_independently(const Graph& g, const CycleWitness& w) {
    const int len = static_cast<int>(w.cycle.size());
    REQUIRE(len >= 4);
    CHECK(len % 2 == 0);
    for (int i = 0; i < len; ++i) CHECK(g.adjacent(w.cycle[i], w.cycle[(i + 1) % len]));
    auto sub = induced_subgraph(g, w.vertex_set());
    CHECK(sub.graph.vertex_count() == len);
    CHECK(sub.graph.edge_count() == len + (w.chord ? 1 : 0));
    if (w.chord) CHECK(g.adjacent(w.chord->first, w.chord->second));
}

}  // namespace

TEST_CASE("block decomposition examples") {
    auto bowtie = block_decomposition(zoo::bowtie());
    CHECK(bowtie.blocks.size() == 2);
    CHECK(bowtie.cut_vertices == VertexSet::of({2}));

    auto c4 = block_decomposition(zoo::cycle(4));
    CHECK(c4.blocks.size() == 1);
    CHECK(c4.cut_vertices.empty());

    auto p4 = block_decomposition(zoo::path(4));
    CHECK(p4.blocks.size() == 3);
    CHECK(p4.cut_vertices == VertexSet::of({1, 2}));
    CHECK(p4.blocks[0] == VertexSet::of({0, 1}));

    auto iso = block_decomposition(Graph(3, {{1, 2}}));
    CHECK(iso.blocks == std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({1, 2})});
}

TEST_CASE("block decomposition agrees with the common-cycle oracle") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : zoo::all_graphs(n)) {
            auto got = block_decomposition(g).blocks;
            std::sort(got.begin(), got.end(), [](auto a, auto b) { return a.bits() < b.bits(); });
            REQUIRE(got == zoo::blocks_oracle(g));
        }
}

TEST_CASE("block invariants: every edge in exactly one block, shared vertices are cut vertices") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        Graph g = zoo::random_graph(9, 0.25, rng);
        auto bd = block_decomposition(g);
        for (auto [u, v] : g.edges()) {
            int holders = 0;
            for (auto b : bd.blocks) holders += b.contains(u) && b.contains(v);
            CHECK(holders == 1);
        }
        for (std::size_t a = 0; a < bd.blocks.size(); ++a)
            for (std::size_t b = a + 1; b < bd.blocks.size(); ++b) {
                VertexSet shared = bd.blocks[a] & bd.blocks[b];
                CHECK(shared.size() <= 1);
                CHECK(shared.subset_of(bd.cut_vertices));
            }
    }
}

TEST_CASE("Gallai tree examples") {
    CHECK(is_gallai_tree(zoo::complete(4)));
    CHECK(is_gallai_tree(zoo::cycle(5)));
    CHECK_FALSE(is_gallai_tree(zoo::cycle(4)));
    CHECK_FALSE(is_gallai_tree(zoo::k4_minus_edge()));
    // K4 - e: 4 vertices and 5 edges, neither 6 (complete) nor 4 (cycle)
    CHECK(zoo::k4_minus_edge().edge_count() == 5);
    CHECK(is_gallai_tree(zoo::bowtie()));
    CHECK(is_gallai_tree(Graph(1, {})));
    CHECK(is_gallai_tree(zoo::path(2)));
    CHECK(is_gallai_tree(zoo::path(5)));
    CHECK_FALSE(is_gallai_tree(zoo::petersen()));
    CHECK_THROWS_AS(is_gallai_tree(Graph(4, {{0, 1}, {2, 3}})), DomainError);
}

TEST_CASE("Gallai classification matches direct block inspection for n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : zoo::connected_graphs(n)) REQUIRE(is_gallai_tree(g) == zoo::gallai_oracle(g));
}

TEST_CASE("witness examples") {
    auto c4 = find_witness_cycle(zoo::cycle(4));
    CHECK(c4.cycle == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(c4.chord);

    auto k4e = find_witness_cycle(zoo::k4_minus_edge());
    CHECK(k4e.cycle == std::vector<int>{0, 1, 2, 3});
    REQUIRE(k4e.chord);
    CHECK(*k4e.chord == Edge{1, 3});
    CHECK(k4e.cycle == expected_witness_cycle(zoo::k4_minus_edge()));

    auto pet = find_witness_cycle(zoo::petersen());
    CHECK(pet.cycle.size() == 6);
    CHECK_FALSE(pet.chord);
    check_witness_independently(zoo::petersen(), pet);

    CHECK_THROWS_AS(find_witness_cycle(zoo::cycle(5)), DomainError);
    CHECK_THROWS_AS(find_witness_cycle(zoo::complete(5)), DomainError);
    CHECK_THROWS_AS(find_witness_cycle(Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}})),
                    DomainError);
}

TEST_CASE("witness is valid and deterministic on every non-Gallai graph with n <= 8") {
    // n <= 6 exhaustively, n = 7, 8 by sampling
    for (int n = 4; n <= 6; ++n)
        for (const auto& g : zoo::connected_graphs(n)) {
            if (zoo::gallai_oracle(g)) continue;
            auto w = find_witness_cycle(g);
            check_witness_independently(g, w);
            CHECK(witness_violation(g, w).empty());
            REQUIRE(w == find_witness_cycle(g));
        }
    std::mt19937_64 rng(77);
    for (int i = 0; i < 3000; ++i) {
        const int n = 7 + static_cast<int>(i % 2);
        Graph g = zoo::random_connected_graph(n, 0.2 + 0.1 * (i % 5), rng);
        if (zoo::gallai_oracle(g)) continue;
        auto w = find_witness_cycle(g);
        check_witness_independently(g, w);
        REQUIRE(w == find_witness_cycle(g));
    }
}

TEST_CASE("witness is the canonical shortest bad cycle of a 2-connected graph") {
    for (int n = 4; n <= 6; ++n)
        for (const auto& g : zoo::connected_graphs(n)) {
            auto bd = block_decomposition(g);
            if (bd.blocks.size() != 1 || zoo::gallai_oracle(g)) continue;
            REQUIRE(find_witness_cycle(g).cycle == expected_witness_cycle(g));
        }
}

TEST_CASE("witness_violation rejects broken witnesses") {
    Graph k4e = zoo::k4_minus_edge();
    CHECK_FALSE(witness_violation(k4e, {{0, 1, 2, 3}, std::nullopt}).empty());
    CHECK_FALSE(witness_violation(k4e, {{0, 1, 3}, std::nullopt}).empty());
    CHECK_FALSE(witness_violation(zoo::complete(4), {{0, 1, 2, 3}, Edge{0, 2}}).empty());
    CHECK(witness_violation(zoo::cycle(6), {{0, 1, 2, 3, 4, 5}, std::nullopt}).empty());
}

TEST_CASE("spanning ordering") {
    CHECK(spanning_ordering(zoo::path(3), 0).order == std::vector<int>{0, 1, 2});
    CHECK(spanning_ordering(zoo::star(4), 4).order == std::vector<int>{4, 0, 1, 2, 3});
    CHECK(spanning_ordering(zoo::cycle(6), 3).order == std::vector<int>{3, 2, 4, 1, 5, 0});
    CHECK_THROWS_AS(spanning_ordering(zoo::path(3), 3), ValidationError);
    CHECK_THROWS_AS(spanning_ordering(Graph(2, {}), 0), DomainError);
}

TEST_CASE("predecessor property for every root of every connected graph with n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : zoo::connected_graphs(n))
            for (int r = 0; r < n; ++r) {
                auto o = spanning_ordering(g, r);
                REQUIRE(has_predecessor_property(g, o));
            }
    std::mt19937_64 rng(8);
    for (int i = 0; i < 2000; ++i) {
        Graph g = zoo::random_connected_graph(7 + i % 2, 0.3, rng);
        for (int r = 0; r < g.vertex_count(); ++r) REQUIRE(has_predecessor_property(g, spanning_ordering(g, r)));
    }
}
