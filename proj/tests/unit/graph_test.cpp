#include <doctest.h>

#include <algorithm>
#include <random>

#include "recolor/graph.hpp"
#include "support.hpp"

using namespace recolor;

TEST_CASE("build dedups and rejects bad edges") {
    const std::vector<Edge> five{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
    const Graph c5 = Graph::build(5, five);
    CHECK(c5 == Graph::cycle(5));
    for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    const Graph k4 = Graph::complete(4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.max_degree() == 3);
    CHECK(k4.is_complete());

    const std::vector<Edge> dup{{0, 1}, {0, 1}};
    const Graph d = Graph::build(3, dup);
    CHECK(d.edge_count() == 1);
    CHECK(d.degree(2) == 0);
    CHECK_FALSE(d.connected());

    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::build(3, loop), Error);
    const std::vector<Edge> range{{0, 3}};
    CHECK_THROWS_AS(Graph::build(3, range), Error);
}

TEST_CASE("blocks of small graphs") {
    const BlockTree c5 = block_decomposition(Graph::cycle(5));
    REQUIRE(c5.blocks.size() == 1);
    CHECK(c5.blocks[0] == std::vector<Vertex>{0, 1, 2, 3, 4});
    CHECK(c5.cut_vertices.empty());

    const BlockTree p4 = block_decomposition(Graph::path(4));
    CHECK(p4.blocks.size() == 3);
    CHECK(p4.cut_vertices == std::vector<Vertex>{1, 2});
    CHECK(p4.leaf_blocks().size() == 2);

    const std::vector<Edge> paw{{0, 1}, {1, 2}, {0, 2}, {0, 3}};
    const BlockTree t = block_decomposition(Graph::build(4, paw));
    auto blocks = t.blocks;
    std::sort(blocks.begin(), blocks.end());
    CHECK(blocks == std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 3}});
    CHECK(t.cut_vertices == std::vector<Vertex>{0});

    const std::vector<Edge> two{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(block_decomposition(Graph::build(4, two)), Error);
}

// Independent check: a vertex is a cut vertex iff deleting it disconnects the graph.
TEST_CASE("cut vertices agree with deletion connectivity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = testing::random_connected(n, 0.2, rng);
        const BlockTree t = block_decomposition(g);
        for (Vertex v = 0; v < n; ++v) {
            const Vertex removed[] = {v};
            CHECK(t.is_cut_vertex(v) == !g.connected_without(removed));
        }
        // Every edge lies in exactly one block.
        for (auto [u, w] : g.edges()) {
            int holders = 0;
            for (const auto& b : t.blocks)
                holders += std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), w);
            CHECK(holders == 1);
        }
    }
}

TEST_CASE("shortest path tie-break") {
    CHECK(shortest_path(Graph::cycle(5), 0, 2) == std::vector<Vertex>{0, 1, 2});
    CHECK(shortest_path(Graph::cycle(4), 0, 2) == std::vector<Vertex>{0, 1, 2});
    CHECK(shortest_path(Graph::complete(4), 1, 3) == std::vector<Vertex>{1, 3});
    const std::vector<Edge> one{{0, 1}};
    CHECK_THROWS_AS(shortest_path(Graph::build(3, one), 0, 2), Error);
}

TEST_CASE("list surplus") {
    const auto c5 = check_list_surplus(Graph::cycle(5), ListAssignment::uniform(5, 3));
    CHECK(c5.surplus == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(c5.one_plus);
    CHECK(c5.surplus_two_count == 0);

    const ListAssignment L({{1, 2, 3}, {1, 2, 3}, {1, 2, 3, 4}});
    const auto k3 = check_list_surplus(Graph::complete(3), L);
    CHECK(k3.surplus == std::vector<int>{1, 1, 2});
    CHECK(k3.surplus_two_count == 1);

    const auto tight = check_list_surplus(Graph::complete(3), ListAssignment::uniform(3, 2));
    CHECK_FALSE(tight.one_plus);
    CHECK(tight.nonpositive == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("list assignment basics") {
    ListAssignment L({{3, 1, 2}, {5}});
    CHECK(std::vector<Colour>(L[0].begin(), L[0].end()) == std::vector<Colour>{1, 2, 3});
    CHECK(L.contains(1, 5));
    CHECK_FALSE(L.contains(1, 1));
    CHECK(L.palette() == std::vector<Colour>{1, 2, 3, 5});
}

TEST_CASE("shatter instance shape") {
    const Instance s = gen_shatter_instance(3, 2);
    CHECK(s.graph.n() == 4);
    CHECK(s.graph.edge_count() == 4);
    CHECK(s.lists.list_size(3) == 2);
    CHECK_THROWS_AS(gen_shatter_instance(2, 2), Error);
    CHECK_THROWS_AS(gen_shatter_instance(3, 1), Error);
}
