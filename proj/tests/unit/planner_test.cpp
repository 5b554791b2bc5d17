#include <doctest.h>

#include <algorithm>
#include <random>

#include "recolor/oracle.hpp"
#include "recolor/planner.hpp"
#include "support.hpp"

using namespace recolor;
using testing::reaches;

namespace {

Graph from_edges(int n, std::vector<Edge> e) { return Graph::build(n, e); }

// Runs `planner` on pairs of unfrozen colourings, exhaustively when affordable.
template <typename F>
void check_all_pairs(const Graph& g, const ListAssignment& L, F planner, std::size_t cap, std::uint64_t seed) {
    const auto cols = testing::all_colourings(g, L, true);
    REQUIRE_FALSE(cols.empty());
    std::mt19937_64 rng(seed);
    auto one = [&](const Colouring& a, const Colouring& b) {
        const auto out = planner(g, L, a, b);
        CHECK(reaches(g, L, a, b, out.plan));
        CHECK(out.end == b);
    };
    if (cols.size() * cols.size() <= cap) {
        for (const auto& a : cols)
            for (const auto& b : cols) one(a, b);
    } else {
        for (std::size_t k = 0; k < cap; ++k) one(cols[rng() % cols.size()], cols[rng() % cols.size()]);
    }
}

}  // namespace

TEST_CASE("key lemma on P3 with a surplus vertex") {
    const Graph g = Graph::path(3);
    const ListAssignment L({{1, 2, 3, 4}, {1, 2, 3}, {1, 2}});
    const Colouring a{3, 1, 2}, b{3, 2, 1};
    const auto out = plan_key_lemma(g, L, a, b);
    CHECK(reaches(g, L, a, b, out.plan));
    CHECK(out.plan.size() <= 21);
    const auto d = reconf_distance(g, L, a, b);
    REQUIRE(d.has_value());
    CHECK(static_cast<int>(out.plan.size()) >= *d);
    CHECK(plan_key_lemma(g, L, a, a).plan.empty());
}

TEST_CASE("key lemma rejects instances without surplus two") {
    const Graph g = Graph::cycle(5);
    const auto L = ListAssignment::uniform(5, 3);
    CHECK_THROWS_AS(plan_key_lemma(g, L, {1, 2, 1, 2, 3}, {1, 2, 1, 2, 3}), Error);
}

TEST_CASE("clique planner") {
    const Graph k3 = Graph::complete(3);
    const auto L = ListAssignment::uniform(3, 4);
    const auto same = plan_clique(k3, L, {1, 2, 3}, {1, 2, 3});
    CHECK(same.plan.empty());
    const Colouring a{1, 2, 3}, b{2, 1, 3};
    const auto out = plan_clique(k3, L, a, b);
    CHECK(reaches(k3, L, a, b, out.plan));
    CHECK(out.plan.size() == 3);
    CHECK(reconf_distance(k3, L, a, b) == 3);
    CHECK_THROWS_AS(plan_clique(k3, ListAssignment::uniform(3, 3), {1, 2, 3}, {2, 1, 3}), Error);
}

TEST_CASE("winding number values") {
    CHECK(winding_number({1, 2, 1, 2, 1, 2, 1, 2}) == 0);
    CHECK(winding_number({1, 2, 3, 1, 2, 3, 1, 2}) == 2);
    CHECK(winding_number({1, 2, 3}) == 1);
    CHECK(winding_number({1, 3, 2}) == -1);
}

// Independent oracle: winding classes of C_n partition the reconfiguration components.
TEST_CASE("winding number is constant on components") {
    for (int n = 4; n <= 9; ++n) {
        const Graph g = Graph::cycle(n);
        const auto L = ListAssignment::uniform(n, 3);
        const ReconfGraph rg(list_space(g, L), kDefaultBudget, Exec::serial);
        std::size_t count = 0;
        const auto comp = rg.components(&count);
        std::vector<std::optional<int>> seen(count);
        for (std::size_t i = 0; i < rg.size(); ++i) {
            const int f = winding_number(testing::colouring_at(rg, L, i));
            auto& s = seen[comp[i]];
            if (s) CHECK(*s == f);
            s = f;
        }
    }
}

TEST_CASE("lower bound on cycle classes") {
    CHECK(reconf_lower_bound_classes(5) == 1);
    CHECK(reconf_lower_bound_classes(8) == 2);
    CHECK(reconf_lower_bound_classes(12) == 2);
    CHECK(reconf_lower_bound_classes(14) == 3);
}

TEST_CASE("small case rejects the winding obstruction on C5") {
    const Graph g = Graph::cycle(5);
    const auto L = ListAssignment::uniform(5, 3);
    const Colouring a{1, 2, 1, 2, 3};
    const Colouring b{1, 3, 1, 3, 2};
    CHECK(winding_number(a) != winding_number(b));
    CHECK_THROWS_AS(plan_small_case(g, L, a, b), Error);
    CHECK_FALSE(reconf_distance(g, L, a, b).has_value());
}

TEST_CASE("small case planners on paths, cycles, claws and paws") {
    auto planner = [](const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b) {
        return plan_small_case(g, L, a, b);
    };
    SUBCASE("P3") { check_all_pairs(Graph::path(3), testing::deg1_shared(Graph::path(3)), planner, 5000, 1); }
    SUBCASE("P6 on four colours") {
        auto L = testing::deg1_shared(Graph::path(6));
        L.set(2, {1, 2, 4});
        check_all_pairs(Graph::path(6), L, planner, 4000, 2);
    }
    SUBCASE("P6 on three colours splits") {
        const auto L = testing::deg1_shared(Graph::path(6));
        CHECK(explore(Graph::path(6), L).non_singleton_count == 2);
        const auto cols = testing::all_colourings(Graph::path(6), L, true);
        CHECK_THROWS_AS(plan_small_case(Graph::path(6), L, cols.front(), cols.back()), Error);
    }
    SUBCASE("C6 with one longer list") {
        const Graph g = Graph::cycle(6);
        auto L = ListAssignment::uniform(6, 3);
        L.set(2, {1, 2, 4});
        check_all_pairs(g, L, planner, 4000, 3);
    }
    SUBCASE("claw with one long arm") {
        const Graph g = from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
        check_all_pairs(g, testing::deg1_shared(g), planner, 4000, 4);
    }
    SUBCASE("subdivided paw") {
        const Graph g = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}});
        check_all_pairs(g, testing::deg1_shared(g), planner, 4000, 5);
    }
}

TEST_CASE("very good pairs") {
    // The prism is cubic and 3-connected, so every good pair is very good.
    const Graph prism = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    const auto L = ListAssignment::uniform(6, 4);
    for (const auto& c : testing::all_colourings(prism, L, false))
        for (Vertex v = 0; v < 6; ++v) {
            const auto gp = find_very_good_pair(prism, c, v);
            if (!vertex_frozen(prism, L, c, v)) {
                // Degree 3 with four colours: unfrozen means a repeated neighbour colour.
                REQUIRE(gp.has_value());
                CHECK(c[gp->w1] == c[gp->w2]);
                CHECK_FALSE(prism.adjacent(gp->w1, gp->w2));
                CHECK(gp->very_good);
            }
        }
    // Rainbow neighbourhood: no pair.
    const Graph k4 = Graph::complete(4);
    CHECK_FALSE(find_very_good_pair(k4, {1, 2, 3, 4}, 0).has_value());
}

TEST_CASE("regular two-connected planner") {
    auto planner = [](const Graph& g, const ListAssignment&, const Colouring& a, const Colouring& b) {
        return plan_regular_two_connected(g, a, b);
    };
    SUBCASE("prism") {
        const Graph g = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
        check_all_pairs(g, ListAssignment::uniform(6, 4), planner, 3000, 6);
    }
    SUBCASE("two diamonds joined through a 2-cut") {
        // Cubic, 2-connected, not 3-connected.
        const Graph g = from_edges(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7},
                                       {0, 4}, {3, 7}});
        check_all_pairs(g, ListAssignment::uniform(8, 4), planner, 3000, 7);
    }
    SUBCASE("K4 all frozen") {
        CHECK(testing::all_colourings(Graph::complete(4), ListAssignment::uniform(4, 4), true).empty());
    }
}

TEST_CASE("two-connected planner with unequal lists") {
    const Graph g = from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
    auto L = testing::deg1_shared(g);
    auto planner = [](const Graph& h, const ListAssignment& M, const Colouring& a, const Colouring& b) {
        return plan_two_connected(h, M, a, b);
    };
    check_all_pairs(g, L, planner, 3000, 8);
}

TEST_CASE("main planner") {
    auto planner = [](const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b) {
        return plan_main(g, L, a, b);
    };
    SUBCASE("star K_{1,3}") {
        const Graph g = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        const auto L = testing::deg1_shared(g);
        CHECK(std::vector<Colour>(L[0].begin(), L[0].end()) == std::vector<Colour>{1, 2, 3, 4});
        CHECK(std::vector<Colour>(L[1].begin(), L[1].end()) == std::vector<Colour>{1, 2});
        check_all_pairs(g, L, planner, 5000, 9);
    }
    SUBCASE("two triangles joined by a bridge") {
        const Graph g = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
        check_all_pairs(g, testing::deg1_shared(g), planner, 3000, 10);
    }
    SUBCASE("K4 with a pendant path") {
        const Graph g = from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
        check_all_pairs(g, testing::deg1_shared(g), planner, 3000, 11);
    }
    SUBCASE("random graphs on eight vertices") {
        std::mt19937_64 rng(12);
        int done = 0;
        while (done < 15) {
            const Graph g = testing::random_connected(8, 0.25, rng);
            if (g.max_degree() < 3 || g.is_complete()) continue;
            ++done;
            const auto L = testing::deg1_shared(g);
            const auto cols = testing::all_colourings(g, L, true);
            for (int k = 0; k < 10; ++k) {
                const auto& a = cols[rng() % cols.size()];
                const auto& b = cols[rng() % cols.size()];
                const auto out = plan_main(g, L, a, b);
                CHECK(reaches(g, L, a, b, out.plan));
                CHECK(out.plan.size() <= 640);
                CHECK_FALSE(out.trace.empty());
            }
        }
    }
    SUBCASE("alpha equals beta") {
        const Graph g = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        const Colouring a{3, 1, 1, 1};
        CHECK(plan_main(g, testing::deg1_shared(g), a, a).plan.empty());
    }
    SUBCASE("rejections") {
        // Q3 coloured by cosets of {000, 111}: every closed neighbourhood is rainbow.
        std::vector<Edge> e;
        for (Vertex u = 0; u < 8; ++u)
            for (int bit = 1; bit < 8; bit <<= 1)
                if (u < (u ^ bit)) e.emplace_back(u, u ^ bit);
        const Graph q3 = Graph::build(8, e);
        const auto L = testing::deg1_shared(q3);
        Colouring frozen(8);
        for (Vertex u = 0; u < 8; ++u) frozen[u] = std::min(u, 7 - u) + 1;
        REQUIRE(colouring_status(q3, L, frozen).is_frozen);
        const auto unfrozen = testing::all_colourings(q3, L, true);
        CHECK_THROWS_AS(plan_main(q3, L, frozen, unfrozen.front()), Error);
        CHECK_THROWS_AS(plan_main(Graph::cycle(5), ListAssignment::uniform(5, 3), {1, 2, 1, 2, 3}, {1, 2, 1, 2, 3}),
                        Error);
        CHECK_THROWS_AS(plan_main(q3, ListAssignment::uniform(8, 3), unfrozen.front(), unfrozen.front()), Error);
    }
}

// D has an arc u -> x when beta(u) = alpha(x) for distinct wrongly coloured u. Each directed
// path costs one step per vertex, so the count is arcs + cycles + paths, plus 2 for a bad cycle.
TEST_CASE("clique plan length against the conflict digraph") {
    std::mt19937_64 rng(59);
    int exceeds_without_paths = 0;  // pairs whose exact distance exceeds arcs + cycles + 2
    for (int n = 2; n <= 5; ++n)
      for (int spare = 1; spare <= 3; ++spare) {
        const Graph g = Graph::complete(n);
        const auto L = ListAssignment::uniform(n, n + spare);
        const auto cols = testing::all_colourings(g, L, false);
        for (int k = 0; k < 200; ++k) {
            const auto& a = cols[rng() % cols.size()];
            const auto& b = cols[rng() % cols.size()];
            std::vector<int> succ(n, -1), indeg(n, 0);
            int arcs = 0;
            for (Vertex u = 0; u < n; ++u) {
                if (a[u] == b[u]) continue;
                for (Vertex x = 0; x < n; ++x)
                    if (x != u && b[u] == a[x]) {
                        succ[u] = x;
                        ++indeg[x];
                        ++arcs;
                    }
            }
            int cycles = 0, paths = 0;
            std::vector<char> seen(n, 0);
            for (Vertex s = 0; s < n; ++s)
                if (a[s] != b[s] && indeg[s] == 0) {
                    ++paths;
                    for (int v = s; v >= 0 && !seen[v]; v = succ[v]) seen[v] = 1;
                }
            for (Vertex s = 0; s < n; ++s)
                if (a[s] != b[s] && !seen[s]) {
                    ++cycles;
                    for (int v = s; !seen[v]; v = succ[v]) seen[v] = 1;
                }
            const int len = static_cast<int>(plan_clique(g, L, a, b).plan.size());
            CHECK(len <= arcs + cycles + paths + 2);
            // Count only cases where even the exact distance exceeds the path-free count.
            if (len > arcs + cycles + 2 && *reconf_distance(g, L, a, b) > arcs + cycles + 2) ++exceeds_without_paths;
        }
    }
    // Three or more directed paths need that many extra steps, so the path-free count is not an upper bound.
    CHECK(exceeds_without_paths > 0);
}
