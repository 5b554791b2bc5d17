#pragma once

// Helpers shared by unit tests and the acceptance binary.

#include <random>
#include <vector>

#include "recolor/cli.hpp"
#include "recolor/graph.hpp"
#include "recolor/kernel.hpp"
#include "recolor/oracle.hpp"

namespace recolor::testing {

inline Colouring colouring_at(const ReconfGraph& rg, const ListAssignment& L, std::size_t i) {
    const auto opt = rg.decode(rg.code(i));
    Colouring c(opt.size());
    for (std::size_t v = 0; v < opt.size(); ++v) c[v] = L[static_cast<Vertex>(v)][opt[v]];
    return c;
}

inline std::vector<Colouring> all_colourings(const Graph& g, const ListAssignment& L, bool unfrozen_only) {
    const ReconfGraph rg(list_space(g, L), kDefaultBudget, Exec::serial);
    std::vector<Colouring> out;
    for (std::size_t i = 0; i < rg.size(); ++i)
        if (!unfrozen_only || !rg.neighbours(i).empty()) out.push_back(colouring_at(rg, L, i));
    return out;
}

inline ListAssignment deg1_shared(const Graph& g) { return synthesize_lists(g, {}); }

// Connected graph on n vertices: a random spanning tree plus edges with probability p.
inline Graph random_connected(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

inline bool reaches(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, const Plan& p) {
    const Verification v = verify_plan(g, L, a, p);
    return v.ok && v.end == b;
}

}  // namespace recolor::testing
