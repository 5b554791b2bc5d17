#include "recolor/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace recolor {

namespace {

int pair_bit(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

Graph from_code(int n, std::uint64_t code) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (code >> pair_bit(n, i, j) & 1) edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.n();
    if (n > 8) throw domain_error("canonical codes are exhaustive and limited to 8 vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (auto [u, v] : g.edges()) code |= std::uint64_t{1} << pair_bit(n, perm[u], perm[v]);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > 8) throw domain_error("graph corpus is generated for 1 to 8 vertices");
    if (n == 1) return {Graph::build(1, {})};
    // Every connected graph has a vertex whose removal keeps it connected, so
    // extending the (n-1)-vertex corpus by one vertex reaches all of them.
    std::map<std::uint64_t, Graph> seen;
    for (const Graph& h : connected_graphs(n - 1)) {
        for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
            std::vector<Edge> edges = h.edges();
            for (int u = 0; u < n - 1; ++u)
                if (mask >> u & 1) edges.emplace_back(u, n - 1);
            const Graph g = Graph::build(n, edges);
            const std::uint64_t code = canonical_code(g);
            if (!seen.contains(code)) seen.emplace(code, from_code(n, code));
        }
    }
    std::vector<Graph> out;
    for (auto& [code, g] : seen) out.push_back(std::move(g));
    return out;
}

}  // namespace recolor
