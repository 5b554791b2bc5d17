#include "recolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

namespace recolor {

Graph Graph::build(int n, std::span<const Edge> edges) {
    if (n < 0) throw domain_error("negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw domain_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") has a vertex out of range");
        if (u == v)
            throw domain_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") is a self-loop");
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    return g;
}

Graph Graph::complete(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return build(n, e);
}

Graph Graph::cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build(n, e);
}

Graph Graph::path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build(n, e);
}

int Graph::max_degree() const noexcept {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::is_complete() const noexcept {
    const long long k = n();
    return static_cast<long long>(edges_.size()) == k * (k - 1) / 2;
}

bool Graph::connected() const { return connected_without({}); }

bool Graph::connected_without(std::span<const Vertex> removed) const {
    return components_without(removed).size() <= 1;
}

std::vector<std::vector<Vertex>> Graph::components_without(std::span<const Vertex> removed) const {
    std::vector<char> gone(n(), 0);
    for (Vertex r : removed) gone[r] = 1;
    std::vector<int> seen(n(), 0);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex s = 0; s < n(); ++s) {
        if (gone[s] || seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex u : adj_[comp[i]])
                if (!gone[u] && !seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> Graph::distances_from(Vertex v) const {
    std::vector<int> d(n(), -1);
    std::deque<Vertex> q{v};
    d[v] = 0;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        for (Vertex y : adj_[x])
            if (d[y] < 0) {
                d[y] = d[x] + 1;
                q.push_back(y);
            }
    }
    return d;
}

ListAssignment::ListAssignment(std::vector<std::vector<Colour>> lists) : lists_(std::move(lists)) {
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
    }
}

ListAssignment ListAssignment::uniform(int n, int k) {
    std::vector<Colour> l(k);
    std::iota(l.begin(), l.end(), 1);
    return ListAssignment(std::vector<std::vector<Colour>>(n, l));
}

bool ListAssignment::contains(Vertex v, Colour c) const {
    return std::binary_search(lists_[v].begin(), lists_[v].end(), c);
}

std::vector<Colour> ListAssignment::palette() const {
    std::vector<Colour> all;
    for (const auto& l : lists_) all.insert(all.end(), l.begin(), l.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

void ListAssignment::set(Vertex v, std::vector<Colour> list) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    lists_[v] = std::move(list);
}

bool BlockTree::is_cut_vertex(Vertex v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

std::vector<int> BlockTree::leaf_blocks() const {
    std::vector<int> out;
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        if (block_cuts[b].size() <= 1) out.push_back(b);
    return out;
}

BlockTree block_decomposition(const Graph& g) {
    auto comps = g.components_without({});
    if (comps.size() > 1)
        throw domain_error("graph is disconnected: vertices " + std::to_string(comps[0][0]) +
                           " and " + std::to_string(comps[1][0]) + " lie in different components");
    BlockTree t;
    const int n = g.n();
    if (n == 0) return t;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> stack;
    int timer = 0;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
        disc[u] = low[u] = timer++;
        for (Vertex w : g.neighbours(u)) {
            if (w == parent) continue;
            if (disc[w] < 0) {
                stack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<Vertex> block;
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e.first);
                        block.push_back(e.second);
                        if (e == Edge{u, w}) break;
                    }
                    std::sort(block.begin(), block.end());
                    block.erase(std::unique(block.begin(), block.end()), block.end());
                    t.blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[u]) {
                stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    dfs(0, -1);
    std::sort(t.blocks.begin(), t.blocks.end());
    std::vector<int> count(n, 0);
    for (const auto& b : t.blocks)
        for (Vertex v : b) ++count[v];
    for (Vertex v = 0; v < n; ++v)
        if (count[v] >= 2) t.cut_vertices.push_back(v);
    for (const auto& b : t.blocks) {
        std::vector<Vertex> cuts;
        for (Vertex v : b)
            if (count[v] >= 2) cuts.push_back(v);
        t.block_cuts.push_back(std::move(cuts));
    }
    return t;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex v, Vertex w) {
    if (v < 0 || w < 0 || v >= g.n() || w >= g.n()) throw domain_error("path endpoint out of range");
    auto d = g.distances_from(w);
    if (d[v] < 0)
        throw domain_error("vertex " + std::to_string(w) + " is unreachable from " + std::to_string(v));
    std::vector<Vertex> path{v};
    while (path.back() != w) {
        Vertex cur = path.back();
        for (Vertex u : g.neighbours(cur))
            if (d[u] == d[cur] - 1) {
                path.push_back(u);
                break;
            }
    }
    return path;
}

SurplusReport check_list_surplus(const Graph& g, const ListAssignment& lists) {
    SurplusReport r;
    r.one_plus = true;
    for (Vertex v = 0; v < g.n(); ++v) {
        int s = lists.list_size(v) - g.degree(v);
        r.surplus.push_back(s);
        if (s < 1) r.one_plus = false;
        if (s >= 2) ++r.surplus_two_count;
        if (s <= 0) r.nonpositive.push_back(v);
    }
    return r;
}

Instance gen_shatter_instance(int n, int p) {
    if (n < 3) throw domain_error("shatter instance needs clique size n >= 3");
    if (p < 2) throw domain_error("shatter instance needs pendant list size p >= 2");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    e.emplace_back(0, n);
    std::vector<std::vector<Colour>> lists(n + 1);
    for (int v = 0; v < n; ++v)
        for (int c = 1; c <= n; ++c) lists[v].push_back(c);
    for (int c = n + 1; c <= n + p; ++c) lists[n].push_back(c);
    return {Graph::build(n + 1, e), ListAssignment(std::move(lists))};
}

bool is_subset(std::span<const Colour> a, std::span<const Colour> b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace recolor
