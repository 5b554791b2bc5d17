#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "recolor/error.hpp"

namespace recolor {

using Vertex = int;
using Colour = int;
using Edge = std::pair<Vertex, Vertex>;
using Colouring = std::vector<Colour>;

// Simple undirected graph on 0..n-1 with sorted adjacency.
class Graph {
public:
    Graph() = default;

    // Deduplicates; throws on self-loops and out-of-range ids.
    static Graph build(int n, std::span<const Edge> edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    int n() const noexcept { return static_cast<int>(adj_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const noexcept;
    bool adjacent(Vertex u, Vertex v) const;
    bool is_complete() const noexcept;

    bool connected() const;
    // Connectivity of the graph with `removed` deleted.
    bool connected_without(std::span<const Vertex> removed) const;
    // Components of G - removed, each sorted, ordered by least vertex.
    std::vector<std::vector<Vertex>> components_without(std::span<const Vertex> removed) const;

    // BFS distances from v; -1 for unreachable.
    std::vector<int> distances_from(Vertex v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Edge> edges_;
};

class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<std::vector<Colour>> lists);

    static ListAssignment uniform(int n, int k);

    int size() const noexcept { return static_cast<int>(lists_.size()); }
    std::span<const Colour> operator[](Vertex v) const { return lists_[v]; }
    bool contains(Vertex v, Colour c) const;
    int list_size(Vertex v) const { return static_cast<int>(lists_[v].size()); }
    const std::vector<std::vector<Colour>>& lists() const noexcept { return lists_; }
    // Sorted union of every list.
    std::vector<Colour> palette() const;
    void set(Vertex v, std::vector<Colour> list);

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<std::vector<Colour>> lists_;
};

struct Instance {
    Graph graph;
    ListAssignment lists;
};

struct BlockTree {
    std::vector<std::vector<Vertex>> blocks;
    std::vector<Vertex> cut_vertices;
    // For each block, the cut vertices it contains.
    std::vector<std::vector<Vertex>> block_cuts;

    bool is_cut_vertex(Vertex v) const;
    // Blocks that contain at most one cut vertex.
    std::vector<int> leaf_blocks() const;
};

// Bridges become blocks of size 2. Throws on disconnected input.
BlockTree block_decomposition(const Graph& g);

// Lexicographically least shortest v,w-path.
std::vector<Vertex> shortest_path(const Graph& g, Vertex v, Vertex w);

struct SurplusReport {
    std::vector<int> surplus;
    bool one_plus = false;
    int surplus_two_count = 0;
    std::vector<Vertex> nonpositive;
};

SurplusReport check_list_surplus(const Graph& g, const ListAssignment& lists);

// K_n on lists {1..n} with a pendant vertex n at vertex 0 carrying {n+1..n+p}.
Instance gen_shatter_instance(int n, int p);

// Helpers shared by the planners.
bool is_subset(std::span<const Colour> a, std::span<const Colour> b);

}  // namespace recolor
