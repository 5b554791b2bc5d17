#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

constexpr std::uint64_t kDefaultBudget = 20'000'000;

// A finite constraint space: each vertex picks one of radix[v] options and
// every edge forbids some option pairs. List colourings and cover colourings
// both reduce to this.
struct StateSpace {
    std::vector<int> radix;
    std::vector<std::pair<Vertex, Vertex>> edges;  // u < v
    // conflict[e][i * radix[v] + j] != 0 when option i at u clashes with j at v.
    std::vector<std::vector<char>> conflict;
};

StateSpace list_space(const Graph& g, const ListAssignment& L);

struct ComponentInfo {
    std::uint64_t size = 0;
    // Empty when not computed; a lower bound when exact is false.
    std::optional<int> diameter;
    bool diameter_exact = false;
};

struct ReconfSummary {
    std::uint64_t total_colourings = 0;
    std::uint64_t frozen_count = 0;
    // Descending by size, then by diameter.
    std::vector<ComponentInfo> components;
    std::uint64_t non_singleton_count = 0;

    std::vector<std::uint64_t> sizes() const;
};

enum class Exec { serial, parallel };

struct ExploreOptions {
    std::uint64_t budget = kDefaultBudget;
    bool diameters = true;
    std::uint64_t exact_diameter_limit = 100'000;
    int sampled_roots = 64;
    Exec exec = Exec::parallel;
};

ReconfSummary explore(const Graph& g, const ListAssignment& L, const ExploreOptions& opt = {});
ReconfSummary explore_space(const StateSpace& s, const ExploreOptions& opt = {});

// Product of radices, saturating at UINT64_MAX.
std::uint64_t state_estimate(const StateSpace& s);

// Proper colourings of the space with their reconfiguration adjacency.
class ReconfGraph {
public:
    ReconfGraph(const StateSpace& s, std::uint64_t budget, Exec exec);

    std::size_t size() const noexcept { return codes_.size(); }
    std::uint64_t code(std::size_t i) const { return codes_[i]; }
    std::span<const std::uint32_t> neighbours(std::size_t i) const {
        return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
    }
    std::optional<std::size_t> find(std::uint64_t code) const;
    // Per-vertex option indices of a code, and back.
    std::vector<int> decode(std::uint64_t code) const;
    std::uint64_t encode(std::span<const int> options) const;
    // Component id of every state; ids are in order of least member.
    std::vector<std::uint32_t> components(std::size_t* count) const;

private:
    std::vector<std::uint64_t> strides_;
    std::vector<int> radix_;
    std::vector<std::uint64_t> codes_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> targets_;
};

std::optional<int> reconf_distance(const Graph& g, const ListAssignment& L, const Colouring& alpha,
                                   const Colouring& beta, std::uint64_t budget = kDefaultBudget);

struct FrozenCensus {
    std::uint64_t frozen = 0;
    std::uint64_t total = 0;
    double ratio = 0;
    double bound = 0;
    bool ok = false;
};

FrozenCensus frozen_census(const Graph& g, const ListAssignment& L, std::uint64_t budget = kDefaultBudget);

struct SwapEdge {
    Vertex v = 0;
    Vertex w = 0;
    Vertex witness = 0;  // in N[v] \ N[w]; v and w are ordered to make this hold
};

struct SwapSet {
    std::vector<SwapEdge> edges;
};

SwapSet swap_set(const Graph& g);
bool check_swap_injection(const Graph& g, const ListAssignment& L, const SwapSet& s,
                          std::uint64_t budget = kDefaultBudget);

}  // namespace recolor
