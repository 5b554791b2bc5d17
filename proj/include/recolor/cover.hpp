#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "recolor/graph.hpp"
#include "recolor/oracle.hpp"

namespace recolor {

using CrossPairs = std::vector<std::pair<int, int>>;

// Correspondence cover of a base graph. Colour indices are 0-based per vertex;
// cross[{u,v}] with u < v lists the conflicting (index at u, index at v) pairs.
struct Cover {
    Graph base;
    std::vector<int> list_sizes;
    std::map<Edge, CrossPairs> cross;
};

struct CoverCheck {
    bool ok = false;
    std::string violation;
};

CoverCheck validate_cover(const Cover& c);

StateSpace cover_space(const Cover& c);
// Valid choices in lexicographic order.
std::vector<std::vector<int>> cover_colourings(const Cover& c, std::uint64_t budget = kDefaultBudget);
ReconfSummary cover_reconf(const Cover& c, const ExploreOptions& opt = {});

Cover make_straight_cover(const Graph& g, int fold);
// Colours 1 and 2 (indices 0 and 1) twisted on every edge inside the first q vertices.
Cover make_twisted_clique_cover(int n, int q);
// Colours 1 and 2 twisted on every edge of K_n.
Cover make_twist_everywhere_cover(int n);
// Generalized Petersen graph GP(8,3).
Graph mobius_kantor_graph();
// The cover graph without its list cliques, on vertices offset(v) + index.
Graph cross_edge_graph(const Cover& c);
// Cover of K4 whose cross-edge graph is the Moebius-Kantor graph.
Cover make_mobius_kantor_cover();

bool covers_isomorphic(const Cover& a, const Cover& b);

struct CoverClass {
    Cover rep;
    ReconfSummary summary;
    bool bad = false;
};

struct CoverCensus {
    int n = 0;
    int fold = 0;
    std::size_t total_isomorphism_classes = 0;
    std::size_t bad_classes = 0;
    // Only covers whose cross pairs are perfect matchings are enumerated.
    bool full_covers_only = true;
    std::vector<CoverClass> classes;
};

// A cover is bad when its reconfiguration graph has two or more non-singleton components.
bool cover_is_bad(const ReconfSummary& s);

// Full n-fold covers of K_n up to isomorphism, n in {2, 3, 4}. With gauge
// fixing the permutations towards vertex 0 are the identity; without it every
// assignment is enumerated (n <= 3 only).
CoverCensus census_covers(int n, bool gauge = true);

}  // namespace recolor
