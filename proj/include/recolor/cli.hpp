#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "recolor/graph.hpp"

namespace recolor {

enum class ListPolicy { deg1_shared, deg1_disjoint_extra, uniform };

struct ListSpec {
    ListPolicy policy = ListPolicy::deg1_shared;
    // Colour count for uniform; number of extra colours for deg1_disjoint_extra.
    int k = 1;
    Vertex extra_vertex = 0;
    // Reject uniform k below Delta + 1.
    bool strict = false;
};

ListPolicy parse_list_policy(const std::string& name);

// deg1-shared: {1..deg(v)+1}. uniform: {1..k}. deg1-disjoint-extra: deg1-shared
// with k colours above the shared palette added at extra_vertex.
ListAssignment synthesize_lists(const Graph& g, const ListSpec& spec);

// Exit codes: 0 success, 1 domain rejection, 2 malformed input, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace recolor
