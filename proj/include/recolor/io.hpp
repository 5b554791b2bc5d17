#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "recolor/cover.hpp"
#include "recolor/kernel.hpp"
#include "recolor/oracle.hpp"
#include "recolor/planner.hpp"

namespace recolor::io {

using nlohmann::json;

struct InstanceFile {
    Graph graph;
    std::optional<ListAssignment> lists;
};

// All parsers throw malformed_error on shape or type problems.
InstanceFile parse_instance(const json& j);
json instance_json(const Graph& g, const ListAssignment* lists);

// Accepts {"vertex": colour} maps and plain arrays.
Colouring parse_colouring(const json& j, int n);
json colouring_json(const Colouring& c);

// Accepts a bare step array or a plan report carrying "plan".
Plan parse_plan(const json& j);
json plan_json(const Plan& p);
json trace_json(const std::vector<TraceEntry>& trace);

json summary_json(const ReconfSummary& s);

Cover parse_cover(const json& j);
json cover_json(const Cover& c);
json census_json(const CoverCensus& c);

json parse_text(const std::string& text);

}  // namespace recolor::io
