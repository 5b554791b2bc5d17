#include "recolor/io.hpp"

#include <algorithm>

namespace recolor::io {

namespace {

int as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw malformed_error(what + " must be an integer");
    return j.get<int>();
}

int vertex_key(const std::string& k, int n, const std::string& what) {
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(k, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != k.size() || v < 0 || v >= n) throw malformed_error(what + " key '" + k + "' is not a vertex id");
    return v;
}

}  // namespace

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw malformed_error(std::string("invalid JSON: ") + e.what());
    }
}

InstanceFile parse_instance(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw malformed_error("instance needs \"n\" and \"edges\"");
    const int n = as_int(j["n"], "n");
    if (n < 0) throw malformed_error("n must be non-negative");
    if (!j["edges"].is_array()) throw malformed_error("edges must be an array");
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw malformed_error("each edge must be a pair [u, v]");
        const int u = as_int(e[0], "edge endpoint"), v = as_int(e[1], "edge endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw malformed_error("edge endpoint out of range or a loop");
        edges.emplace_back(u, v);
    }
    InstanceFile out{Graph::build(n, edges), std::nullopt};
    if (j.contains("lists")) {
        const auto& lj = j["lists"];
        std::vector<std::vector<Colour>> lists(n);
        std::vector<char> seen(n, 0);
        if (!lj.is_object()) throw malformed_error("lists must map vertex ids to colour arrays");
        for (auto it = lj.begin(); it != lj.end(); ++it) {
            const int v = vertex_key(it.key(), n, "lists");
            if (!it.value().is_array()) throw malformed_error("list of vertex " + it.key() + " must be an array");
            for (const auto& c : it.value()) lists[v].push_back(as_int(c, "colour"));
            std::sort(lists[v].begin(), lists[v].end());
            if (std::adjacent_find(lists[v].begin(), lists[v].end()) != lists[v].end())
                throw malformed_error("list of vertex " + it.key() + " repeats a colour");
            seen[v] = 1;
        }
        if (std::count(seen.begin(), seen.end(), 0) != 0) throw malformed_error("lists must cover every vertex");
        out.lists = ListAssignment(std::move(lists));
    }
    return out;
}

json instance_json(const Graph& g, const ListAssignment* lists) {
    json j;
    j["n"] = g.n();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (lists) {
        j["lists"] = json::object();
        for (Vertex v = 0; v < g.n(); ++v) {
            auto l = (*lists)[v];
            j["lists"][std::to_string(v)] = std::vector<Colour>(l.begin(), l.end());
        }
    }
    return j;
}

Colouring parse_colouring(const json& j, int n) {
    Colouring c(n, 0);
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != n) throw malformed_error("colouring array length does not match n");
        for (int v = 0; v < n; ++v) c[v] = as_int(j[v], "colour");
        return c;
    }
    if (!j.is_object()) throw malformed_error("colouring must be a {\"vertex\": colour} map");
    std::vector<char> seen(n, 0);
    for (auto it = j.begin(); it != j.end(); ++it) {
        const int v = vertex_key(it.key(), n, "colouring");
        c[v] = as_int(it.value(), "colour");
        seen[v] = 1;
    }
    if (std::count(seen.begin(), seen.end(), 0) != 0) throw malformed_error("colouring must cover every vertex");
    return c;
}

json colouring_json(const Colouring& c) {
    json j = json::object();
    for (std::size_t v = 0; v < c.size(); ++v) j[std::to_string(v)] = c[v];
    return j;
}

Plan parse_plan(const json& j) {
    const json& arr = j.is_object() && j.contains("plan") ? j["plan"] : j;
    if (!arr.is_array()) throw malformed_error("plan must be an array of steps");
    Plan p;
    for (const auto& s : arr) {
        if (!s.is_object() || !s.contains("vertex") || !s.contains("colour"))
            throw malformed_error("each step needs \"vertex\" and \"colour\"");
        p.push_back({as_int(s["vertex"], "vertex"), as_int(s["colour"], "colour")});
    }
    return p;
}

json plan_json(const Plan& p) {
    json j = json::array();
    for (const Step& s : p) j.push_back({{"vertex", s.vertex}, {"colour", s.colour}});
    return j;
}

json trace_json(const std::vector<TraceEntry>& trace) {
    json j = json::array();
    for (const auto& t : trace) j.push_back({{"lemma", t.lemma}, {"vertices", t.vertices}});
    return j;
}

json summary_json(const ReconfSummary& s) {
    json j;
    j["total"] = s.total_colourings;
    j["frozen"] = s.frozen_count;
    j["non_singleton"] = s.non_singleton_count;
    j["components"] = json::array();
    for (const auto& c : s.components) {
        json cj{{"size", c.size}};
        cj["diameter"] = c.diameter ? json(*c.diameter) : json(nullptr);
        if (c.diameter && !c.diameter_exact) cj["diameter_lower_bound"] = true;
        j["components"].push_back(cj);
    }
    return j;
}

Cover parse_cover(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("fold") || !j.contains("edges"))
        throw malformed_error("cover needs \"n\", \"fold\" and \"edges\"");
    const int n = as_int(j["n"], "n"), fold = as_int(j["fold"], "fold");
    if (n < 1 || fold < 1) throw malformed_error("cover n and fold must be positive");
    if (!j["edges"].is_object()) throw malformed_error("cover edges must map \"u-v\" to index pairs");
    std::vector<Edge> base;
    std::map<Edge, CrossPairs> cross;
    for (auto it = j["edges"].begin(); it != j["edges"].end(); ++it) {
        const std::string& k = it.key();
        const auto dash = k.find('-');
        if (dash == std::string::npos) throw malformed_error("cover edge key '" + k + "' must be \"u-v\"");
        int u = vertex_key(k.substr(0, dash), n, "cover edge"), v = vertex_key(k.substr(dash + 1), n, "cover edge");
        if (u == v) throw malformed_error("cover edge key '" + k + "' is a loop");
        const bool flip = u > v;
        if (flip) std::swap(u, v);
        base.emplace_back(u, v);
        CrossPairs pairs;
        if (!it.value().is_array()) throw malformed_error("cover edge pairs must be an array");
        for (const auto& p : it.value()) {
            if (!p.is_array() || p.size() != 2) throw malformed_error("cover pair must be [i, j]");
            int a = as_int(p[0], "index"), b = as_int(p[1], "index");
            if (flip) std::swap(a, b);
            pairs.emplace_back(a, b);
        }
        std::sort(pairs.begin(), pairs.end());
        cross[{u, v}] = std::move(pairs);
    }
    Cover c;
    c.base = Graph::build(n, base);
    c.list_sizes.assign(n, fold);
    c.cross = std::move(cross);
    return c;
}

json cover_json(const Cover& c) {
    json j;
    j["n"] = c.base.n();
    j["fold"] = c.list_sizes.empty() ? 0 : *std::max_element(c.list_sizes.begin(), c.list_sizes.end());
    j["edges"] = json::object();
    for (auto [u, v] : c.base.edges()) {
        json pairs = json::array();
        if (auto it = c.cross.find({u, v}); it != c.cross.end())
            for (auto [a, b] : it->second) pairs.push_back({a, b});
        j["edges"][std::to_string(u) + "-" + std::to_string(v)] = pairs;
    }
    return j;
}

json census_json(const CoverCensus& c) {
    json j;
    j["n"] = c.n;
    j["fold"] = c.fold;
    j["classes"] = c.total_isomorphism_classes;
    j["bad"] = c.bad_classes;
    j["full_covers_only"] = c.full_covers_only;
    j["representatives"] = json::array();
    for (const auto& cls : c.classes) {
        json r = cover_json(cls.rep);
        r["summary"] = summary_json(cls.summary);
        r["bad"] = cls.bad;
        j["representatives"].push_back(r);
    }
    return j;
}

}  // namespace recolor::io
