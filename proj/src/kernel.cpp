#include "recolor/kernel.hpp"

#include <algorithm>
#include <string>

namespace recolor {

namespace {

std::string vs(int x) { return std::to_string(x); }

bool used_on_neighbours(const Graph& g, const Colouring& c, Vertex v, Colour col) {
    for (Vertex u : g.neighbours(v))
        if (c[u] == col) return true;
    return false;
}

void check_step(const Graph& g, const ListAssignment& L, const Colouring& c, Step s) {
    if (s.vertex < 0 || s.vertex >= g.n())
        throw StepError(StepFault::vertex_out_of_range, "vertex " + vs(s.vertex) + " is out of range");
    if (!L.contains(s.vertex, s.colour))
        throw StepError(StepFault::colour_not_in_list,
                        "colour " + vs(s.colour) + " is not in the list of vertex " + vs(s.vertex));
    if (c[s.vertex] == s.colour)
        throw StepError(StepFault::no_op,
                        "vertex " + vs(s.vertex) + " already has colour " + vs(s.colour));
    for (Vertex u : g.neighbours(s.vertex))
        if (c[u] == s.colour)
            throw StepError(StepFault::neighbour_conflict, "colour " + vs(s.colour) + " is used on neighbour " +
                                                               vs(u) + " of vertex " + vs(s.vertex));
}

}  // namespace

bool vertex_frozen(const Graph& g, const ListAssignment& L, const Colouring& c, Vertex v) {
    for (Colour col : L[v])
        if (col != c[v] && !used_on_neighbours(g, c, v, col)) return false;
    return true;
}

bool colouring_proper(const Graph& g, const ListAssignment& L, const Colouring& c) {
    if (static_cast<int>(c.size()) != g.n()) return false;
    for (Vertex v = 0; v < g.n(); ++v)
        if (!L.contains(v, c[v])) return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

bool colouring_unfrozen(const Graph& g, const ListAssignment& L, const Colouring& c) {
    for (Vertex v = 0; v < g.n(); ++v)
        if (!vertex_frozen(g, L, c, v)) return true;
    return false;
}

ColouringStatus colouring_status(const Graph& g, const ListAssignment& L, const Colouring& c) {
    ColouringStatus s;
    s.proper = colouring_proper(g, L, c);
    for (Vertex v = 0; v < g.n(); ++v)
        if (vertex_frozen(g, L, c, v)) s.frozen_vertices.push_back(v);
    s.is_frozen = static_cast<int>(s.frozen_vertices.size()) == g.n();
    return s;
}

const char* to_string(StepFault f) noexcept {
    switch (f) {
        case StepFault::vertex_out_of_range: return "vertex_out_of_range";
        case StepFault::colour_not_in_list: return "colour_not_in_list";
        case StepFault::neighbour_conflict: return "neighbour_conflict";
        case StepFault::no_op: return "no_op";
    }
    return "unknown";
}

Colouring apply_step(const Graph& g, const ListAssignment& L, const Colouring& c, Step s) {
    check_step(g, L, c, s);
    Colouring out = c;
    out[s.vertex] = s.colour;
    return out;
}

void apply_step_inplace(const Graph& g, const ListAssignment& L, Colouring& c, Step s) {
    check_step(g, L, c, s);
    c[s.vertex] = s.colour;
}

Verification verify_plan(const Graph& g, const ListAssignment& L, const Colouring& start, const Plan& plan) {
    Verification r;
    r.end = start;
    if (!colouring_proper(g, L, start)) {
        r.reason = "start colouring is not proper";
        return r;
    }
    for (std::size_t i = 0; i < plan.size(); ++i) {
        try {
            apply_step_inplace(g, L, r.end, plan[i]);
        } catch (const StepError& e) {
            r.failing_index = i;
            r.reason = e.what();
            return r;
        }
    }
    r.ok = true;
    return r;
}

Restriction restrict(const Graph& g, const ListAssignment& L, const Colouring& c, std::span<const Vertex> W) {
    if (W.empty()) throw domain_error("restriction to an empty vertex set");
    std::vector<Vertex> w(W.begin(), W.end());
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    if (w.front() < 0 || w.back() >= g.n()) throw domain_error("restriction set leaves the vertex range");
    std::vector<int> index(g.n(), -1);
    for (int i = 0; i < static_cast<int>(w.size()); ++i) index[w[i]] = i;

    std::vector<Edge> edges;
    std::vector<std::vector<Colour>> lists;
    Colouring col;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        Vertex v = w[i];
        std::vector<Colour> l;
        for (Colour x : L[v]) {
            bool removed = false;
            for (Vertex u : g.neighbours(v))
                if (index[u] < 0 && c[u] == x) removed = true;
            if (!removed) l.push_back(x);
        }
        lists.push_back(std::move(l));
        col.push_back(c[v]);
        for (Vertex u : g.neighbours(v))
            if (index[u] > i) edges.emplace_back(i, index[u]);
    }
    return {Graph::build(static_cast<int>(w.size()), edges), ListAssignment(std::move(lists)), std::move(col),
            std::move(w)};
}

Plan lift_plan(const Restriction& r, const Plan& plan) {
    Plan out;
    out.reserve(plan.size());
    for (Step s : plan) out.push_back({r.to_parent[s.vertex], s.colour});
    return out;
}

Colouring project(const Restriction& r, const Colouring& parent) {
    Colouring out;
    for (Vertex v : r.to_parent) out.push_back(parent[v]);
    return out;
}

Plan reverse_plan(const Colouring& start, const Plan& plan) {
    Colouring c = start;
    std::vector<Colour> before;
    before.reserve(plan.size());
    for (Step s : plan) {
        before.push_back(c[s.vertex]);
        c[s.vertex] = s.colour;
    }
    Plan out;
    out.reserve(plan.size());
    for (std::size_t i = plan.size(); i-- > 0;) out.push_back({plan[i].vertex, before[i]});
    return out;
}

Walker::Walker(const Graph& g, const ListAssignment& L, Colouring start) : g_(&g), L_(&L), c_(std::move(start)) {}

bool Walker::available(Vertex v, Colour col) const {
    return col != c_[v] && L_->contains(v, col) && !used_on_neighbours(*g_, c_, v, col);
}

std::optional<Colour> Walker::least_free(Vertex v, std::optional<Colour> avoid) const {
    for (Colour col : (*L_)[v])
        if (col != avoid && available(v, col)) return col;
    return std::nullopt;
}

void Walker::move(Vertex v, Colour col) {
    apply_step_inplace(*g_, *L_, c_, {v, col});
    plan_.push_back({v, col});
}

Colour Walker::recolour_any(Vertex v, std::optional<Colour> avoid) {
    auto col = least_free(v, avoid);
    if (!col) throw domain_error("vertex " + vs(v) + " has no free colour");
    move(v, *col);
    return *col;
}

void Walker::append(const Plan& p) {
    for (Step s : p) move(s.vertex, s.colour);
}

namespace {

void check_path(const Graph& g, std::span<const Vertex> path) {
    if (path.empty()) throw domain_error("empty path");
    for (Vertex v : path)
        if (v < 0 || v >= g.n()) throw domain_error("path vertex " + vs(v) + " is out of range");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1]))
            throw domain_error("path is broken between " + vs(path[i]) + " and " + vs(path[i + 1]));
}

}  // namespace

void push_along(Walker& wk, std::span<const Vertex> path) {
    if (wk.frozen(path.front())) throw domain_error("path start " + vs(path.front()) + " is frozen");
    int last = -1;
    while (true) {
        int i = static_cast<int>(path.size()) - 1;
        while (i >= 0 && wk.frozen(path[i])) --i;
        if (i == static_cast<int>(path.size()) - 1) return;
        if (i <= last) throw domain_error("unfreezing stalled at path vertex " + vs(path[i + 1]));
        last = i;
        wk.recolour_any(path[i]);
    }
}

Plan push_unfreeze(const Graph& g, const ListAssignment& L, const Colouring& c, std::span<const Vertex> path) {
    check_path(g, path);
    auto d = g.distances_from(path.front());
    if (d[path.back()] != static_cast<int>(path.size()) - 1) throw domain_error("path is not a shortest path");
    Walker wk(g, L, c);
    push_along(wk, path);
    return wk.take();
}

namespace {

ClearResult clear_on(Walker& wk, Vertex w, Colour target) {
    const Graph& g = wk.graph();
    ClearResult r;
    if (wk[w] == target) {
        r.achieved = true;
        return r;
    }
    std::vector<Vertex> b1, b2;
    for (Vertex u : g.neighbours(w))
        if (wk[u] == target) (wk.frozen(u) ? b2 : b1).push_back(u);
    for (Vertex u : b1) wk.recolour_any(u);
    if (!b2.empty()) {
        if (wk.frozen(w)) {
            if (b2.size() == 1) r.blocker = b2.front();
            return r;
        }
        wk.recolour_any(w, target);
        for (Vertex u : b2) wk.recolour_any(u);
    }
    wk.move(w, target);
    r.achieved = true;
    return r;
}

}  // namespace

ClearResult clear_bad_neighbours(const Graph& g, const ListAssignment& L, const Colouring& c, Vertex w,
                                 Colour target) {
    if (w < 0 || w >= g.n()) throw domain_error("vertex " + vs(w) + " is out of range");
    if (!L.contains(w, target))
        throw domain_error("target colour " + vs(target) + " is not in the list of vertex " + vs(w));
    Walker wk(g, L, c);
    ClearResult r = clear_on(wk, w, target);
    r.plan = wk.take();
    return r;
}

Plan fix_leaf(const Graph& g, const ListAssignment& L, const Colouring& c, Vertex v, Vertex w, Colour target) {
    if (v < 0 || v >= g.n() || w < 0 || w >= g.n()) throw domain_error("vertex out of range");
    if (L.list_size(v) < g.degree(v) + 2)
        throw domain_error("vertex " + vs(v) + " has surplus below 2");
    if (!L.contains(w, target))
        throw domain_error("target colour " + vs(target) + " is not in the list of vertex " + vs(w));
    Walker wk(g, L, c);
    ClearResult cr = clear_on(wk, w, target);
    if (cr.achieved) return wk.take();
    if (!cr.blocker) throw domain_error("vertex " + vs(w) + " is frozen with several frozen bad neighbours");
    const Vertex x = *cr.blocker;
    const auto P = shortest_path(g, v, w);
    const int d = static_cast<int>(P.size()) - 1;
    const Vertex wp = P[d - 1];
    const auto dv = g.distances_from(v);

    if (dv[x] == d - 1) {
        // x lies on P or can replace its penultimate vertex.
        auto Q = shortest_path(g, v, x);
        push_along(wk, Q);
        wk.recolour_any(x);
    } else if (g.adjacent(x, wp)) {
        push_along(wk, std::span<const Vertex>(P.data(), d));
        wk.recolour_any(wp);
        wk.recolour_any(x);
    } else {
        push_along(wk, P);
        wk.recolour_any(w, target);
        wk.recolour_any(x);
        if (wk[wp] == target) {
            if (wk.frozen(wp)) push_along(wk, std::span<const Vertex>(P.data(), d));
            wk.recolour_any(wp);
        }
    }
    wk.move(w, target);
    return wk.take();
}

}  // namespace recolor
