#include "common.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace recolor::detail {

Ctx Ctx::root(std::vector<TraceEntry>& t, int n) {
    Ctx c;
    c.trace = &t;
    c.ids = all_vertices(n);
    return c;
}

Ctx Ctx::sub(std::span<const Vertex> to_parent) const {
    Ctx c;
    c.trace = trace;
    c.depth = depth + 1;
    for (Vertex v : to_parent) c.ids.push_back(ids[v]);
    return c;
}

void Ctx::note(std::string lemma, std::span<const Vertex> local) const {
    if (!trace) return;
    TraceEntry e{std::move(lemma), {}};
    for (Vertex v : local) e.vertices.push_back(ids[v]);
    std::sort(e.vertices.begin(), e.vertices.end());
    trace->push_back(std::move(e));
}

void Ctx::note(std::string lemma, std::initializer_list<Vertex> local) const {
    note(std::move(lemma), std::span<const Vertex>(local.begin(), local.size()));
}

std::string vname(Vertex v) { return std::to_string(v); }

Colouring replay(Colouring c, const Plan& p) {
    for (Step s : p) c[s.vertex] = s.colour;
    return c;
}

void append(Plan& dst, const Plan& src) { dst.insert(dst.end(), src.begin(), src.end()); }

Plan meet(const Plan& a_to_gamma, const Colouring& b, const Plan& b_to_gamma) {
    Plan out = a_to_gamma;
    append(out, reverse_plan(b, b_to_gamma));
    return out;
}

std::vector<Vertex> all_vertices(int n) {
    std::vector<Vertex> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::vector<Vertex> minus(int n, std::span<const Vertex> removed) {
    std::vector<char> gone(n, 0);
    for (Vertex r : removed) gone[r] = 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (!gone[v]) out.push_back(v);
    return out;
}

bool is_unfrozen(const Graph& g, const ListAssignment& L, const Colouring& c) { return colouring_unfrozen(g, L, c); }

bool has_surplus_two(const Graph& g, const ListAssignment& L) {
    for (Vertex v = 0; v < g.n(); ++v)
        if (L.list_size(v) >= g.degree(v) + 2) return true;
    return false;
}

int union_size(const ListAssignment& L, std::span<const Vertex> W) {
    std::vector<Colour> all;
    for (Vertex v : W) all.insert(all.end(), L[v].begin(), L[v].end());
    std::sort(all.begin(), all.end());
    return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

Colouring extend(const Graph& g, const ListAssignment& L, Colouring partial) {
    for (Vertex v = 0; v < g.n(); ++v) {
        if (partial[v] != kNone) continue;
        for (Colour c : L[v]) {
            bool clash = false;
            for (Vertex u : g.neighbours(v))
                if (partial[u] == c) clash = true;
            if (!clash) {
                partial[v] = c;
                break;
            }
        }
        if (partial[v] == kNone) throw PlanGap("cannot extend a partial colouring at vertex " + vname(v));
    }
    return partial;
}

Plan unfreeze_at(const Graph& g, const ListAssignment& L, const Colouring& c, Vertex v) {
    auto d = g.distances_from(v);
    Vertex z = -1;
    for (Vertex u = 0; u < g.n(); ++u)
        if (d[u] >= 0 && !vertex_frozen(g, L, c, u) && (z < 0 || d[u] < d[z])) z = u;
    if (z < 0) throw PlanGap("no unfrozen vertex can reach vertex " + vname(v));
    auto path = shortest_path(g, z, v);
    return push_unfreeze(g, L, c, path);
}

std::optional<Colour> least_outside(std::span<const Colour> a, std::span<const Colour> b) {
    for (Colour c : a)
        if (!std::binary_search(b.begin(), b.end(), c)) return c;
    return std::nullopt;
}

bool free_up(Walker& wk, Vertex mover, Vertex target) {
    if (!wk.frozen(target)) return true;
    const Graph& g = wk.graph();
    for (Colour c : wk.lists()[mover]) {
        if (!wk.available(mover, c)) continue;
        Colouring trial = wk.colouring();
        trial[mover] = c;
        if (!vertex_frozen(g, wk.lists(), trial, target)) {
            wk.move(mover, c);
            return true;
        }
    }
    if (wk.least_free(mover)) wk.recolour_any(mover);
    return !wk.frozen(target);
}

Plan solve_on(const Graph& g, const ListAssignment& L, const Colouring& cur, std::span<const Vertex> W,
              const Colouring& target, const Ctx& ctx, const Solver& solve) {
    Restriction r = restrict(g, L, cur, W);
    Colouring t = project(r, target);
    if (!colouring_proper(r.graph, r.lists, t)) throw PlanGap("target is not a colouring of the restricted instance");
    Ctx sc = ctx.sub(r.to_parent);
    return lift_plan(r, solve(r.graph, r.lists, r.colouring, t, sc));
}

Plan key_on(const Graph& g, const ListAssignment& L, const Colouring& cur, std::span<const Vertex> W,
           const Colouring& target, const Ctx& ctx) {
    return solve_on(g, L, cur, W, target, ctx, key_lemma_core);
}

Plan route_on(const Graph& g, const ListAssignment& L, const Colouring& cur, std::span<const Vertex> W,
             const Colouring& target, const Ctx& ctx) {
    return solve_on(g, L, cur, W, target, ctx, route);
}

namespace {

Plan key_lemma_connected(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b) {
    Vertex root = -1;
    for (Vertex v = 0; v < g.n() && root < 0; ++v)
        if (L.list_size(v) >= g.degree(v) + 2) root = v;
    if (root < 0) throw PlanGap("no vertex with surplus 2 for the Key Lemma");
    auto d = g.distances_from(root);
    std::vector<Vertex> order = all_vertices(g.n());
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return d[x] > d[y]; });

    Colouring cur = a;
    Plan out;
    std::vector<Vertex> remaining = all_vertices(g.n());
    for (Vertex w : order) {
        Restriction r = restrict(g, L, cur, remaining);
        auto local = [&](Vertex x) {
            return static_cast<Vertex>(std::lower_bound(r.to_parent.begin(), r.to_parent.end(), x) -
                                       r.to_parent.begin());
        };
        Plan p = lift_plan(r, fix_leaf(r.graph, r.lists, r.colouring, local(root), local(w), b[w]));
        cur = replay(std::move(cur), p);
        append(out, p);
        remaining.erase(std::find(remaining.begin(), remaining.end(), w));
    }
    return out;
}

}  // namespace

Plan key_lemma_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    auto comps = g.components_without({});
    if (comps.size() == 1) {
        ctx.note("key_lemma", comps[0]);
        return key_lemma_connected(g, L, a, b);
    }
    Plan out;
    Colouring cur = a;
    for (const auto& comp : comps) {
        bool same = true;
        for (Vertex v : comp) same = same && cur[v] == b[v];
        if (same) continue;
        Plan p = solve_on(g, L, cur, comp, b, ctx, key_lemma_core);
        cur = replay(std::move(cur), p);
        append(out, p);
    }
    return out;
}

Plan twomatch(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Vertex w1, Vertex w2,
              const Ctx& ctx) {
    if (a[w1] != b[w1] || a[w2] != b[w2] || a[w1] != a[w2])
        throw PlanGap("twomatch pair is not coloured alike in both colourings");
    ctx.note("twomatch", {w1, w2});
    const Vertex pair[] = {w1, w2};
    return solve_on(g, L, a, minus(g.n(), pair), b, ctx, key_lemma_core);
}

Plan local_search(const Graph& g, const ListAssignment& L, const Colouring& cur, std::span<const Vertex> window,
                  const std::function<bool(const Colouring&)>& goal, const Ctx& ctx, const std::string& why) {
    ctx.note("local_search:" + why, window);
    if (goal(cur)) return {};
    constexpr std::size_t kCap = 200000;
    std::map<Colouring, std::pair<Colouring, Step>> parent;
    std::deque<Colouring> queue{cur};
    parent.emplace(cur, std::make_pair(cur, Step{-1, -1}));
    while (!queue.empty()) {
        Colouring c = std::move(queue.front());
        queue.pop_front();
        for (Vertex v : window) {
            for (Colour col : L[v]) {
                if (col == c[v]) continue;
                bool clash = false;
                for (Vertex u : g.neighbours(v))
                    if (c[u] == col) clash = true;
                if (clash) continue;
                Colouring nxt = c;
                nxt[v] = col;
                if (parent.count(nxt)) continue;
                parent.emplace(nxt, std::make_pair(c, Step{v, col}));
                if (goal(nxt)) {
                    Plan p;
                    Colouring at = nxt;
                    while (at != cur) {
                        const auto& [prev, s] = parent.at(at);
                        p.push_back(s);
                        at = prev;
                    }
                    std::reverse(p.begin(), p.end());
                    return p;
                }
                if (parent.size() > kCap) throw PlanGap("local search exhausted its budget: " + why);
                queue.push_back(std::move(nxt));
            }
        }
    }
    throw PlanGap("local search found no suitable colouring: " + why);
}

std::optional<Colouring> first_completion(const Graph& g, const ListAssignment& L, const Colouring& base,
                                          std::span<const Vertex> free,
                                          const std::function<bool(const Colouring&)>& accept) {
    Colouring c = base;
    std::vector<char> pending(g.n(), 0);
    for (Vertex v : free) pending[v] = 1;
    std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
        if (i == free.size()) return accept(c);
        Vertex v = free[i];
        for (Colour col : L[v]) {
            bool clash = false;
            for (Vertex u : g.neighbours(v))
                if (!pending[u] && c[u] == col) clash = true;
            if (clash) continue;
            c[v] = col;
            pending[v] = 0;
            if (go(i + 1)) return true;
            pending[v] = 1;
        }
        c[v] = base[v];
        return false;
    };
    if (go(0)) return c;
    return std::nullopt;
}

PlanOutcome finish(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Plan plan,
                   std::vector<TraceEntry> trace) {
    Verification v = verify_plan(g, L, a, plan);
    if (!v.ok) throw std::logic_error("internal planner error: emitted plan fails at step " +
                                      std::to_string(v.failing_index.value_or(0)) + ": " + v.reason);
    if (v.end != b) throw std::logic_error("internal planner error: plan does not reach the target colouring");
    return {std::move(plan), std::move(v.end), std::move(trace)};
}

void require_instance(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b) {
    if (L.size() != g.n()) throw domain_error("list assignment does not cover every vertex");
    if (static_cast<int>(a.size()) != g.n() || static_cast<int>(b.size()) != g.n())
        throw domain_error("colouring does not cover every vertex");
    if (!g.connected()) throw domain_error("graph is not connected");
    if (!colouring_proper(g, L, a)) throw domain_error("start colouring is not a proper L-colouring");
    if (!colouring_proper(g, L, b)) throw domain_error("target colouring is not a proper L-colouring");
}

void require_one_plus(const Graph& g, const ListAssignment& L) {
    for (Vertex v = 0; v < g.n(); ++v)
        if (L.list_size(v) < g.degree(v) + 1)
            throw domain_error("list of vertex " + vname(v) + " is smaller than its degree plus one");
}

std::vector<Vertex> walk_order(const Graph& g) {
    std::vector<Vertex> order;
    if (g.n() == 0) return order;
    Vertex start = 0;
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) == 1) {
            start = v;
            break;
        }
    std::vector<char> seen(g.n(), 0);
    Vertex cur = start;
    while (true) {
        order.push_back(cur);
        seen[cur] = 1;
        Vertex next = -1;
        for (Vertex u : g.neighbours(cur))
            if (!seen[u]) {
                next = u;
                break;
            }
        if (next < 0) break;
        cur = next;
    }
    return order;
}

namespace {

// Path from `from` through `first` while degrees stay 2; ends at a leaf.
std::vector<Vertex> tail_from(const Graph& g, Vertex from, Vertex first) {
    std::vector<Vertex> t{from, first};
    Vertex prev = from, cur = first;
    while (g.degree(cur) == 2) {
        Vertex nxt = g.neighbours(cur)[0] == prev ? g.neighbours(cur)[1] : g.neighbours(cur)[0];
        t.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    return t;
}

}  // namespace

std::optional<ClawShape> as_subdivided_claw(const Graph& g) {
    if (g.n() < 4 || g.edge_count() != g.n() - 1 || !g.connected()) return std::nullopt;
    Vertex centre = -1;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) > 3) return std::nullopt;
        if (g.degree(v) == 3) {
            if (centre >= 0) return std::nullopt;
            centre = v;
        }
    }
    if (centre < 0) return std::nullopt;
    std::vector<Vertex> leaves, other;
    for (Vertex u : g.neighbours(centre)) (g.degree(u) == 1 ? leaves : other).push_back(u);
    if (leaves.size() < 2) return std::nullopt;
    ClawShape s{centre, leaves[0], leaves[1], -1, {}};
    s.w3 = other.empty() ? leaves[2] : other[0];
    s.tail = tail_from(g, centre, s.w3);
    if (g.degree(s.tail.back()) != 1) return std::nullopt;
    return s;
}

std::optional<PawShape> as_subdivided_paw(const Graph& g) {
    if (g.n() < 4 || g.edge_count() != g.n() || !g.connected()) return std::nullopt;
    Vertex centre = -1;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) > 3) return std::nullopt;
        if (g.degree(v) == 3) {
            if (centre >= 0) return std::nullopt;
            centre = v;
        }
    }
    if (centre < 0) return std::nullopt;
    auto nb = g.neighbours(centre);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Vertex w1 = nb[i], w2 = nb[j];
            if (!g.adjacent(w1, w2) || g.degree(w1) != 2 || g.degree(w2) != 2) continue;
            Vertex w3 = nb[3 - i - j];
            PawShape s{centre, w1, w2, w3, tail_from(g, centre, w3)};
            if (g.degree(s.tail.back()) != 1) return std::nullopt;
            return s;
        }
    return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> two_connected_edge(const Graph& g, const ListAssignment& L) {
    for (Vertex v = 0; v < g.n(); ++v) {
        const Vertex rm[] = {v};
        bool checked = false, ok = false;
        for (Vertex w : g.neighbours(v)) {
            if (is_subset(L[v], L[w])) continue;
            if (!checked) {
                ok = g.connected_without(rm);
                checked = true;
            }
            if (ok) return std::make_pair(v, w);
            break;
        }
    }
    return std::nullopt;
}

}  // namespace recolor::detail
