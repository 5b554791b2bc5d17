#include <algorithm>

#include "common.hpp"

namespace recolor::detail {

namespace {

Vertex ring_at(const std::vector<Vertex>& r, int i) {
    const int n = static_cast<int>(r.size());
    return r[((i % n) + n) % n];
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// b(v_i) is missing from L(v_{i+1}); a is unfrozen.
Plan cycle_case_one(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b,
                    const std::vector<Vertex>& ring, int i, const Ctx& ctx) {
    const int n = g.n();
    const Vertex vi = ring_at(ring, i);
    const Colour t = b[vi];
    Walker wk(g, L, a);
    if (wk[vi] != t && !wk.available(vi, t)) {
        // t sits on v_{i-1}; unfreeze it from the nearest unfrozen vertex behind it.
        auto nearest = [&]() -> int {
            for (int k = 1; k < n; ++k)
                if (!wk.frozen(ring_at(ring, i - k))) return k;
            return -1;
        };
        int k = nearest();
        if (k < 0) {
            if (wk.frozen(vi)) throw PlanGap("cycle colouring is frozen");
            wk.recolour_any(vi, t);
            k = nearest();
        }
        if (k < 0) throw PlanGap("cycle has no unfrozen vertex behind " + vname(vi));
        std::vector<Vertex> path;
        for (int s = k; s >= 1; --s) path.push_back(ring_at(ring, i - s));
        push_along(wk, path);
        wk.recolour_any(ring_at(ring, i - 1), t);
    }
    if (wk[vi] != t) wk.move(vi, t);
    Plan p = wk.take();
    const Vertex rm[] = {vi};
    append(p, key_on(g, L, replay(a, p), minus(n, rm), b, ctx));
    return p;
}

// a(v_i) is missing from L(v_{i+1}) and a(v_{i+1}) from L(v_i).
Plan path_proc(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b,
               const std::vector<Vertex>& order, int i, const Ctx& ctx) {
    const int n = static_cast<int>(order.size());
    auto at = [&](int j) { return order[j]; };
    Plan mv = unfreeze_at(g, L, b, at(i));
    const Colouring bp = replay(b, mv);
    Colouring cur = a;
    Plan out;

    // Least colour of u's list avoiding the two given colours.
    auto pick = [&](Vertex u, Colour keep, Colour x, Colour y) {
        if (keep != x && keep != y) return keep;
        for (Colour c : L[u])
            if (c != x && c != y) return c;
        throw PlanGap("no colour for path vertex " + vname(u));
    };

    {
        std::vector<Vertex> W(order.begin() + i + 1, order.end());
        Colouring t = cur;
        for (int j = i + 3; j < n; ++j) t[at(j)] = bp[at(j)];
        if (i + 2 < n) t[at(i + 2)] = pick(at(i + 2), t[at(i + 2)], t[at(i + 1)], i + 3 < n ? t[at(i + 3)] : kNone);
        Plan p = key_on(g, L, cur, W, t, ctx);
        cur = replay(std::move(cur), p);
        append(out, p);
    }
    {
        std::vector<Vertex> W(order.begin(), order.begin() + i + 1);
        Colouring t = cur;
        for (int j = 0; j <= i - 3; ++j) t[at(j)] = bp[at(j)];
        if (i - 1 >= 0) t[at(i - 1)] = pick(at(i - 1), t[at(i - 1)], t[at(i)], i - 2 >= 0 ? t[at(i - 2)] : kNone);
        Plan p = key_on(g, L, cur, W, t, ctx);
        cur = replay(std::move(cur), p);
        append(out, p);
    }

    // Only v_{i-1}..v_{i+2} differ from bp now. Walk bp to cur, then reverse.
    const Colouring& as = cur;
    const Vertex u1 = i >= 1 ? at(i - 1) : -1, u2 = at(i), u3 = at(i + 1);
    Walker e(g, L, bp);
    if (u1 >= 0 && e[u1] == as[u2]) {
        if (e.frozen(u1)) e.recolour_any(u2);
        e.recolour_any(u1);
    }
    if (e[u2] != as[u2]) e.move(u2, as[u2]);
    if (u1 >= 0 && e[u1] != as[u1]) e.move(u1, as[u1]);
    Plan E = e.take();
    std::vector<Vertex> tailW{u3};
    if (i + 2 < n) tailW.push_back(at(i + 2));
    append(E, key_on(g, L, replay(bp, E), tailW, as, ctx));
    append(out, reverse_plan(bp, E));
    append(out, reverse_plan(b, mv));
    return out;
}

// Tail of a subdivided claw: match bp beyond w3 and keep v unfrozen.
Plan claw_tail(const Graph& g, const ListAssignment& L, const Colouring& cur, const Colouring& bp, const ClawShape& s,
               const Ctx& ctx) {
    const int n = g.n();
    const Vertex v = s.centre, w1 = s.w1, w2 = s.w2, w3 = s.w3;
    auto c = least_outside(L[v], L[w3]);
    if (!c) throw PlanGap("claw centre list lies inside the list of its path neighbour");
    std::vector<Vertex> rest(s.tail.begin() + 2, s.tail.end());

    if (cur[w1] == *c && cur[w2] == *c) {
        Colouring gamma(n, kNone);
        for (Vertex r : rest) gamma[r] = bp[r];
        gamma[w1] = cur[w1];
        gamma[w2] = cur[w2];
        gamma = extend(g, L, gamma);
        const Vertex rm[] = {w1, w2};
        return key_on(g, L, cur, minus(n, rm), gamma, ctx);
    }
    Walker wk(g, L, cur);
    for (Vertex leaf : {w1, w2})
        if (wk[leaf] == *c) {
            if (wk.frozen(leaf)) free_up(wk, v, leaf);
            wk.recolour_any(leaf);
        }
    if (wk[v] != *c) wk.move(v, *c);
    Plan p = wk.take();
    Colouring now = replay(cur, p);
    Colouring gamma(n, kNone);
    for (Vertex r : rest) gamma[r] = bp[r];
    for (Vertex x : {v, w1, w2}) gamma[x] = now[x];
    gamma = extend(g, L, gamma);
    const Vertex rm[] = {v, w1, w2};
    Plan q = key_on(g, L, now, minus(n, rm), gamma, ctx);
    now = replay(std::move(now), q);
    append(p, q);
    Walker fin(g, L, now);
    if (fin.frozen(v)) fin.recolour_any(w3);
    append(p, fin.take());
    return p;
}

// K_{1,3} with the centre unfrozen in both colourings.
Plan claw13(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    Vertex v = 0;
    while (g.degree(v) != 3) ++v;
    auto leaves = std::vector<Vertex>(g.neighbours(v).begin(), g.neighbours(v).end());
    for (Vertex wk : leaves) {
        auto c = least_outside(L[wk], L[v]);
        if (!c) continue;
        Walker w(g, L, a);
        if (L.contains(v, w[wk])) w.move(wk, *c);
        Plan p = w.take();
        Colouring now = replay(a, p);
        const Vertex rm[] = {wk};
        Plan q = route_on(g, L, now, minus(4, rm), b, ctx);
        now = replay(std::move(now), q);
        append(p, q);
        if (now[wk] != b[wk]) p.push_back({wk, b[wk]});
        return p;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (a[leaves[i]] != a[leaves[j]]) continue;
            const Vertex wk = leaves[3 - i - j];
            Colouring t = a;
            t[wk] = b[wk];
            if (t[v] == b[wk]) {
                t[v] = kNone;
                for (Colour c : L[v])
                    if (c != b[wk] && c != a[leaves[i]]) {
                        t[v] = c;
                        break;
                    }
            }
            const std::vector<Vertex> W = sorted({v, wk});
            Plan p = key_on(g, L, a, W, t, ctx);
            Colouring now = replay(a, p);
            const Vertex rm[] = {wk};
            append(p, route_on(g, L, now, minus(4, rm), b, ctx));
            return p;
        }
    throw PlanGap("claw centre is frozen");
}

// K_{1,3}+e with the centre unfrozen in both colourings.
Plan paw_base(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    Vertex v = -1, w3 = -1;
    std::vector<Vertex> pair;
    for (Vertex x = 0; x < 4; ++x) {
        if (g.degree(x) == 3) v = x;
        else if (g.degree(x) == 1) w3 = x;
        else pair.push_back(x);
    }
    Vertex w1 = pair[0], w2 = pair[1];
    Walker wk(g, L, a);
    if (wk.frozen(v)) throw PlanGap("paw centre is frozen");
    if (wk.frozen(w3)) free_up(wk, v, w3);
    const std::vector<Vertex> tri = sorted({v, w1, w2});
    auto tri_union = [&] {
        std::vector<Colour> u(L[w1].begin(), L[w1].end());
        u.insert(u.end(), L[w2].begin(), L[w2].end());
        for (Colour c : L[v])
            if (c != wk[w3]) u.push_back(c);
        std::sort(u.begin(), u.end());
        return static_cast<int>(std::unique(u.begin(), u.end()) - u.begin());
    };
    if (tri_union() <= 3) {
        if (wk.frozen(w3)) throw PlanGap("paw pendant vertex is frozen");
        wk.recolour_any(w3);
    }
    if (b[w2] == wk[v]) std::swap(w1, w2);
    Colouring target = wk.colouring();
    target[w2] = b[w2];
    target[w1] = kNone;
    for (Colour c : L[w1])
        if (c != target[v] && c != target[w2]) {
            target[w1] = c;
            break;
        }
    if (target[w1] == kNone) throw PlanGap("no colour for the paw triangle");
    Plan p = wk.take();
    Colouring now = replay(a, p);
    Plan q = solve_on(g, L, now, tri, target, ctx, clique_core);
    now = replay(std::move(now), q);
    append(p, q);
    const Vertex rm[] = {w2};
    append(p, route_on(g, L, now, minus(4, rm), b, ctx));
    return p;
}

// Tail of a subdivided paw: match bp beyond w3 and keep v unfrozen.
Plan paw_tail(const Graph& g, const ListAssignment& L, const Colouring& cur, const Colouring& bp, const PawShape& s,
              const Ctx& ctx) {
    const int n = g.n();
    const Vertex v = s.centre, w1 = s.w1, w2 = s.w2, w3 = s.w3;
    std::vector<Vertex> rest(s.tail.begin() + 2, s.tail.end());
    const std::vector<Vertex> tri = sorted({v, w1, w2});
    const std::vector<Vertex> local = sorted({v, w1, w2, w3});
    auto v_unfrozen = [&](const Colouring& c) { return !vertex_frozen(g, L, c, v); };
    auto with_rest = [&](Colouring base) {
        for (Vertex r : rest) base[r] = bp[r];
        return base;
    };

    // Match the tail by the Key Lemma on G - x, with x off every neighbour's list.
    auto via_leaf = [&](Vertex x, Vertex y, bool need_unfrozen, const std::string& why,
                        const std::function<bool(const Colouring&)>& ready) {
        Plan p = local_search(g, L, cur, tri, ready, ctx, why);
        Colouring now = replay(cur, p);
        const std::vector<Vertex> free = sorted({v, y, w3});
        auto gamma = first_completion(g, L, with_rest(now), free,
                                      [&](const Colouring& c) { return !need_unfrozen || v_unfrozen(c); });
        if (!gamma) throw PlanGap("no target colouring for the paw tail");
        const Vertex rm[] = {x};
        Plan q = key_on(g, L, now, minus(n, rm), *gamma, ctx);
        now = replay(std::move(now), q);
        append(p, q);
        if (!v_unfrozen(now)) append(p, local_search(g, L, now, local, v_unfrozen, ctx, "unfreeze the paw centre"));
        return p;
    };

    for (auto [x, y] : {std::pair{w1, w2}, std::pair{w2, w1}})
        if (!is_subset(L[x], L[v]))
            return via_leaf(x, y, true, "paw leaf off the centre list",
                            [&, x = x](const Colouring& c) { return !L.contains(v, c[x]); });
    for (auto [x, y] : {std::pair{w1, w2}, std::pair{w2, w1}})
        if (!is_subset(L[x], L[y]))
            return via_leaf(x, y, false, "paw leaf off its partner's list",
                            [&, x = x, y = y](const Colouring& c) { return !L.contains(y, c[x]); });

    Plan p = local_search(g, L, cur, tri, [&](const Colouring& c) { return !L.contains(w3, c[v]); }, ctx,
                          "paw centre off the path list");
    Colouring now = replay(cur, p);
    Colouring gamma = with_rest(Colouring(n, kNone));
    for (Vertex x : tri) gamma[x] = now[x];
    gamma = extend(g, L, gamma);
    std::vector<Vertex> W(s.tail.begin() + 1, s.tail.end());
    std::sort(W.begin(), W.end());
    Plan q = key_on(g, L, now, W, gamma, ctx);
    now = replay(std::move(now), q);
    append(p, q);
    Walker fin(g, L, now);
    if (fin.frozen(v)) fin.recolour_any(w3);
    append(p, fin.take());
    return p;
}

}  // namespace

Plan cycle_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    const int n = g.n();
    auto ring = walk_order(g);
    ctx.note("cycle_lemma", ring);
    for (int i = 0; i < n; ++i)
        if (!L.contains(ring_at(ring, i + 1), b[ring_at(ring, i)])) return cycle_case_one(g, L, a, b, ring, i, ctx);
    for (int i = 0; i < n; ++i) {
        const Vertex vi = ring_at(ring, i);
        auto c = least_outside(L[vi], L[ring_at(ring, i + 1)]);
        if (!c) continue;
        Colouring gamma(n, kNone);
        gamma[vi] = *c;
        gamma = extend(g, L, gamma);
        return meet(cycle_case_one(g, L, a, gamma, ring, i, ctx), b, cycle_case_one(g, L, b, gamma, ring, i, ctx));
    }
    throw PlanGap("identical lists on a cycle; the winding number separates colourings");
}

Plan path_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    const int n = g.n();
    auto order = walk_order(g);
    ctx.note("path_lemma", order);
    for (int i = 0; i + 1 < n; ++i) {
        const Vertex x = order[i], y = order[i + 1];
        if (is_subset(L[x], L[y]) || is_subset(L[y], L[x])) continue;
        if (!L.contains(y, a[x]) && !L.contains(x, a[y])) return path_proc(g, L, a, b, order, i, ctx);
        Colouring gamma(n, kNone);
        gamma[x] = *least_outside(L[x], L[y]);
        gamma[y] = *least_outside(L[y], L[x]);
        gamma = extend(g, L, gamma);
        Plan out = reverse_plan(gamma, path_proc(g, L, gamma, a, order, i, ctx));
        append(out, path_proc(g, L, gamma, b, order, i, ctx));
        return out;
    }
    throw PlanGap("no adjacent pair of path vertices has mutually non-nested lists");
}

Plan p3_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    Vertex centre = 0;
    while (g.degree(centre) != 2) ++centre;
    const Vertex e1 = g.neighbours(centre)[0], e2 = g.neighbours(centre)[1];
    const auto all = all_vertices(3);
    ctx.note("p3_lemma", all);
    for (Vertex e : {e1, e2}) {
        auto c = least_outside(L[e], L[centre]);
        if (!c) continue;
        Walker wk(g, L, a);
        if (L.contains(centre, wk[e])) wk.move(e, *c);
        Plan p = wk.take();
        const std::vector<Vertex> W = sorted({centre, e == e1 ? e2 : e1});
        Colouring now = replay(a, p);
        Plan q = key_on(g, L, now, W, b, ctx);
        now = replay(std::move(now), q);
        append(p, q);
        if (now[e] != b[e]) p.push_back({e, b[e]});
        return p;
    }
    return local_search(g, L, a, all, [&](const Colouring& c) { return c == b; }, ctx, "p3 nested lists");
}

Plan claw_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    auto s = as_subdivided_claw(g);
    if (!s) throw PlanGap("graph is not a subdivided claw");
    ctx.note("claw_lemma", all_vertices(g.n()));
    Plan mvA = unfreeze_at(g, L, a, s->centre), mvB = unfreeze_at(g, L, b, s->centre);
    Colouring cur = replay(a, mvA);
    const Colouring bp = replay(b, mvB);
    Plan out = mvA;
    if (s->tail.size() > 2) {
        Plan p = claw_tail(g, L, cur, bp, *s, ctx);
        cur = replay(std::move(cur), p);
        append(out, p);
    }
    const auto core = sorted({s->centre, s->w1, s->w2, s->w3});
    append(out, solve_on(g, L, cur, core, bp, ctx, claw13));
    append(out, reverse_plan(b, mvB));
    return out;
}

Plan paw_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    auto s = as_subdivided_paw(g);
    if (!s) throw PlanGap("graph is not a subdivided paw");
    ctx.note("paw_lemma", all_vertices(g.n()));
    Plan mvA = unfreeze_at(g, L, a, s->centre), mvB = unfreeze_at(g, L, b, s->centre);
    Colouring cur = replay(a, mvA);
    const Colouring bp = replay(b, mvB);
    Plan out = mvA;
    if (s->tail.size() > 2) {
        Plan p = paw_tail(g, L, cur, bp, *s, ctx);
        cur = replay(std::move(cur), p);
        append(out, p);
    }
    const auto core = sorted({s->centre, s->w1, s->w2, s->w3});
    append(out, solve_on(g, L, cur, core, bp, ctx, paw_base));
    append(out, reverse_plan(b, mvB));
    return out;
}

}  // namespace recolor::detail

namespace recolor {

using namespace detail;

PlanOutcome plan_small_case(const Graph& g, const ListAssignment& L, const Colouring& alpha, const Colouring& beta) {
    require_instance(g, L, alpha, beta);
    require_one_plus(g, L);
    const int n = g.n();
    const bool low = g.max_degree() <= 2;
    const bool cycle = low && n >= 3 && g.edge_count() == n;
    const bool path = low && n >= 3 && g.edge_count() == n - 1;
    if (!cycle && !path && !as_subdivided_claw(g) && !as_subdivided_paw(g))
        throw domain_error("graph is not a cycle, path, subdivided claw or subdivided paw");
    if (cycle && !has_surplus_two(g, L)) {
        bool same = true;
        for (Vertex v = 1; v < n; ++v) same = same && L.lists()[v] == L.lists()[0];
        if (same)
            throw domain_error("identical lists on a cycle; colourings with different winding numbers are not connected");
    }
    if (path && n > 3 && !has_surplus_two(g, L) && union_size(L, all_vertices(n)) < 4)
        throw domain_error("path lists use fewer than 4 colours in total");
    std::vector<TraceEntry> trace;
    Ctx ctx = Ctx::root(trace, n);
    Plan p;
    if (alpha != beta) {
        if (!is_unfrozen(g, L, alpha)) throw domain_error("start colouring is frozen");
        if (!is_unfrozen(g, L, beta)) throw domain_error("target colouring is frozen");
        p = route(g, L, alpha, beta, ctx);
    }
    return finish(g, L, alpha, beta, std::move(p), std::move(trace));
}

}  // namespace recolor
