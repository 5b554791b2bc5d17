#include <algorithm>

#include "common.hpp"

namespace recolor::detail {

namespace {

bool soft(const Error& e) { return e.kind() == ErrorKind::domain; }

std::vector<Vertex> sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

int degree_in(const Graph& g, Vertex v, const std::vector<char>& in) {
    int d = 0;
    for (Vertex u : g.neighbours(v)) d += in[u];
    return d;
}

std::vector<char> mask(int n, std::span<const Vertex> W) {
    std::vector<char> m(n, 0);
    for (Vertex v : W) m[v] = 1;
    return m;
}

std::vector<Vertex> outside_neighbours(const Graph& g, Vertex v, const std::vector<char>& inH) {
    std::vector<Vertex> out;
    for (Vertex u : g.neighbours(v))
        if (!inH[u]) out.push_back(u);
    return out;
}

// Colours available to the block: its own lists, with v's list pruned by its
// neighbours outside the block.
int block_union(const Graph& g, const ListAssignment& L, const Colouring& c, std::span<const Vertex> H, Vertex v,
                const std::vector<char>& inH) {
    std::vector<Colour> all;
    for (Vertex h : H) {
        for (Colour col : L[h]) {
            bool pruned = false;
            if (h == v)
                for (Vertex u : g.neighbours(v))
                    if (!inH[u] && c[u] == col) pruned = true;
            if (!pruned) all.push_back(col);
        }
    }
    std::sort(all.begin(), all.end());
    return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

// Recolour u (unfrozen) so the block union exceeds `need - 1`.
void widen_block(Walker& wk, std::span<const Vertex> H, Vertex v, const std::vector<char>& inH, Vertex u, int need) {
    const Graph& g = wk.graph();
    const ListAssignment& L = wk.lists();
    if (block_union(g, L, wk.colouring(), H, v, inH) >= need) return;
    for (Colour d : L[u]) {
        if (!wk.available(u, d)) continue;
        Colouring trial = wk.colouring();
        trial[u] = d;
        if (block_union(g, L, trial, H, v, inH) >= need) {
            wk.move(u, d);
            return;
        }
    }
    throw PlanGap("endblock lists stay too small for any colour on " + vname(u));
}

bool unfrozen_without(const Graph& g, const ListAssignment& L, const Colouring& c, Vertex y) {
    const Vertex rm[] = {y};
    Restriction r = restrict(g, L, c, minus(g.n(), rm));
    return colouring_unfrozen(r.graph, r.lists, r.colouring);
}

Plan general_endblock(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b,
                      const std::vector<Vertex>& H, Vertex v, const Ctx& ctx) {
    const int n = g.n();
    const auto inH = mask(n, H);
    for (Vertex x : H)
        for (Vertex y : H) {
            if (x >= y || x == v || y == v || g.adjacent(x, y)) continue;
            bool common = false;
            for (Vertex z : g.neighbours(x))
                if (inH[z] && g.adjacent(z, y)) common = true;
            const Vertex rm[] = {x, y};
            if (!common || !g.connected_without(rm)) continue;
            Colour c = kNone;
            for (Colour col : L[x])
                if (L.contains(y, col)) {
                    c = col;
                    break;
                }
            if (c == kNone) continue;
            ctx.note("endblock_general", H);
            const Plan mvA = unfreeze_at(g, L, a, v), mvB = unfreeze_at(g, L, b, v);
            const Colouring ap = replay(a, mvA), bp = replay(b, mvB);
            auto gamma_from = [&](const Colouring& base) {
                Colouring gm = base;
                for (Vertex h : H) gm[h] = kNone;
                gm[x] = gm[y] = c;
                return extend(g, L, gm);
            };
            const Colouring g1 = gamma_from(ap), g2 = gamma_from(bp);
            Plan out = mvA;
            append(out, route_on(g, L, ap, H, g1, ctx));
            append(out, twomatch(g, L, g1, g2, x, y, ctx));
            append(out, reverse_plan(bp, route_on(g, L, bp, H, g2, ctx)));
            append(out, reverse_plan(b, mvB));
            return out;
        }
    throw PlanGap("endblock has no pair at distance 2 whose removal keeps it connected");
}

// H - v is a clique minus the edge xy, and v is adjacent to exactly x and y.
Plan subdivided_clique_endblock(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b,
                                const std::vector<Vertex>& H, Vertex x, Vertex y, const Ctx& ctx) {
    const int n = g.n();
    ctx.note("endblock_subdivided_clique", H);
    Walker wa(g, L, a), wb(g, L, b);
    if (wa[y] != wa[x]) wa.move(y, wa[x]);
    if (wb[y] != wb[x]) wb.move(y, wb[x]);
    const Colouring ap = wa.colouring(), bp = wb.colouring();

    // Identify y with x. N(y) = N(x), so G - y with unpruned lists is the contraction.
    const Vertex rm[] = {y};
    const auto W = minus(n, rm);
    std::vector<int> index(n, -1);
    for (int i = 0; i < static_cast<int>(W.size()); ++i) index[W[i]] = i;
    std::vector<Edge> edges;
    std::vector<std::vector<Colour>> lists;
    Colouring ac, bc;
    for (Vertex u : W) {
        lists.emplace_back(L[u].begin(), L[u].end());
        ac.push_back(ap[u]);
        bc.push_back(bp[u]);
        for (Vertex t : g.neighbours(u))
            if (index[t] > index[u]) edges.emplace_back(index[u], index[t]);
    }
    const Graph gc = Graph::build(static_cast<int>(W.size()), edges);
    const ListAssignment Lc(std::move(lists));
    Ctx sub = ctx.sub(W);
    Plan out = wa.take();
    for (Step s : key_lemma_core(gc, Lc, ac, bc, sub)) {
        const Vertex p = W[s.vertex];
        out.push_back({p, s.colour});
        if (p == x) out.push_back({y, s.colour});
    }
    append(out, reverse_plan(b, wb.take()));
    return out;
}

Plan clique_endblock(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b,
                     const std::vector<Vertex>& H, Vertex v, const Ctx& ctx) {
    const int n = g.n();
    const int m = static_cast<int>(H.size());
    const auto inH = mask(n, H);
    std::string why = "cut vertex has no outside neighbour";
    for (Vertex u : outside_neighbours(g, v, inH)) {
        const auto mark = ctx.mark();
        try {
            ctx.note("endblock_clique", H);
            const Plan mvA = unfreeze_at(g, L, a, u), mvB = unfreeze_at(g, L, b, u);
            const Colouring b1 = replay(b, mvB);
            Walker wk(g, L, replay(a, mvA));
            widen_block(wk, H, v, inH, u, m + 1);
            const Colouring cur = wk.colouring();
            Plan out = mvA;
            append(out, wk.take());

            Vertex x = -1;
            for (Vertex h : H)
                if (h != v && b1[h] == cur[v]) x = h;
            if (x < 0)
                for (Vertex h : H)
                    if (h != v) {
                        x = h;
                        break;
                    }
            Colouring ap = cur;
            for (Vertex h : H)
                if (h != v && h != x) ap[h] = b1[h];
            ap[x] = kNone;
            for (Colour c : L[x]) {
                bool used = false;
                for (Vertex h : H)
                    if (h != x && ap[h] == c) used = true;
                if (!used) {
                    ap[x] = c;
                    break;
                }
            }
            if (ap[x] == kNone) throw PlanGap("no colour for the clique endblock vertex " + vname(x));
            append(out, solve_on(g, L, cur, H, ap, ctx, clique_core));

            std::vector<char> gone(n, 0);
            for (Vertex h : H)
                if (h != v && h != x) gone[h] = 1;
            std::vector<Vertex> keep;
            for (Vertex t = 0; t < n; ++t)
                if (!gone[t]) keep.push_back(t);
            const auto km = mask(n, keep);
            int dmax = 0;
            for (Vertex t : keep) dmax = std::max(dmax, degree_in(g, t, km));
            if (dmax <= 2)
                for (Vertex h : H)
                    if (gone[h]) {
                        keep.push_back(h);
                        break;
                    }
            append(out, route_on(g, L, ap, sorted(keep), b1, ctx));
            append(out, reverse_plan(b, mvB));
            return out;
        } catch (const Error& e) {
            if (!soft(e)) throw;
            ctx.rewind(mark);
            why = e.what();
        }
    }
    throw PlanGap("clique endblock: " + why);
}

Plan cycle_endblock(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b,
                    const std::vector<Vertex>& H, Vertex v, const Ctx& ctx) {
    const int n = g.n();
    const int k = static_cast<int>(H.size());
    const auto inH = mask(n, H);
    // Ring order inside H starting at v and its least H-neighbour.
    std::vector<Vertex> ring{v};
    {
        Vertex prev = -1, cur = v;
        while (static_cast<int>(ring.size()) < k) {
            Vertex next = -1;
            for (Vertex t : g.neighbours(cur))
                if (inH[t] && t != prev && t != v) {
                    next = t;
                    break;
                }
            if (next < 0) throw PlanGap("cycle endblock walk broke off");
            ring.push_back(next);
            prev = cur;
            cur = next;
        }
    }
    std::string why = "cut vertex has no outside neighbour";
    for (Vertex u : outside_neighbours(g, v, inH)) {
        const auto mark = ctx.mark();
        try {
            ctx.note("endblock_cycle", H);
            const Plan mvA = unfreeze_at(g, L, a, u), mvB = unfreeze_at(g, L, b, u);
            const Colouring b1 = replay(b, mvB);
            Walker wk(g, L, replay(a, mvA));
            widen_block(wk, H, v, inH, u, 4);
            const Colouring cur = wk.colouring();
            Plan out = mvA;
            append(out, wk.take());

            Colouring ap = cur;
            for (Vertex h : H)
                if (h != v) ap[h] = b1[h];
            ap[v] = kNone;
            for (Colour c : L[v]) {
                bool used = false;
                for (Vertex t : g.neighbours(v))
                    if (inH[t] ? b1[t] == c : cur[t] == c) used = true;
                if (!used) {
                    ap[v] = c;
                    break;
                }
            }
            if (ap[v] == kNone) throw PlanGap("no colour for the cycle endblock cut vertex");
            append(out, route_on(g, L, cur, H, ap, ctx));

            Walker wa(g, L, ap);
            Vertex z;
            const Vertex h1 = ring[1], hl = ring[k - 1];
            if (!wa.frozen(v) || !wa.frozen(h1)) {
                z = h1;
            } else if (!wa.frozen(hl)) {
                z = hl;
            } else {
                // Push unfrozenness along the ring towards h_{k-1}; both colourings agree there.
                int j = -1;
                for (int i = k - 2; i >= 2 && j < 0; --i)
                    if (!wa.frozen(ring[i])) j = i;
                if (j < 0) throw PlanGap("cycle endblock is frozen away from the cut vertex");
                push_along(wa, std::span<const Vertex>(ring.data() + j, k - j));
                z = hl;
            }
            const Plan push = wa.take();
            Walker wb(g, L, b1);
            wb.append(push);
            append(out, push);
            const Colouring a2 = replay(ap, push), b2 = wb.colouring();

            std::vector<Vertex> keep;
            for (Vertex t = 0; t < n; ++t)
                if (!inH[t] || t == v || t == z) keep.push_back(t);
            append(out, route_on(g, L, a2, keep, b2, ctx));
            append(out, reverse_plan(b1, push));
            append(out, reverse_plan(b, mvB));
            return out;
        } catch (const Error& e) {
            if (!soft(e)) throw;
            ctx.rewind(mark);
            why = e.what();
        }
    }
    throw PlanGap("cycle endblock: " + why);
}

// Gadget sequences for a frozen G - y next to a stripped path, after the
// local colours are renamed so that p holds the second colour of L(y).
bool run_gadget(Walker& gw, Vertex pv, Vertex y, Vertex w, Vertex x, bool adjacent_pair) {
    const ListAssignment& L = gw.lists();
    const Colour c1 = gw[pv], c2 = gw[y];
    Colour c3 = kNone;
    for (Colour c : L[y])
        if (c != c2) c3 = c;
    Vertex p = gw[w] == c3 ? w : (gw[x] == c3 ? x : -1);
    if (p < 0 || c3 == kNone) return false;
    Vertex q = p == w ? x : w;
    const Colour c4 = gw[q];
    try {
        gw.move(y, c3);
        gw.move(pv, c2);
        gw.move(p, c1);
        if (adjacent_pair) {
            gw.move(q, c3);
        } else {
            gw.move(q, c1);
            gw.move(pv, c4);
            gw.move(y, c2);
        }
    } catch (const StepError&) {
        return false;
    }
    return true;
}

Plan k2_endblock(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b,
                 const std::vector<Vertex>& H, Vertex cut, const Ctx& ctx) {
    const int n = g.n();
    const Vertex leaf = H[0] == cut ? H[1] : H[0];
    // P runs from the first vertex of degree at least 3 down to the leaf.
    std::vector<Vertex> P{leaf};
    {
        Vertex prev = leaf, cur = g.neighbours(leaf)[0];
        while (g.degree(cur) == 2) {
            P.push_back(cur);
            Vertex nxt = g.neighbours(cur)[0] == prev ? g.neighbours(cur)[1] : g.neighbours(cur)[0];
            prev = cur;
            cur = nxt;
        }
        P.push_back(cur);
        std::reverse(P.begin(), P.end());
    }
    const Vertex pv = P[0], y = P[1];
    std::vector<Vertex> others;
    for (Vertex t : g.neighbours(pv))
        if (t != y) others.push_back(t);
    if (others.size() < 2) throw PlanGap("path endpoint has degree below 3");
    Vertex w = -1, x = -1;
    for (std::size_t i = 0; i < others.size() && w < 0; ++i)
        for (std::size_t j = i + 1; j < others.size() && w < 0; ++j)
            if (!g.adjacent(others[i], others[j])) {
                w = others[i];
                x = others[j];
            }
    if (w < 0) {
        const auto bt = block_decomposition(g);
        for (Vertex t : others)
            if (bt.is_cut_vertex(t)) {
                w = t;
                break;
            }
        if (w < 0) w = others[0];
        x = others[0] == w ? others[1] : others[0];
    }
    const bool adjacent_pair = g.adjacent(w, x);
    ctx.note("endblock_path", P);

    const Plan mvA = unfreeze_at(g, L, a, w), mvB = unfreeze_at(g, L, b, w);
    const Colouring b1 = replay(b, mvB);
    Colouring cur = replay(a, mvA);
    std::vector<Vertex> J = P;
    J.push_back(w);
    J.push_back(x);
    J = sorted(J);
    Plan out = mvA;

    if (P.size() > 2) {
        Colouring t = cur;
        for (std::size_t j = 2; j < P.size(); ++j) t[P[j]] = b1[P[j]];
        t[y] = kNone;
        for (Colour c : L[y])
            if (c != cur[pv] && c != t[P[2]]) {
                t[y] = c;
                break;
            }
        if (t[y] == kNone) throw PlanGap("no colour for the path neighbour " + vname(y));
        append(out, route_on(g, L, cur, J, t, ctx));
        std::vector<char> gone(n, 0);
        for (std::size_t j = 2; j < P.size(); ++j) gone[P[j]] = 1;
        std::vector<Vertex> keep;
        for (Vertex s = 0; s < n; ++s)
            if (!gone[s]) keep.push_back(s);
        append(out, route_on(g, L, t, keep, b1, ctx));
        append(out, reverse_plan(b, mvB));
        return out;
    }

    // P = {pv, y}: put b(y) on y with pv off L(y), preferring G - y unfrozen.
    Colouring base = cur;
    base[y] = b1[y];
    std::optional<Colouring> best, fallback;
    const std::vector<Vertex> free = sorted({w, x});
    for (Colour c : L[pv]) {
        if (L.contains(y, c)) continue;
        bool clash = false;
        for (Vertex t : g.neighbours(pv))
            if (t != w && t != x && t != y && cur[t] == c) clash = true;
        if (clash) continue;
        Colouring bb = base;
        bb[pv] = c;
        auto good = first_completion(g, L, bb, free, [&](const Colouring& col) { return unfrozen_without(g, L, col, y); });
        if (good) {
            best = good;
            break;
        }
        if (!fallback) fallback = first_completion(g, L, bb, free, [](const Colouring&) { return true; });
    }
    if (!best && !fallback) throw PlanGap("no colouring puts b(y) on y with the path endpoint off L(y)");
    const Colouring app = best ? *best : *fallback;
    append(out, route_on(g, L, cur, J, app, ctx));
    cur = app;
    if (!unfrozen_without(g, L, cur, y)) {
        ctx.note(adjacent_pair ? "gadget_adjacent" : "gadget_nonadjacent", J);
        Walker gw(g, L, cur);
        const bool ran = run_gadget(gw, pv, y, w, x, adjacent_pair);
        if (ran && gw[y] == b1[y] && unfrozen_without(g, L, gw.colouring(), y)) {
            cur = gw.colouring();
            append(out, gw.take());
        } else {
            const std::vector<Vertex> window = sorted({pv, w, x, y});
            Plan p = local_search(
                g, L, cur, window,
                [&](const Colouring& c) { return c[y] == b1[y] && unfrozen_without(g, L, c, y); }, ctx,
                "unfreeze beside the stripped path");
            cur = replay(std::move(cur), p);
            append(out, p);
        }
    }
    const Vertex rm[] = {y};
    append(out, route_on(g, L, cur, minus(n, rm), b1, ctx));
    append(out, reverse_plan(b, mvB));
    return out;
}

Plan endblock(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b,
              const std::vector<Vertex>& H, Vertex v, const Ctx& ctx) {
    const int n = g.n();
    const int k = static_cast<int>(H.size());
    if (k == 2) return k2_endblock(g, L, a, b, H, v, ctx);
    const auto inH = mask(n, H);
    bool complete = true, cycle = true;
    for (Vertex h : H) {
        const int d = degree_in(g, h, inH);
        complete = complete && d == k - 1;
        cycle = cycle && d == 2;
    }
    if (complete) return clique_endblock(g, L, a, b, H, v, ctx);
    if (degree_in(g, v, inH) == 2) {
        std::vector<Vertex> nb;
        for (Vertex t : g.neighbours(v))
            if (inH[t]) nb.push_back(t);
        const Vertex x = nb[0], y = nb[1];
        bool shape = !g.adjacent(x, y);
        for (Vertex p : H)
            for (Vertex q : H)
                if (shape && p < q && p != v && q != v && !(p == x && q == y) && !g.adjacent(p, q)) shape = false;
        if (shape) return subdivided_clique_endblock(g, L, a, b, H, x, y, ctx);
    }
    if (cycle) return cycle_endblock(g, L, a, b, H, v, ctx);
    return general_endblock(g, L, a, b, H, v, ctx);
}

}  // namespace

Plan blocks_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    const auto bt = block_decomposition(g);
    auto leaves = bt.leaf_blocks();
    std::stable_sort(leaves.begin(), leaves.end(),
                     [&](int x, int y) { return bt.blocks[x].front() < bt.blocks[y].front(); });
    std::string why = "no endblock";
    for (int bi : leaves) {
        if (bt.block_cuts[bi].size() != 1) continue;
        const auto mark = ctx.mark();
        try {
            return endblock(g, L, a, b, bt.blocks[bi], bt.block_cuts[bi][0], ctx);
        } catch (const Error& e) {
            if (!soft(e)) throw;
            ctx.rewind(mark);
            why = e.what();
        }
    }
    throw PlanGap("no endblock reduction applies (" + why + ")");
}

Plan route(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    const int n = g.n();
    auto comps = g.components_without({});
    if (comps.size() > 1) {
        Plan out;
        Colouring cur = a;
        for (const auto& comp : comps) {
            Plan p = solve_on(g, L, cur, comp, b, ctx, route);
            cur = replay(std::move(cur), p);
            append(out, p);
        }
        return out;
    }
    if (n == 1) return {{0, b[0]}};
    if (has_surplus_two(g, L)) return key_lemma_core(g, L, a, b, ctx);
    if (!is_unfrozen(g, L, a) || !is_unfrozen(g, L, b)) throw PlanGap("a colouring of a sub-instance is frozen");
    if (g.is_complete()) return clique_core(g, L, a, b, ctx);
    if (g.max_degree() <= 2) {
        if (g.edge_count() == n) return cycle_core(g, L, a, b, ctx);
        if (n == 3) return p3_core(g, L, a, b, ctx);
        return path_core(g, L, a, b, ctx);
    }
    if (as_subdivided_claw(g)) return claw_core(g, L, a, b, ctx);
    if (as_subdivided_paw(g)) return paw_core(g, L, a, b, ctx);
    if (two_connected_edge(g, L)) return two_connected_core(g, L, a, b, ctx);
    if (block_decomposition(g).blocks.size() == 1) return regular_core(g, L, a, b, ctx);
    return blocks_core(g, L, a, b, ctx);
}

}  // namespace recolor::detail

namespace recolor {

using namespace detail;

PlanOutcome plan_main(const Graph& g, const ListAssignment& L, const Colouring& alpha, const Colouring& beta) {
    require_instance(g, L, alpha, beta);
    require_one_plus(g, L);
    if (g.max_degree() < 3) throw domain_error("maximum degree is below 3; cycles and paths go to plan_small_case");
    std::vector<TraceEntry> trace;
    Ctx ctx = Ctx::root(trace, g.n());
    Plan p;
    if (alpha != beta) {
        if (!is_unfrozen(g, L, alpha)) throw domain_error("start colouring is frozen");
        if (!is_unfrozen(g, L, beta)) throw domain_error("target colouring is frozen");
        p = route(g, L, alpha, beta, ctx);
    }
    return finish(g, L, alpha, beta, std::move(p), std::move(trace));
}

}  // namespace recolor
