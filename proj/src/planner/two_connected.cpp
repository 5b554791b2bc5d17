#include <algorithm>

#include "common.hpp"

namespace recolor::detail {

namespace {

// a(v) is missing from L(w); b is unfrozen.
Plan two_connected_proc(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Vertex v,
                        Vertex w, const Ctx& ctx) {
    const int n = g.n();
    const Colour av = a[v];
    Plan mv = unfreeze_at(g, L, b, v);
    const Colouring bp = replay(b, mv);

    auto holders = [&](const Colouring& c) {
        std::vector<Vertex> s;
        for (Vertex u : g.neighbours(v))
            if (c[u] == av) s.push_back(u);
        return s;
    };
    Walker prep(g, L, bp);
    {
        auto S = holders(bp);
        if (S.size() == 1 && prep.frozen(S[0])) free_up(prep, v, S[0]);
    }
    const Plan to_b0 = prep.take();
    const Colouring b0 = replay(bp, to_b0);
    const auto S = holders(b0);

    Colouring b1 = b0;
    b1[v] = av;
    for (Vertex z : S) {
        b1[z] = kNone;
        for (Colour c : L[z]) {
            if (c == av) continue;
            bool clash = false;
            for (Vertex y : g.neighbours(z))
                if (y != v && b0[y] == c) clash = true;
            if (!clash) {
                b1[z] = c;
                break;
            }
        }
        if (b1[z] == kNone) throw PlanGap("no colour to clear neighbour " + vname(z));
    }
    const Vertex rm[] = {v};
    Plan out = key_on(g, L, a, minus(n, rm), b1, ctx);

    // From b1 back to b0.
    if (S.size() == 1) {
        const std::vector<Vertex> W = [&] {
            std::vector<Vertex> t{v, w, S[0]};
            std::sort(t.begin(), t.end());
            return t;
        }();
        append(out, route_on(g, L, b1, W, b0, ctx));
    } else {
        Walker wk(g, L, b1);
        if (!S.empty()) {
            if (wk.frozen(v)) free_up(wk, w, v);
            wk.recolour_any(v);
            for (Vertex z : S) wk.move(z, av);
            if (wk[v] == b0[w]) wk.recolour_any(v, b0[w]);
            if (wk[w] != b0[w]) wk.move(w, b0[w]);
        }
        if (wk[v] != b0[v]) wk.move(v, b0[v]);
        append(out, wk.take());
    }
    append(out, reverse_plan(bp, to_b0));
    append(out, reverse_plan(b, mv));
    return out;
}

// Ascending good pairs of v, very good ones first.
std::vector<GoodPair> good_pairs(const Graph& g, const Colouring& c, Vertex v) {
    std::vector<GoodPair> out;
    auto nb = g.neighbours(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (c[nb[i]] != c[nb[j]] || g.adjacent(nb[i], nb[j])) continue;
            const Vertex rm[] = {nb[i], nb[j]};
            out.push_back({v, nb[i], nb[j], g.connected_without(rm)});
        }
    std::stable_partition(out.begin(), out.end(), [](const GoodPair& p) { return p.very_good; });
    return out;
}

// Twomatch chain from a to b through pairs x (good for a) and y (good for b).
Plan ladder(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, const GoodPair& x,
            const GoodPair& y, const Ctx& ctx) {
    const int n = g.n();
    auto coloured = [&](Colour cx, Colour cy) {
        Colouring c(n, kNone);
        c[x.w1] = c[x.w2] = cx;
        c[y.w1] = c[y.w2] = cy;
        return extend(g, L, c);
    };
    const Colour ca = a[x.w1], cb = b[y.w1];
    std::vector<Colouring> chain{a};
    std::vector<const GoodPair*> via;
    if (ca != cb) {
        chain.push_back(coloured(ca, cb));
        via = {&x, &y};
    } else {
        // Both pairs share a colour; rotate through two spare colours.
        auto list = L[x.w1];
        std::vector<Colour> spare;
        for (Colour c : list)
            if (c != ca && L.contains(x.w2, c) && L.contains(y.w1, c) && L.contains(y.w2, c)) spare.push_back(c);
        if (spare.size() < 2) throw PlanGap("too few shared colours for the pair ladder");
        const Colour c2 = spare[0], c3 = spare[1];
        chain.push_back(coloured(ca, c2));
        chain.push_back(coloured(c3, c2));
        chain.push_back(coloured(c3, ca));
        via = {&x, &y, &x, &y};
    }
    chain.push_back(b);
    Plan out;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        append(out, twomatch(g, L, chain[k], chain[k + 1], via[k]->w1, via[k]->w2, ctx));
    return out;
}

}  // namespace

Plan two_connected_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    auto e = two_connected_edge(g, L);
    if (!e) throw PlanGap("no edge vw with L(v) outside L(w) and G - v connected");
    const auto [v, w] = *e;
    ctx.note("two_connected_lemma", {v, w});
    if (!L.contains(w, a[v])) return two_connected_proc(g, L, a, b, v, w, ctx);
    Colouring gamma(g.n(), kNone);
    gamma[v] = *least_outside(L[v], L[w]);
    gamma = extend(g, L, gamma);
    Plan out = reverse_plan(gamma, two_connected_proc(g, L, gamma, a, v, w, ctx));
    append(out, two_connected_proc(g, L, gamma, b, v, w, ctx));
    return out;
}

Plan regular_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    const int n = g.n();
    bool three_connected = true;
    for (Vertex x = 0; x < n && three_connected; ++x)
        for (Vertex y = x + 1; y < n && three_connected; ++y) {
            const Vertex rm[] = {x, y};
            if (!g.connected_without(rm)) three_connected = false;
        }
    ctx.note(three_connected ? "three_connected_lemma" : "regular_two_connected", all_vertices(n));

    // Search for v1 unfrozen in a and v2 unfrozen in b with disjoint very good pairs.
    struct Side {
        Plan mv;
        Colouring c;
        std::vector<GoodPair> pairs;
    };
    auto side = [&](const Colouring& c, Vertex v) -> std::optional<Side> {
        Plan mv;
        try {
            mv = unfreeze_at(g, L, c, v);
        } catch (const Error&) {
            return std::nullopt;
        }
        Colouring moved = replay(c, mv);
        std::vector<GoodPair> pairs;
        for (const auto& p : good_pairs(g, moved, v))
            if (p.very_good) pairs.push_back(p);
        if (pairs.empty()) return std::nullopt;
        return Side{std::move(mv), std::move(moved), std::move(pairs)};
    };
    std::vector<std::optional<Side>> bs(n);
    for (Vertex v2 = 0; v2 < n; ++v2) bs[v2] = side(b, v2);
    for (Vertex v1 = 0; v1 < n; ++v1) {
        auto sa = side(a, v1);
        if (!sa) continue;
        for (Vertex v2 = 0; v2 < n; ++v2) {
            if (!bs[v2]) continue;
            for (const auto& x : sa->pairs)
                for (const auto& y : bs[v2]->pairs) {
                    if (x.w1 == y.w1 || x.w1 == y.w2 || x.w2 == y.w1 || x.w2 == y.w2) continue;
                    const auto m = ctx.mark();
                    try {
                        Plan out = sa->mv;
                        append(out, ladder(g, L, sa->c, bs[v2]->c, x, y, ctx));
                        append(out, reverse_plan(b, bs[v2]->mv));
                        return out;
                    } catch (const PlanGap&) {
                        ctx.rewind(m);
                    }
                }
        }
    }
    throw PlanGap("no disjoint very good pairs found for the regular procedure");
}

}  // namespace recolor::detail

namespace recolor {

using namespace detail;

std::optional<GoodPair> find_very_good_pair(const Graph& g, const Colouring& c, Vertex v) {
    if (v < 0 || v >= g.n()) throw domain_error("vertex " + vname(v) + " is out of range");
    if (static_cast<int>(c.size()) != g.n()) throw domain_error("colouring does not cover every vertex");
    for (auto [x, y] : g.edges())
        if (c[x] == c[y]) throw domain_error("colouring is not proper on edge " + vname(x) + "-" + vname(y));
    auto pairs = good_pairs(g, c, v);
    if (pairs.empty()) return std::nullopt;
    return pairs.front();
}

PlanOutcome plan_regular_two_connected(const Graph& g, const ListAssignment& L, const Colouring& alpha,
                                       const Colouring& beta) {
    require_instance(g, L, alpha, beta);
    const int n = g.n();
    const int d = g.max_degree();
    if (d < 3) throw domain_error("maximum degree is below 3");
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != d) throw domain_error("graph is not regular at vertex " + vname(v));
    if (n < 3 || block_decomposition(g).blocks.size() != 1) throw domain_error("graph is not 2-connected");
    for (Vertex v = 0; v < n; ++v)
        if (L.lists()[v] != L.lists()[0] || L.list_size(v) != d + 1)
            throw domain_error("lists must be identical of size maximum degree plus one");
    std::vector<TraceEntry> trace;
    Ctx ctx = Ctx::root(trace, n);
    Plan p;
    if (alpha != beta) {
        if (!is_unfrozen(g, L, alpha)) throw domain_error("start colouring is frozen");
        if (!is_unfrozen(g, L, beta)) throw domain_error("target colouring is frozen");
        p = regular_core(g, L, alpha, beta, ctx);
    }
    return finish(g, L, alpha, beta, std::move(p), std::move(trace));
}

PlanOutcome plan_regular_two_connected(const Graph& g, const Colouring& alpha, const Colouring& beta) {
    return plan_regular_two_connected(g, ListAssignment::uniform(g.n(), g.max_degree() + 1), alpha, beta);
}

PlanOutcome plan_two_connected(const Graph& g, const ListAssignment& L, const Colouring& alpha,
                               const Colouring& beta) {
    require_instance(g, L, alpha, beta);
    require_one_plus(g, L);
    if (!two_connected_edge(g, L))
        throw domain_error("no edge vw with L(v) outside L(w) and G - v connected; use the regular procedure");
    std::vector<TraceEntry> trace;
    Ctx ctx = Ctx::root(trace, g.n());
    Plan p;
    if (alpha != beta) {
        if (!is_unfrozen(g, L, alpha)) throw domain_error("start colouring is frozen");
        if (!is_unfrozen(g, L, beta)) throw domain_error("target colouring is frozen");
        p = two_connected_core(g, L, alpha, beta, ctx);
    }
    return finish(g, L, alpha, beta, std::move(p), std::move(trace));
}

}  // namespace recolor
