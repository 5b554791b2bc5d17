#include <map>

#include "common.hpp"

namespace recolor {

using namespace detail;

PlanOutcome plan_key_lemma(const Graph& g, const ListAssignment& L, const Colouring& alpha, const Colouring& beta) {
    require_instance(g, L, alpha, beta);
    require_one_plus(g, L);
    if (!has_surplus_two(g, L)) throw domain_error("no vertex has a list of size at least its degree plus two");
    std::vector<TraceEntry> trace;
    Ctx ctx = Ctx::root(trace, g.n());
    Plan p = key_lemma_core(g, L, alpha, beta, ctx);
    return finish(g, L, alpha, beta, std::move(p), std::move(trace));
}

namespace detail {

namespace {

class CliqueRun {
public:
    CliqueRun(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b)
        : g_(g), L_(L), b_(b), wk_(g, L, a) {}

    Plan run() {
        while (true) {
            if (open_good_cycle()) continue;
            if (drain_one_sink()) continue;
            break;
        }
        auto wrong = wrong_vertices();
        if (wrong.empty()) return wk_.take();
        // Only bad cycles remain: free one colour on a correct vertex.
        for (Vertex w = 0; w < g_.n(); ++w) {
            if (wk_[w] != b_[w]) continue;
            if (auto c = free_colour(w)) {
                wk_.move(w, *c);
                while (open_good_cycle()) {
                }
                wk_.move(w, b_[w]);
                if (!wrong_vertices().empty()) throw PlanGap("clique digraph left unresolved cycles");
                return wk_.take();
            }
        }
        throw PlanGap("no free colour to unlock the bad cycles");
    }

private:
    Vertex holder(Colour c) const {
        for (Vertex u = 0; u < g_.n(); ++u)
            if (wk_[u] == c) return u;
        return -1;
    }
    std::vector<Vertex> wrong_vertices() const {
        std::vector<Vertex> w;
        for (Vertex v = 0; v < g_.n(); ++v)
            if (wk_[v] != b_[v]) w.push_back(v);
        return w;
    }
    // Least colour of L(v) unused anywhere on the clique.
    std::optional<Colour> free_colour(Vertex v) const {
        for (Colour c : L_[v])
            if (holder(c) < 0) return c;
        return std::nullopt;
    }
    std::vector<Vertex> cycle_through(Vertex v) const {
        std::vector<Vertex> cyc{v};
        Vertex cur = holder(b_[v]);
        while (cur >= 0 && cur != v && wk_[cur] != b_[cur] && cyc.size() <= static_cast<std::size_t>(g_.n())) {
            cyc.push_back(cur);
            cur = holder(b_[cur]);
        }
        if (cur != v) return {};
        return cyc;
    }
    bool drain_one_sink() {
        for (Vertex x = 0; x < g_.n(); ++x)
            if (wk_[x] != b_[x] && holder(b_[x]) < 0) {
                wk_.move(x, b_[x]);
                return true;
            }
        return false;
    }
    bool open_good_cycle() {
        std::vector<char> seen(g_.n(), 0);
        for (Vertex v : wrong_vertices()) {
            if (seen[v]) continue;
            auto cyc = cycle_through(v);
            for (Vertex u : cyc) seen[u] = 1;
            if (cyc.empty()) continue;
            std::sort(cyc.begin(), cyc.end());
            for (Vertex u : cyc) {
                auto c = free_colour(u);
                if (!c) continue;
                wk_.move(u, *c);
                // The opened cycle is a directed path; repeatedly fix its sink.
                bool progress = true;
                while (progress) {
                    progress = false;
                    for (Vertex x : cyc)
                        if (wk_[x] != b_[x] && holder(b_[x]) < 0) {
                            wk_.move(x, b_[x]);
                            progress = true;
                            break;
                        }
                }
                return true;
            }
        }
        return false;
    }

    const Graph& g_;
    const ListAssignment& L_;
    const Colouring& b_;
    Walker wk_;
};

}  // namespace

Plan clique_core(const Graph& g, const ListAssignment& L, const Colouring& a, const Colouring& b, Ctx& ctx) {
    if (a == b) return {};
    if (!g.is_complete()) throw PlanGap("clique procedure needs a complete graph");
    auto all = all_vertices(g.n());
    if (union_size(L, all) <= g.n()) throw PlanGap("clique lists use only n colours; every colouring is frozen");
    ctx.note("clique_lemma", all);
    return CliqueRun(g, L, a, b).run();
}

}  // namespace detail

PlanOutcome plan_clique(const Graph& g, const ListAssignment& L, const Colouring& alpha, const Colouring& beta) {
    require_instance(g, L, alpha, beta);
    if (g.n() < 2 || !g.is_complete()) throw domain_error("clique planner needs a complete graph on at least 2 vertices");
    require_one_plus(g, L);
    if (union_size(L, all_vertices(g.n())) == g.n())
        throw domain_error("lists are identical with n colours in total, so all colourings are frozen");
    std::vector<TraceEntry> trace;
    Ctx ctx = Ctx::root(trace, g.n());
    Plan p = clique_core(g, L, alpha, beta, ctx);
    return finish(g, L, alpha, beta, std::move(p), std::move(trace));
}

int winding_number(const Colouring& c) {
    const int n = static_cast<int>(c.size());
    if (n < 3) throw domain_error("winding number needs a cycle on at least 3 vertices");
    int sum = 0;
    for (int i = 0; i < n; ++i) {
        int x = c[i], y = c[(i + 1) % n];
        if (x < 1 || x > 3) throw domain_error("colour " + std::to_string(x) + " is outside {1,2,3}");
        if (x == y) throw domain_error("edge " + std::to_string(i) + " is monochromatic");
        sum += ((y - x + 3) % 3 == 1) ? 1 : -1;
    }
    return sum / 3;
}

int reconf_lower_bound_classes(int n) {
    if (n < 3) throw domain_error("cycle length must be at least 3");
    return (n + 4) / 6;
}

}  // namespace recolor
