// One PASS/FAIL line per acceptance criterion. Exit status is non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "recolor/corpus.hpp"
#include "recolor/cover.hpp"
#include "recolor/oracle.hpp"
#include "recolor/planner.hpp"
#include "support.hpp"

using namespace recolor;
using namespace recolor::testing;

namespace {

struct Result {
    bool ok = true;
    std::string detail;
};

std::string sizes_text(const ReconfSummary& s, bool non_singleton_only) {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& c : s.components) {
        if (non_singleton_only && c.size < 2) continue;
        os << (first ? "" : ",") << c.size;
        first = false;
    }
    os << "]";
    return os.str();
}

ExploreOptions no_diameters() {
    ExploreOptions o;
    o.diameters = false;
    return o;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Result c5_split() {
    const auto s = explore(Graph::cycle(5), ListAssignment::uniform(5, 3));
    Result r;
    r.ok = s.total_colourings == 30 && s.frozen_count == 0 && s.sizes() == std::vector<std::uint64_t>{15, 15};
    r.detail = std::to_string(s.total_colourings) + " colourings, " + std::to_string(s.frozen_count) +
               " frozen, components " + sizes_text(s, false);
    return r;
}

Result winding_invariance() {
    Result r;
    long long steps = 0;
    for (int n = 3; n <= 12; ++n) {
        const Graph g = Graph::cycle(n);
        const auto L = ListAssignment::uniform(n, 3);
        const ReconfGraph rg(list_space(g, L), kDefaultBudget, Exec::serial);
        for (std::size_t i = 0; i < rg.size(); ++i) {
            const int f = winding_number(colouring_at(rg, L, i));
            for (std::uint32_t j : rg.neighbours(i)) {
                ++steps;
                if (winding_number(colouring_at(rg, L, j)) != f) r.ok = false;
            }
        }
    }
    const int f0 = winding_number({1, 2, 1, 2, 1, 2, 1, 2});
    const int f2 = winding_number({1, 2, 3, 1, 2, 3, 1, 2});
    r.ok = r.ok && f0 == 0 && f2 == 2;
    r.detail = std::to_string(steps) + " steps on C3..C12 preserve f; C8 pair gives f = " + std::to_string(f0) +
               " and f = " + std::to_string(f2);
    return r;
}

Result cycle_lower_bound() {
    Result r;
    std::ostringstream os;
    for (int n = 5; n <= 12; ++n) {
        const auto s = explore(Graph::cycle(n), ListAssignment::uniform(n, 3), no_diameters());
        const int bound = reconf_lower_bound_classes(n);
        const auto count = s.components.size();
        if (count < static_cast<std::size_t>(bound)) r.ok = false;
        os << "C" << n << ":" << count << ">=" << bound << " ";
    }
    r.detail = os.str();
    return r;
}

// Three qualifying families, each with a vertex of surplus 2.
std::vector<std::pair<std::string, ListAssignment>> key_lemma_families(const Graph& g) {
    std::vector<std::pair<std::string, ListAssignment>> out;
    ListSpec extra;
    extra.policy = ListPolicy::deg1_disjoint_extra;
    out.emplace_back("disjoint-extra", synthesize_lists(g, extra));
    ListAssignment shared = deg1_shared(g);
    std::vector<Colour> l0(shared[0].begin(), shared[0].end());
    l0.push_back(g.degree(0) + 2);
    shared.set(0, l0);
    out.emplace_back("shared-extra", shared);
    ListSpec uni;
    uni.policy = ListPolicy::uniform;
    uni.k = g.max_degree() + 2;
    out.emplace_back("uniform-delta-plus-2", synthesize_lists(g, uni));
    return out;
}

Result key_lemma() {
    Result r;
    std::mt19937_64 rng(20240401);
    int instances = 0, plans = 0, worst_gap = 1 << 30;
    std::string first_failure;
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n))
            for (const auto& [name, L] : key_lemma_families(g)) {
                ++instances;
                const auto s = explore(g, L, no_diameters());
                if (s.components.size() != 1 || s.components[0].size != s.total_colourings) {
                    r.ok = false;
                    if (first_failure.empty()) first_failure = "oracle split on n=" + std::to_string(n) + " " + name;
                }
                const auto cols = all_colourings(g, L, false);
                const int bound = (3 * n * n + 5 * n) / 2;
                for (int k = 0; k < 20; ++k) {
                    const Colouring& a = cols[rng() % cols.size()];
                    const Colouring& b = cols[rng() % cols.size()];
                    ++plans;
                    try {
                        const auto out = plan_key_lemma(g, L, a, b);
                        const int len = static_cast<int>(out.plan.size());
                        worst_gap = std::min(worst_gap, bound - len);
                        if (!reaches(g, L, a, b, out.plan) || len > bound) {
                            r.ok = false;
                            if (first_failure.empty()) first_failure = "bad plan on n=" + std::to_string(n) + " " + name;
                        }
                    } catch (const std::exception& e) {
                        r.ok = false;
                        if (first_failure.empty()) first_failure = e.what();
                    }
                }
            }
    r.detail = std::to_string(instances) + " instances, " + std::to_string(plans) +
               " plans verified, least slack to (3n^2+5n)/2 = " + std::to_string(worst_gap);
    if (!first_failure.empty()) r.detail += "; first failure: " + first_failure;
    return r;
}

Result clique() {
    Result r;
    std::mt19937_64 rng(77);
    int plans = 0, longest = 0;
    for (int n = 2; n <= 6; ++n) {
        const Graph g = Graph::complete(n);
        const auto L = ListAssignment::uniform(n, n + 1);
        const auto cols = all_colourings(g, L, false);
        for (int k = 0; k < 50; ++k) {
            const Colouring& a = cols[rng() % cols.size()];
            const Colouring& b = cols[rng() % cols.size()];
            const auto out = plan_clique(g, L, a, b);
            const int len = static_cast<int>(out.plan.size());
            const auto d = reconf_distance(g, L, a, b);
            ++plans;
            longest = std::max(longest, len);
            if (!reaches(g, L, a, b, out.plan) || 2 * len > 3 * n + 4 || !d || len < *d) r.ok = false;
        }
    }
    r.detail = std::to_string(plans) + " plans within 3n/2+2 and at least the exact distance; longest " +
               std::to_string(longest);
    return r;
}

Result main_theorem() {
    Result r;
    std::mt19937_64 rng(1931);
    int graphs = 0, vacuous = 0;
    long long plans = 0;
    double worst_ratio = 0;
    std::string first_failure;
    for (int n = 4; n <= 7; ++n)
        for (const Graph& g : connected_graphs(n)) {
            if (g.max_degree() < 3) continue;
            ++graphs;
            const auto L = deg1_shared(g);
            const auto s = explore(g, L, no_diameters());
            const auto unfrozen = all_colourings(g, L, true);
            if (unfrozen.empty()) {
                // Complete graphs with identical lists: every colouring is frozen.
                ++vacuous;
                if (s.non_singleton_count != 0 || !g.is_complete()) r.ok = false;
                continue;
            }
            if (s.non_singleton_count != 1) {
                r.ok = false;
                if (first_failure.empty()) first_failure = "oracle reports split unfrozen set";
            }
            auto attempt = [&](const Colouring& a, const Colouring& b) {
                ++plans;
                try {
                    const auto out = plan_main(g, L, a, b);
                    const double len = static_cast<double>(out.plan.size());
                    worst_ratio = std::max(worst_ratio, len / (n * n));
                    if (!reaches(g, L, a, b, out.plan) || len > 10.0 * n * n) {
                        r.ok = false;
                        if (first_failure.empty()) first_failure = "plan failed verification";
                    }
                } catch (const std::exception& e) {
                    r.ok = false;
                    if (first_failure.empty()) first_failure = e.what();
                }
            };
            if (n <= 5) {
                for (const auto& a : unfrozen)
                    for (const auto& b : unfrozen) attempt(a, b);
            } else {
                for (int k = 0; k < 20; ++k) attempt(unfrozen[rng() % unfrozen.size()], unfrozen[rng() % unfrozen.size()]);
            }
        }
    std::ostringstream os;
    os << graphs << " graphs, " << plans << " plans verified, max |plan|/n^2 = " << worst_ratio << " (bound 10); "
       << vacuous << " complete graphs have no unfrozen colouring (0 non-singleton components, vacuous)";
    r.detail = os.str();
    if (!first_failure.empty()) r.detail += "; first failure: " + first_failure;
    return r;
}

Result shattering() {
    Result r;
    std::ostringstream os;
    for (auto [n, p] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {4, 2}}) {
        const Instance inst = gen_shatter_instance(n, p);
        const auto s = explore(inst.graph, inst.lists, no_diameters());
        bool sizes_ok = true;
        for (const auto& c : s.components)
            if (c.size != static_cast<std::uint64_t>(p)) sizes_ok = false;
        const bool ok = static_cast<long long>(s.non_singleton_count) == factorial(n) && sizes_ok;
        r.ok = r.ok && ok;
        os << "(" << n << "," << p << "): " << s.non_singleton_count << " components of size " << p << " ";
    }
    r.detail = os.str();
    return r;
}

std::vector<Graph> frozen_corpus() {
    std::vector<Graph> out;
    for (int n = 3; n <= 8; ++n) out.push_back(Graph::path(n));
    for (int n = 4; n <= 8; ++n) out.push_back(Graph::cycle(n));
    for (int leaves = 3; leaves <= 5; ++leaves) {
        std::vector<Edge> e;
        for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
        out.push_back(Graph::build(leaves + 1, e));
    }
    const std::vector<Edge> paw{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    const std::vector<Edge> diamond{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}};
    out.push_back(Graph::build(4, paw));
    out.push_back(Graph::build(4, diamond));
    for (int rim = 4; rim <= 6; ++rim) {
        std::vector<Edge> e;
        for (int v = 1; v <= rim; ++v) {
            e.emplace_back(0, v);
            e.emplace_back(v, v % rim + 1);
        }
        out.push_back(Graph::build(rim + 1, e));
    }
    for (int n = 5; n <= 7; ++n) {
        std::vector<Edge> e;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!(u == 0 && v == 1)) e.emplace_back(u, v);
        out.push_back(Graph::build(n, e));
    }
    // Cubic graphs admitting rainbow closed neighbourhoods, hence frozen colourings.
    const std::vector<Edge> prism{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
    out.push_back(Graph::build(6, prism));
    std::vector<Edge> cube;
    for (Vertex u = 0; u < 8; ++u)
        for (int bit = 1; bit < 8; bit <<= 1)
            if (u < (u ^ bit)) cube.emplace_back(u, u ^ bit);
    out.push_back(Graph::build(8, cube));
    std::vector<Edge> k33;
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 3; v < 6; ++v) k33.emplace_back(u, v);
    out.push_back(Graph::build(6, k33));
    // Deterministic random fill up to 30 instances, dense enough to carry frozen colourings.
    std::mt19937_64 rng(8);
    while (out.size() < 30) {
        const int n = 5 + static_cast<int>(rng() % 4);
        Graph g = random_connected(n, 0.6, rng);
        if (g.is_complete() || state_estimate(list_space(g, deg1_shared(g))) > kDefaultBudget) continue;
        out.push_back(std::move(g));
    }
    return out;
}

Result frozen_ratio() {
    Result r;
    int frozen_instances = 0;
    double tightest = 0;
    const auto corpus = frozen_corpus();
    for (const Graph& g : corpus) {
        const auto L = deg1_shared(g);
        const auto f = frozen_census(g, L);
        const auto s = swap_set(g);
        const bool inj = check_swap_injection(g, L, s);
        frozen_instances += f.frozen > 0;
        if (f.frozen > 0) tightest = std::max(tightest, f.ratio / f.bound);
        r.ok = r.ok && f.ok && inj;
    }
    std::ostringstream os;
    os << corpus.size() << " instances; " << frozen_instances << " have frozen colourings; max ratio/bound = " << tightest;
    r.detail = os.str();
    return r;
}

Result census() {
    Result r;
    const auto c3 = census_covers(3);
    const auto c4 = census_covers(4);
    const std::vector<Cover> known{make_twisted_clique_cover(4, 2), make_twisted_clique_cover(4, 3),
                                   make_mobius_kantor_cover()};
    std::vector<int> hits(known.size(), 0);
    for (const auto& cls : c4.classes) {
        if (!cls.bad) continue;
        for (std::size_t k = 0; k < known.size(); ++k) hits[k] += covers_isomorphic(cls.rep, known[k]);
    }
    const bool matched = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    r.ok = c3.total_isomorphism_classes == 3 && c3.bad_classes == 1 && c4.total_isomorphism_classes == 75 &&
           c4.bad_classes == 3 && matched;
    r.detail = "K3: (" + std::to_string(c3.total_isomorphism_classes) + "," + std::to_string(c3.bad_classes) + "), K4: (" +
               std::to_string(c4.total_isomorphism_classes) + "," + std::to_string(c4.bad_classes) +
               "), bad K4 classes matched to twisted(4,2), twisted(4,3), Moebius-Kantor: " + (matched ? "yes" : "no");
    return r;
}

Result counterexamples() {
    Result r;
    const auto t2 = cover_reconf(make_twisted_clique_cover(4, 2));
    const auto t3 = cover_reconf(make_twisted_clique_cover(4, 3));
    const auto mk = cover_reconf(make_mobius_kantor_cover());
    r.ok = t2.non_singleton_count == 2 && t3.non_singleton_count == 2 &&
           mk.sizes() == std::vector<std::uint64_t>{24, 24};
    r.detail = "twisted(4,2) non-singleton " + sizes_text(t2, true) + " plus " + std::to_string(t2.frozen_count) +
               " frozen; twisted(4,3) " + sizes_text(t3, true) + "; Moebius-Kantor " + sizes_text(mk, false);
    return r;
}

Result restriction_monotonicity() {
    Result r;
    std::mt19937_64 rng(11);
    int triples = 0, checked = 0;
    while (triples < 500) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = random_connected(n, 0.4, rng);
        std::vector<std::vector<Colour>> lists(n);
        const int palette = g.max_degree() + 3;
        for (Vertex v = 0; v < n; ++v) {
            const int size = g.degree(v) + 1 + static_cast<int>(rng() % 2);
            std::vector<Colour> all(palette);
            std::iota(all.begin(), all.end(), 1);
            std::shuffle(all.begin(), all.end(), rng);
            lists[v].assign(all.begin(), all.begin() + std::min(size, palette));
            std::sort(lists[v].begin(), lists[v].end());
        }
        const ListAssignment L(lists);
        // Random greedy colouring; lists exceed degrees so it always succeeds.
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        Colouring c(n, 0);
        for (Vertex v : order) {
            std::vector<Colour> opts;
            for (Colour col : L[v]) {
                bool used = false;
                for (Vertex u : g.neighbours(v)) used = used || c[u] == col;
                if (!used) opts.push_back(col);
            }
            c[v] = opts[rng() % opts.size()];
        }
        std::vector<Vertex> W;
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 2) W.push_back(v);
        if (W.empty()) W.push_back(static_cast<Vertex>(rng() % n));
        ++triples;
        const Restriction res = restrict(g, L, c, W);
        for (std::size_t i = 0; i < W.size(); ++i) {
            const bool before = !vertex_frozen(g, L, c, res.to_parent[i]);
            const bool after = !vertex_frozen(res.graph, res.lists, res.colouring, static_cast<Vertex>(i));
            if (before) ++checked;
            if (before && !after) r.ok = false;
        }
    }
    r.detail = std::to_string(triples) + " triples, " + std::to_string(checked) + " unfrozen vertices stay unfrozen";
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"C5 split", c5_split},
        {"winding invariance", winding_invariance},
        {"cycle class lower bound", cycle_lower_bound},
        {"Key Lemma", key_lemma},
        {"clique planner", clique},
        {"Main Theorem desk-scale completeness", main_theorem},
        {"shattering", shattering},
        {"frozen ratio", frozen_ratio},
        {"cover census", census},
        {"counterexample components", counterexamples},
        {"restriction monotonicity", restriction_monotonicity},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.ok = false;
            r.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !r.ok;
        std::printf("criterion %2zu %s  %s: %s (%.2f s)\n", i + 1, r.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    r.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
