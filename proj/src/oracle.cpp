#include "recolor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_set>

#include "recolor/error.hpp"
#include "recolor/kernel.hpp"

namespace recolor {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

struct Incidence {
    std::size_t edge;
    Vertex other;
    bool low;  // this vertex is the first endpoint of the edge
};

bool clashes(const StateSpace& s, const std::vector<std::vector<Incidence>>& inc, std::span<const int> opt, Vertex v,
             int choice, Vertex upto) {
    for (const Incidence& e : inc[v]) {
        if (e.other >= upto) continue;
        const int rv = s.radix[s.edges[e.edge].second];
        const int i = e.low ? choice : opt[e.other];
        const int j = e.low ? opt[e.other] : choice;
        if (s.conflict[e.edge][static_cast<std::size_t>(i) * rv + j]) return true;
    }
    return false;
}

std::vector<std::vector<Incidence>> incidences(const StateSpace& s) {
    std::vector<std::vector<Incidence>> inc(s.radix.size());
    for (std::size_t e = 0; e < s.edges.size(); ++e) {
        auto [u, v] = s.edges[e];
        inc[u].push_back({e, v, true});
        inc[v].push_back({e, u, false});
    }
    return inc;
}

std::vector<int> options_of(const ListAssignment& L, const Colouring& c) {
    std::vector<int> opt(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) {
        auto list = L[static_cast<Vertex>(v)];
        auto it = std::lower_bound(list.begin(), list.end(), c[v]);
        if (it == list.end() || *it != c[v])
            throw domain_error("colour " + std::to_string(c[v]) + " is not in the list of vertex " + std::to_string(v));
        opt[v] = static_cast<int>(it - list.begin());
    }
    return opt;
}

void require_census_instance(const Graph& g, const ListAssignment& L) {
    if (L.lists().size() != static_cast<std::size_t>(g.n())) throw malformed_error("list count does not match the graph");
    if (!g.connected()) throw domain_error("graph is not connected");
    if (g.is_complete()) throw domain_error("complete graphs are excluded from the frozen-ratio bound");
    for (Vertex v = 0; v < g.n(); ++v)
        if (L.list_size(v) < g.degree(v) + 1)
            throw domain_error("list of vertex " + std::to_string(v) + " is smaller than its degree plus one");
}

}  // namespace

std::vector<std::uint64_t> ReconfSummary::sizes() const {
    std::vector<std::uint64_t> out;
    for (const auto& c : components) out.push_back(c.size);
    return out;
}

StateSpace list_space(const Graph& g, const ListAssignment& L) {
    if (L.lists().size() != static_cast<std::size_t>(g.n())) throw malformed_error("list count does not match the graph");
    StateSpace s;
    for (Vertex v = 0; v < g.n(); ++v) s.radix.push_back(L.list_size(v));
    for (auto [u, v] : g.edges()) {
        const Vertex a = std::min(u, v), b = std::max(u, v);
        auto la = L[a], lb = L[b];
        std::vector<char> m(la.size() * lb.size(), 0);
        for (std::size_t i = 0; i < la.size(); ++i)
            for (std::size_t j = 0; j < lb.size(); ++j) m[i * lb.size() + j] = la[i] == lb[j];
        s.edges.emplace_back(a, b);
        s.conflict.push_back(std::move(m));
    }
    return s;
}

std::uint64_t state_estimate(const StateSpace& s) {
    std::uint64_t p = 1;
    for (int r : s.radix) {
        if (r == 0) return 0;
        if (p > kSaturated / static_cast<std::uint64_t>(r)) return kSaturated;
        p *= static_cast<std::uint64_t>(r);
    }
    return p;
}

ReconfGraph::ReconfGraph(const StateSpace& s, std::uint64_t budget, Exec exec) : radix_(s.radix) {
    const std::uint64_t est = state_estimate(s);
    if (est > budget) throw BudgetExceeded(est, budget);
    const Vertex n = static_cast<Vertex>(s.radix.size());
    strides_.assign(n, 1);
    for (Vertex v = n - 2; v >= 0; --v) strides_[v] = strides_[v + 1] * static_cast<std::uint64_t>(s.radix[v + 1]);
    const auto inc = incidences(s);

    // Depth-first enumeration with vertex 0 most significant gives ascending codes.
    std::vector<int> opt(n, 0);
    auto rec = [&](auto&& self, Vertex v, std::uint64_t code) -> void {
        if (v == n) {
            codes_.push_back(code);
            return;
        }
        for (int c = 0; c < s.radix[v]; ++c) {
            if (clashes(s, inc, opt, v, c, v)) continue;
            opt[v] = c;
            self(self, v + 1, code + static_cast<std::uint64_t>(c) * strides_[v]);
        }
    };
    if (est > 0) rec(rec, 0, 0);

    const std::size_t m = codes_.size();
    auto scan = [&](std::size_t i, std::uint32_t* out) {
        std::vector<int> o = decode(codes_[i]);
        std::size_t k = 0;
        for (Vertex v = 0; v < n; ++v) {
            const int cur = o[v];
            for (int c = 0; c < s.radix[v]; ++c) {
                if (c == cur || clashes(s, inc, o, v, c, n)) continue;
                if (out) {
                    const std::uint64_t nc = codes_[i] - static_cast<std::uint64_t>(cur) * strides_[v] +
                                             static_cast<std::uint64_t>(c) * strides_[v];
                    out[k] = static_cast<std::uint32_t>(*find(nc));
                }
                ++k;
            }
        }
        return k;
    };
    std::vector<std::size_t> deg(m);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(dynamic, 512) if (par)
    for (std::size_t i = 0; i < m; ++i) deg[i] = scan(i, nullptr);
    offsets_.assign(m + 1, 0);
    for (std::size_t i = 0; i < m; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
    targets_.resize(offsets_[m]);
#pragma omp parallel for schedule(dynamic, 512) if (par)
    for (std::size_t i = 0; i < m; ++i) scan(i, targets_.data() + offsets_[i]);
}

std::optional<std::size_t> ReconfGraph::find(std::uint64_t code) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return std::nullopt;
    return static_cast<std::size_t>(it - codes_.begin());
}

std::vector<int> ReconfGraph::decode(std::uint64_t code) const {
    std::vector<int> o(radix_.size());
    for (std::size_t v = 0; v < radix_.size(); ++v) {
        o[v] = static_cast<int>(code / strides_[v]);
        code %= strides_[v];
    }
    return o;
}

std::uint64_t ReconfGraph::encode(std::span<const int> options) const {
    std::uint64_t code = 0;
    for (std::size_t v = 0; v < options.size(); ++v) code += static_cast<std::uint64_t>(options[v]) * strides_[v];
    return code;
}

std::vector<std::uint32_t> ReconfGraph::components(std::size_t* count) const {
    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> id(size(), kUnset);
    std::uint32_t next = 0;
    std::vector<std::uint32_t> queue;
    for (std::size_t r = 0; r < size(); ++r) {
        if (id[r] != kUnset) continue;
        id[r] = next;
        queue.assign(1, static_cast<std::uint32_t>(r));
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (std::uint32_t t : neighbours(queue[h]))
                if (id[t] == kUnset) {
                    id[t] = next;
                    queue.push_back(t);
                }
        ++next;
    }
    if (count) *count = next;
    return id;
}

ReconfSummary explore_space(const StateSpace& s, const ExploreOptions& opt) {
    const ReconfGraph rg(s, opt.budget, opt.exec);
    ReconfSummary out;
    out.total_colourings = rg.size();
    for (std::size_t i = 0; i < rg.size(); ++i) out.frozen_count += rg.neighbours(i).empty();

    std::size_t k = 0;
    const auto id = rg.components(&k);
    std::vector<std::vector<std::uint32_t>> members(k);
    for (std::size_t i = 0; i < rg.size(); ++i) members[id[i]].push_back(static_cast<std::uint32_t>(i));
    std::vector<ComponentInfo> info(k);
    for (std::size_t c = 0; c < k; ++c) info[c].size = members[c].size();

    if (opt.diameters) {
        // Local index inside the component, for per-root BFS arrays.
        std::vector<std::uint32_t> local(rg.size());
        for (const auto& mem : members)
            for (std::size_t j = 0; j < mem.size(); ++j) local[mem[j]] = static_cast<std::uint32_t>(j);
        struct Task {
            std::uint32_t comp, root;
        };
        std::vector<Task> tasks;
        for (std::size_t c = 0; c < k; ++c) {
            const auto& mem = members[c];
            const bool exact = mem.size() <= opt.exact_diameter_limit;
            info[c].diameter_exact = exact;
            const std::size_t roots = exact ? mem.size() : std::min<std::size_t>(mem.size(), opt.sampled_roots);
            for (std::size_t j = 0; j < roots; ++j)
                tasks.push_back({static_cast<std::uint32_t>(c), mem[exact ? j : j * mem.size() / roots]});
        }
        std::vector<int> ecc(tasks.size(), 0);
        const bool par = opt.exec == Exec::parallel;
#pragma omp parallel if (par)
        {
            std::vector<int> dist;
            std::vector<std::uint32_t> queue;
#pragma omp for schedule(dynamic, 16)
            for (std::size_t t = 0; t < tasks.size(); ++t) {
                const auto& mem = members[tasks[t].comp];
                dist.assign(mem.size(), -1);
                dist[local[tasks[t].root]] = 0;
                queue.assign(1, tasks[t].root);
                int far = 0;
                for (std::size_t h = 0; h < queue.size(); ++h) {
                    const int d = dist[local[queue[h]]];
                    far = std::max(far, d);
                    for (std::uint32_t y : rg.neighbours(queue[h]))
                        if (dist[local[y]] < 0) {
                            dist[local[y]] = d + 1;
                            queue.push_back(y);
                        }
                }
                ecc[t] = far;
            }
        }
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            auto& d = info[tasks[t].comp].diameter;
            d = std::max(d.value_or(0), ecc[t]);
        }
    }
    std::stable_sort(info.begin(), info.end(), [](const ComponentInfo& x, const ComponentInfo& y) {
        if (x.size != y.size) return x.size > y.size;
        return x.diameter.value_or(-1) > y.diameter.value_or(-1);
    });
    for (const auto& c : info) out.non_singleton_count += c.size > 1;
    out.components = std::move(info);
    return out;
}

ReconfSummary explore(const Graph& g, const ListAssignment& L, const ExploreOptions& opt) {
    return explore_space(list_space(g, L), opt);
}

std::optional<int> reconf_distance(const Graph& g, const ListAssignment& L, const Colouring& alpha,
                                   const Colouring& beta, std::uint64_t budget) {
    if (alpha.size() != static_cast<std::size_t>(g.n()) || beta.size() != alpha.size())
        throw malformed_error("colouring length does not match the graph");
    if (!colouring_proper(g, L, alpha) || !colouring_proper(g, L, beta))
        throw domain_error("both colourings must be proper");
    if (alpha == beta) return 0;
    const ReconfGraph rg(list_space(g, L), budget, Exec::serial);
    const auto ia = options_of(L, alpha), ib = options_of(L, beta);
    const std::size_t from = *rg.find(rg.encode(ia)), to = *rg.find(rg.encode(ib));
    std::vector<int> dist(rg.size(), -1);
    std::deque<std::size_t> q{from};
    dist[from] = 0;
    while (!q.empty()) {
        const std::size_t x = q.front();
        q.pop_front();
        if (x == to) return dist[x];
        for (std::uint32_t y : rg.neighbours(x))
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
    }
    return std::nullopt;
}

FrozenCensus frozen_census(const Graph& g, const ListAssignment& L, std::uint64_t budget) {
    require_census_instance(g, L);
    const ReconfGraph rg(list_space(g, L), budget, Exec::parallel);
    FrozenCensus out;
    out.total = rg.size();
    for (std::size_t i = 0; i < rg.size(); ++i) out.frozen += rg.neighbours(i).empty();
    out.ratio = out.total ? static_cast<double>(out.frozen) / static_cast<double>(out.total) : 0.0;
    const double d = g.max_degree();
    out.bound = std::exp2(-static_cast<double>(g.n()) / (d * d * d * d));
    out.ok = out.ratio <= out.bound;
    return out;
}

namespace {

using Mask = std::uint64_t;

// Exact maximum independent set by branch and bound on bitmasks.
class MaxIndependent {
public:
    explicit MaxIndependent(std::vector<Mask> adj) : adj_(std::move(adj)) {}

    Mask solve() {
        const int n = static_cast<int>(adj_.size());
        const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        go(all, 0);
        return best_;
    }

private:
    void go(Mask p, Mask chosen) {
        if (std::popcount(chosen) + std::popcount(p) <= std::popcount(best_)) return;
        if (p == 0) {
            best_ = chosen;
            return;
        }
        // Vertices of degree at most 1 in p can always be taken.
        for (Mask q = p; q; q &= q - 1) {
            const int v = std::countr_zero(q);
            if (std::popcount(adj_[v] & p) <= 1) {
                go(p & ~adj_[v] & ~(Mask{1} << v), chosen | (Mask{1} << v));
                return;
            }
        }
        int pick = -1, deg = -1;
        for (Mask q = p; q; q &= q - 1) {
            const int v = std::countr_zero(q);
            const int d = std::popcount(adj_[v] & p);
            if (d > deg) {
                deg = d;
                pick = v;
            }
        }
        const Mask bit = Mask{1} << pick;
        go(p & ~adj_[pick] & ~bit, chosen | bit);
        go(p & ~bit, chosen);
    }

    std::vector<Mask> adj_;
    Mask best_ = 0;
};

std::vector<Vertex> closed_nbhd(const Graph& g, Vertex v) {
    std::vector<Vertex> s(g.neighbours(v).begin(), g.neighbours(v).end());
    s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<Vertex> difference(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

SwapSet swap_set(const Graph& g) {
    const int n = g.n();
    if (!g.connected()) throw domain_error("graph is not connected");
    if (g.is_complete()) throw domain_error("complete graphs have no edge with distinct closed neighbourhoods");
    if (n > 64) throw domain_error("swap sets are computed exactly only for at most 64 vertices");
    std::vector<Mask> adj(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        const auto d = g.distances_from(v);
        for (Vertex u = 0; u < n; ++u)
            if (u != v && d[u] >= 0 && d[u] <= 4) adj[v] |= Mask{1} << u;
    }
    const Mask I = MaxIndependent(std::move(adj)).solve();
    SwapSet s;
    for (Vertex v = 0; v < n; ++v) {
        if (!(I >> v & 1)) continue;
        const auto nv = closed_nbhd(g, v);
        for (Vertex w : g.neighbours(v)) {
            const auto nw = closed_nbhd(g, w);
            if (nv == nw) continue;
            if (auto d = difference(nv, nw); !d.empty())
                s.edges.push_back({v, w, d.front()});
            else
                s.edges.push_back({w, v, difference(nw, nv).front()});
            break;
        }
    }
    return s;
}

bool check_swap_injection(const Graph& g, const ListAssignment& L, const SwapSet& s, std::uint64_t budget) {
    require_census_instance(g, L);
    for (const auto& e : s.edges)
        if (e.v < 0 || e.v >= g.n() || e.w < 0 || e.w >= g.n() || !g.adjacent(e.v, e.w))
            throw domain_error("swap set contains a non-edge");
    if (s.edges.size() > 20) throw domain_error("swap set is too large to enumerate its subsets");
    const ReconfGraph rg(list_space(g, L), budget, Exec::parallel);
    const std::size_t subsets = std::size_t{1} << s.edges.size();
    std::unordered_set<std::uint64_t> images;
    for (std::size_t i = 0; i < rg.size(); ++i) {
        if (!rg.neighbours(i).empty()) continue;
        const auto opt = rg.decode(rg.code(i));
        Colouring c(g.n());
        for (Vertex v = 0; v < g.n(); ++v) c[v] = L[v][opt[v]];
        for (std::size_t m = 1; m < subsets; ++m) {
            Colouring sw = c;
            for (std::size_t k = 0; k < s.edges.size(); ++k)
                if (m >> k & 1) std::swap(sw[s.edges[k].v], sw[s.edges[k].w]);
            if (!colouring_proper(g, L, sw) || !colouring_unfrozen(g, L, sw)) return false;
            if (!images.insert(rg.encode(options_of(L, sw))).second) return false;
        }
    }
    return true;
}

}  // namespace recolor
