#include "recolor/cover.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace recolor {

namespace {

Edge key(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Cross pairs oriented from u to v.
CrossPairs oriented(const Cover& c, Vertex u, Vertex v) {
    auto it = c.cross.find(key(u, v));
    if (it == c.cross.end()) return {};
    CrossPairs out = it->second;
    if (u > v)
        for (auto& [i, j] : out) std::swap(i, j);
    std::sort(out.begin(), out.end());
    return out;
}

using Perm = std::vector<int>;

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

// (a * b)(i) = a(b(i))
Perm compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Full cover of K_n as a permutation per ordered pair: P[u][v][i] is the index
// at v matched with index i at u.
using PermTable = std::vector<std::vector<Perm>>;

PermTable table_of(int n, const std::vector<Perm>& inner_edges_from_star) {
    // Star edges (0, j) are the identity; remaining edges (j, k) in lex order.
    PermTable P(n, std::vector<Perm>(n));
    Perm id(n);
    std::iota(id.begin(), id.end(), 0);
    std::size_t e = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            P[u][v] = u == 0 ? id : inner_edges_from_star[e++];
            P[v][u] = inverse(P[u][v]);
        }
    return P;
}

std::uint64_t encode_inner(int n, const PermTable& P) {
    std::uint64_t code = 0;
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int i = 0; i < n; ++i) code = code * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(P[u][v][i]);
    return code;
}

std::vector<Perm> decode_inner(int n, std::uint64_t code) {
    std::vector<Perm> edges;
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(n);
    for (auto it = edges.rbegin(); it != edges.rend(); ++it)
        for (int i = n - 1; i >= 0; --i) {
            (*it)[i] = static_cast<int>(code % static_cast<std::uint64_t>(n));
            code /= static_cast<std::uint64_t>(n);
        }
    return edges;
}

// Least star-gauged code over vertex relabellings and a global index relabelling.
std::uint64_t canonical_table(int n, const PermTable& P, const std::vector<Perm>& perms) {
    std::uint64_t best = ~std::uint64_t{0};
    PermTable Q(n, std::vector<Perm>(n)), G(n, std::vector<Perm>(n)), R(n, std::vector<Perm>(n));
    for (const Perm& s : perms) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) Q[s[u]][s[v]] = P[u][v];
        // phi_j = Q[0][j]^{-1} makes every star edge the identity.
        std::vector<Perm> phi(n);
        phi[0] = perms.front();
        for (int j = 1; j < n; ++j) phi[j] = inverse(Q[0][j]);
        for (int u = 1; u < n; ++u)
            for (int v = u + 1; v < n; ++v) G[u][v] = compose(compose(phi[v], Q[u][v]), inverse(phi[u]));
        for (const Perm& pi : perms) {
            const Perm pinv = inverse(pi);
            for (int u = 1; u < n; ++u)
                for (int v = u + 1; v < n; ++v) R[u][v] = compose(compose(pi, G[u][v]), pinv);
            best = std::min(best, encode_inner(n, R));
        }
    }
    return best;
}

Cover cover_from_table(int n, const PermTable& P) {
    Cover c;
    c.base = Graph::complete(n);
    c.list_sizes.assign(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            CrossPairs pairs;
            for (int i = 0; i < n; ++i) pairs.emplace_back(i, P[u][v][i]);
            c.cross[{u, v}] = std::move(pairs);
        }
    return c;
}

}  // namespace

CoverCheck validate_cover(const Cover& c) {
    const int n = c.base.n();
    if (static_cast<int>(c.list_sizes.size()) != n) return {false, "lists must partition the cover: one list per base vertex"};
    for (int s : c.list_sizes)
        if (s < 0) return {false, "lists must partition the cover: negative list size"};
    for (const auto& [e, pairs] : c.cross) {
        auto [u, v] = e;
        if (u < 0 || v >= n || u >= v || !c.base.adjacent(u, v))
            return {false, "cross edges may only join lists of adjacent base vertices"};
        std::set<int> left, right;
        for (auto [i, j] : pairs) {
            if (i < 0 || i >= c.list_sizes[u] || j < 0 || j >= c.list_sizes[v])
                return {false, "cross edge endpoint lies outside its list"};
            if (!left.insert(i).second || !right.insert(j).second)
                return {false, "cross edges between two lists must form a matching"};
        }
    }
    return {true, ""};
}

StateSpace cover_space(const Cover& c) {
    if (auto chk = validate_cover(c); !chk.ok) throw malformed_error("invalid cover: " + chk.violation);
    StateSpace s;
    s.radix = c.list_sizes;
    for (auto [u, v] : c.base.edges()) {
        const Edge e = key(u, v);
        std::vector<char> m(static_cast<std::size_t>(c.list_sizes[e.first]) * c.list_sizes[e.second], 0);
        if (auto it = c.cross.find(e); it != c.cross.end())
            for (auto [i, j] : it->second) m[static_cast<std::size_t>(i) * c.list_sizes[e.second] + j] = 1;
        s.edges.push_back(e);
        s.conflict.push_back(std::move(m));
    }
    return s;
}

std::vector<std::vector<int>> cover_colourings(const Cover& c, std::uint64_t budget) {
    const ReconfGraph rg(cover_space(c), budget, Exec::serial);
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < rg.size(); ++i) out.push_back(rg.decode(rg.code(i)));
    return out;
}

ReconfSummary cover_reconf(const Cover& c, const ExploreOptions& opt) { return explore_space(cover_space(c), opt); }

Cover make_straight_cover(const Graph& g, int fold) {
    if (fold < 1) throw domain_error("fold must be positive");
    Cover c;
    c.base = g;
    c.list_sizes.assign(g.n(), fold);
    for (auto [u, v] : g.edges()) {
        CrossPairs pairs;
        for (int i = 0; i < fold; ++i) pairs.emplace_back(i, i);
        c.cross[key(u, v)] = std::move(pairs);
    }
    return c;
}

Cover make_twisted_clique_cover(int n, int q) {
    if (q < 2 || q > n - 1) throw domain_error("twist size q must satisfy 2 <= q <= n - 1");
    Cover c = make_straight_cover(Graph::complete(n), n);
    for (int u = 0; u < q; ++u)
        for (int v = u + 1; v < q; ++v) {
            CrossPairs pairs{{0, 1}, {1, 0}};
            for (int k = 2; k < n; ++k) pairs.emplace_back(k, k);
            c.cross[{u, v}] = std::move(pairs);
        }
    return c;
}

Cover make_twist_everywhere_cover(int n) {
    if (n < 2) throw domain_error("twisting needs at least two colours");
    Cover c = make_straight_cover(Graph::complete(n), n);
    for (auto& [e, pairs] : c.cross) {
        pairs = {{0, 1}, {1, 0}};
        for (int k = 2; k < n; ++k) pairs.emplace_back(k, k);
    }
    return c;
}

Graph mobius_kantor_graph() {
    // Generalized Petersen graph GP(8,3): outer 0..7, inner 8..15.
    std::vector<Edge> edges;
    for (int i = 0; i < 8; ++i) {
        edges.emplace_back(i, (i + 1) % 8);
        edges.emplace_back(i, 8 + i);
        edges.emplace_back(8 + i, 8 + (i + 3) % 8);
    }
    return Graph::build(16, edges);
}

Graph cross_edge_graph(const Cover& c) {
    std::vector<int> offset(c.base.n() + 1, 0);
    for (Vertex v = 0; v < c.base.n(); ++v) offset[v + 1] = offset[v] + c.list_sizes[v];
    std::vector<Edge> edges;
    for (const auto& [e, pairs] : c.cross)
        for (auto [i, j] : pairs) edges.emplace_back(offset[e.first] + i, offset[e.second] + j);
    return Graph::build(offset.back(), edges);
}

Cover make_mobius_kantor_cover() {
    // Split the Moebius-Kantor graph into four lists of four so that every
    // vertex has exactly one neighbour in each other list; the lists become K4.
    const Graph mk = mobius_kantor_graph();
    std::vector<int> part(16, -1);
    std::vector<int> count(4, 0);
    auto consistent = [&](Vertex x) {
        for (Vertex y : mk.neighbours(x)) {
            if (part[y] == part[x]) return false;
            for (Vertex z : mk.neighbours(x))
                if (z != y && part[z] >= 0 && part[z] == part[y]) return false;
        }
        return true;
    };
    auto go = [&](auto&& self, Vertex x) -> bool {
        if (x == 16) return true;
        for (int p = 0; p < 4; ++p) {
            if (count[p] == 4) continue;
            part[x] = p;
            ++count[p];
            bool ok = consistent(x);
            for (Vertex y : mk.neighbours(x))
                if (ok && part[y] >= 0) ok = consistent(y);
            if (ok && self(self, x + 1)) return true;
            --count[p];
            part[x] = -1;
            // Parts are interchangeable; the first empty one is enough.
            if (count[p] == 0) break;
        }
        return false;
    };
    if (!go(go, 0)) throw std::logic_error("Moebius-Kantor graph has no list partition");
    std::vector<int> index(16);
    std::vector<int> seen(4, 0);
    for (Vertex x = 0; x < 16; ++x) index[x] = seen[part[x]]++;
    Cover c;
    c.base = Graph::complete(4);
    c.list_sizes.assign(4, 4);
    for (auto [x, y] : mk.edges()) {
        int u = part[x], v = part[y], i = index[x], j = index[y];
        if (u > v) {
            std::swap(u, v);
            std::swap(i, j);
        }
        c.cross[{u, v}].emplace_back(i, j);
    }
    for (auto& [e, pairs] : c.cross) std::sort(pairs.begin(), pairs.end());
    return c;
}

bool covers_isomorphic(const Cover& a, const Cover& b) {
    const int n = a.base.n();
    if (b.base.n() != n || a.base.edge_count() != b.base.edge_count()) return false;
    if (n > 6) throw domain_error("cover isomorphism is brute force and limited to 6 base vertices");
    for (int s : a.list_sizes)
        if (s > 6) throw domain_error("cover isomorphism is brute force and limited to fold 6");
    Perm sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) ok = a.list_sizes[v] == b.list_sizes[sigma[v]];
        for (auto [u, v] : a.base.edges())
            if (ok && !b.base.adjacent(sigma[u], sigma[v])) ok = false;
        if (!ok) continue;
        // Backtrack over per-vertex index bijections; check edges once both ends are fixed.
        std::vector<Perm> phi(n);
        auto fits = [&](Vertex v) {
            for (Vertex u : a.base.neighbours(v)) {
                if (u > v) continue;
                CrossPairs mapped;
                for (auto [i, j] : oriented(a, u, v)) mapped.emplace_back(phi[u][i], phi[v][j]);
                std::sort(mapped.begin(), mapped.end());
                if (mapped != oriented(b, sigma[u], sigma[v])) return false;
            }
            return true;
        };
        auto go = [&](auto&& self, Vertex v) -> bool {
            if (v == n) return true;
            Perm p(a.list_sizes[v]);
            std::iota(p.begin(), p.end(), 0);
            do {
                phi[v] = p;
                if (fits(v) && self(self, v + 1)) return true;
            } while (std::next_permutation(p.begin(), p.end()));
            return false;
        };
        if (go(go, 0)) return true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}

bool cover_is_bad(const ReconfSummary& s) { return s.non_singleton_count >= 2; }

CoverCensus census_covers(int n, bool gauge) {
    if (n < 2 || n > 4) throw domain_error("cover census supports cliques on 2 to 4 vertices");
    if (!gauge && n > 3) throw domain_error("unpruned census is limited to n <= 3");
    const auto perms = all_perms(n);
    const int inner = (n - 1) * (n - 2) / 2;
    const int free_edges = gauge ? inner : n * (n - 1) / 2;
    std::size_t raw = 1;
    for (int e = 0; e < free_edges; ++e) raw *= perms.size();

    std::vector<std::uint64_t> codes(raw);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::size_t idx = 0; idx < raw; ++idx) {
        std::vector<Perm> chosen;
        std::size_t r = idx;
        for (int e = 0; e < free_edges; ++e) {
            chosen.push_back(perms[r % perms.size()]);
            r /= perms.size();
        }
        PermTable P(n, std::vector<Perm>(n));
        std::size_t k = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                P[u][v] = (gauge && u == 0) ? perms.front() : chosen[k++];
                P[v][u] = inverse(P[u][v]);
            }
        codes[idx] = canonical_table(n, P, perms);
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

    CoverCensus out;
    out.n = n;
    out.fold = n;
    ExploreOptions opt;
    opt.exec = Exec::serial;
    for (std::uint64_t code : codes) {
        CoverClass cls;
        cls.rep = cover_from_table(n, table_of(n, decode_inner(n, code)));
        cls.summary = cover_reconf(cls.rep, opt);
        cls.bad = cover_is_bad(cls.summary);
        out.bad_classes += cls.bad;
        out.classes.push_back(std::move(cls));
    }
    out.total_isomorphism_classes = out.classes.size();
    return out;
}

}  // namespace recolor
