#include "bookem/bounds.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

#include "maxflow.hpp"

namespace bookem {

namespace {

long long edges_inside(const Graph& g, const std::vector<char>& in) {
    long long cnt = 0;
    for (const Edge& e : g.edges()) cnt += in[e.u] && in[e.v];
    return cnt;
}

Rational subset_ratio(const Graph& g, const std::vector<char>& in, int w, int c) {
    long long nv = std::count(in.begin(), in.end(), char(1));
    return Rational(edges_inside(g, in), w * nv - c);
}

std::vector<int> subset_vertices(const std::vector<char>& in) {
    std::vector<int> out;
    for (size_t v = 0; v < in.size(); ++v)
        if (in[v]) out.push_back(static_cast<int>(v));
    return out;
}

DensityResult density_brute(const Graph& g, int w, int c) {
    int n = g.n();
    if (n > 20) throw std::invalid_argument("brute-force density limited to 20 vertices");
    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::vector<int> cnt(std::size_t(1) << n, 0);
    bool found = false;
    Rational best;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int v = std::countr_zero(mask);
        std::uint32_t rest = mask & (mask - 1);
        cnt[mask] = cnt[rest] + std::popcount(adj[v] & rest);
        long long den = static_cast<long long>(w) * std::popcount(mask) - c;
        if (den <= 0) continue;
        Rational r(cnt[mask], den);
        if (!found || best < r) {
            best = r;
            best_mask = mask;
            found = true;
        }
    }
    if (!found) throw std::invalid_argument("no subset with positive denominator");
    std::vector<int> witness;
    for (int v = 0; v < n; ++v)
        if (best_mask >> v & 1) witness.push_back(v);
    return {best, witness};
}

// Discrete-Newton iteration on lambda with selection min-cuts. A subset beats
// lambda = p/q iff q|E(H)| - p*w|H| + p*c > 0; the best such H at fixed
// lambda is a maximum-weight closure (edges weight q must pull in their
// endpoints of weight -p*w), found as source side of a min cut. For c > 0
// the empty set would pass the test spuriously, so a designated edge is
// forced into H; every optimal subset contains an edge, so scanning all
// forced edges while the running maximum only grows stays exact.
DensityResult density_flow(const Graph& g, int w, int c) {
    const int n = g.n(), m = g.m();
    long long whole_den = static_cast<long long>(w) * n - c;
    if (whole_den <= 0) throw std::invalid_argument("no subset with positive denominator");
    std::vector<char> in(n, 1);
    Rational best(m, whole_den);
    std::vector<int> witness = subset_vertices(in);
    if (m == 0) return {best, witness};

    auto improve = [&](const Rational& lambda, int forced_edge) -> std::vector<char> {
        long long p = lambda.num, q = lambda.den;
        detail::MaxFlow mf(2 + n + m);
        const int src = 0, snk = 1;
        for (int v = 0; v < n; ++v) mf.add_edge(2 + v, snk, p * w);
        for (int e = 0; e < m; ++e) {
            mf.add_edge(src, 2 + n + e, q);
            mf.add_edge(2 + n + e, 2 + g.edge(e).u, detail::MaxFlow::kInf);
            mf.add_edge(2 + n + e, 2 + g.edge(e).v, detail::MaxFlow::kInf);
        }
        if (forced_edge >= 0) {
            mf.add_edge(src, 2 + g.edge(forced_edge).u, detail::MaxFlow::kInf);
            mf.add_edge(src, 2 + g.edge(forced_edge).v, detail::MaxFlow::kInf);
        }
        long long cut = mf.max_flow(src, snk);
        if (static_cast<long long>(q) * m - cut + p * c <= 0) return {};
        std::vector<char> side = mf.source_side(src);
        std::vector<char> h(n, 0);
        for (int v = 0; v < n; ++v) h[v] = side[2 + v];
        return h;
    };
    auto take = [&](const std::vector<char>& h) {
        Rational r = subset_ratio(g, h, w, c);
        if (!(best < r)) throw std::logic_error("density search failed to improve");
        best = r;
        witness = subset_vertices(h);
    };

    if (c == 0) {
        for (std::vector<char> h; !(h = improve(best, -1)).empty();) take(h);
    } else {
        for (int e = 0; e < m; ++e)
            for (std::vector<char> h; !(h = improve(best, e)).empty();) take(h);
    }
    return {best, witness};
}

}  // namespace

DensityResult max_subgraph_density(const Graph& g, int w, int c, DensityStrategy strategy) {
    if (w < 1 || c < 0 || c >= 2 * w)
        throw std::invalid_argument("density objective requires w >= 1 and 0 <= c < 2w");
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    switch (strategy) {
        case DensityStrategy::brute_force:
            return density_brute(g, w, c);
        case DensityStrategy::flow:
            return density_flow(g, w, c);
        case DensityStrategy::automatic:
        default:
            return g.n() <= 15 ? density_brute(g, w, c) : density_flow(g, w, c);
    }
}

DensityResult max_average_degree(const Graph& g, DensityStrategy strategy) {
    DensityResult r = max_subgraph_density(g, 1, 0, strategy);
    r.value = r.value * Rational(2);
    return r;
}

DensityReport density_report(const Graph& g, DensityStrategy strategy) {
    DensityReport rep;
    DensityResult madr = max_average_degree(g, strategy);
    rep.mad = madr.value;
    rep.mad_witness = std::move(madr.witness);
    if (g.m() == 0) {
        rep.local_density = Rational(0);
        return rep;
    }
    DensityResult loc = max_subgraph_density(g, 2, 3, strategy);
    rep.local_density = loc.value;
    rep.local_density_witness = std::move(loc.witness);
    return rep;
}

int density_lower_bound(const Graph& g, DensityStrategy strategy) {
    if (g.m() == 0) return 0;
    return static_cast<int>(max_subgraph_density(g, 2, 3, strategy).value.ceil());
}

int refined_local_lower_bound(const Graph& g, int pn_lower) {
    if (pn_lower < 0) throw std::invalid_argument("pn_lower must be >= 0");
    long long nv = g.n(), ne = g.m();
    for (int k = 0;; ++k)
        if (ne <= 2LL * k * nv - 3LL * std::max<long long>(pn_lower, k)) return k;
}

namespace {

// Unique tree path between u and v inside one forest's adjacency structure;
// empty if u and v are in different components.
std::vector<int> tree_path(const std::vector<std::vector<std::pair<int, int>>>& adj, int u,
                           int v) {
    if (u == v) return {};
    std::vector<int> par_edge(adj.size(), -1), par_vert(adj.size(), -1);
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> q;
    q.push(u);
    seen[u] = 1;
    while (!q.empty() && !seen[v]) {
        int x = q.front();
        q.pop();
        for (auto [y, e] : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                par_edge[y] = e;
                par_vert[y] = x;
                q.push(y);
            }
    }
    if (!seen[v]) return {};
    std::vector<int> path;
    for (int x = v; x != u; x = par_vert[x]) path.push_back(par_edge[x]);
    return path;
}

}  // namespace

ForestPartition arboricity_partition(const Graph& g) {
    const int n = g.n(), m = g.m();
    ForestPartition fp;
    if (m == 0) return fp;

    std::vector<int> forest_of(m, -1);
    // adj[f][v] = (neighbor, edge id) pairs of forest f
    std::vector<std::vector<std::vector<std::pair<int, int>>>> adj;
    auto attach = [&](int f, int e) {
        adj[f][g.edge(e).u].push_back({g.edge(e).v, e});
        adj[f][g.edge(e).v].push_back({g.edge(e).u, e});
        forest_of[e] = f;
    };
    auto detach = [&](int f, int e) {
        for (int v : {g.edge(e).u, g.edge(e).v}) {
            auto& lst = adj[f][v];
            for (size_t i = 0; i < lst.size(); ++i)
                if (lst[i].second == e) {
                    lst[i] = lst.back();
                    lst.pop_back();
                    break;
                }
        }
    };

    for (int e0 = 0; e0 < m; ++e0) {
        // shortest exchange chain: displace edges along tree paths until some
        // edge lands in a forest where its endpoints are disconnected
        std::vector<int> pred(m, -2);  // -2 unvisited, -1 chain start
        std::queue<int> bfs;
        bfs.push(e0);
        pred[e0] = -1;
        int done_edge = -1, done_forest = -1;
        while (!bfs.empty() && done_edge < 0) {
            int x = bfs.front();
            bfs.pop();
            for (int f = 0; f < static_cast<int>(adj.size()) && done_edge < 0; ++f) {
                if (f == forest_of[x]) continue;
                std::vector<int> path = tree_path(adj[f], g.edge(x).u, g.edge(x).v);
                if (path.empty()) {
                    done_edge = x;
                    done_forest = f;
                } else {
                    for (int y : path)
                        if (pred[y] == -2) {
                            pred[y] = x;
                            bfs.push(y);
                        }
                }
            }
        }
        if (done_edge < 0) {
            adj.emplace_back(n);
            done_edge = e0;
            done_forest = static_cast<int>(adj.size()) - 1;
        }
        for (int x = done_edge, f = done_forest; ; ) {
            int old = forest_of[x];
            if (old >= 0) detach(old, x);
            attach(f, x);
            if (pred[x] == -1) break;
            x = pred[x];
            f = old;
        }
    }

    fp.arboricity = static_cast<int>(adj.size());
    fp.forests.resize(adj.size());
    for (int e = 0; e < m; ++e) fp.forests[forest_of[e]].push_back(e);

    // each part must be acyclic and the count must match the density ceiling
    for (const auto& forest : fp.forests) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int e : forest) {
            int a = find(g.edge(e).u), b = find(g.edge(e).v);
            if (a == b) throw std::logic_error("forest partition produced a cycle");
            parent[a] = b;
        }
    }
    long long nw = max_subgraph_density(g, 1, 1).value.ceil();
    if (nw != fp.arboricity) throw std::logic_error("forest count differs from density ceiling");
    return fp;
}

bool bounds_chain_holds(const Graph& g, int pnl, int pnu, int pn) {
    if (pn < pnu || pnu < pnl) return false;
    return max_average_degree(g).value <= Rational(4LL * pnl);
}

}  // namespace bookem
