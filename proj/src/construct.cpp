#include "bookem/construct.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace bookem {

StarForestPartition star_forests_from_forests(const ForestPartition& fp, const Graph& g) {
    StarForestPartition out;
    for (const auto& forest : fp.forests) {
        std::vector<std::vector<std::pair<int, int>>> adj(g.n());
        for (int e : forest) {
            adj[g.edge(e).u].push_back({g.edge(e).v, e});
            adj[g.edge(e).v].push_back({g.edge(e).u, e});
        }
        // root every tree at its smallest vertex; an edge joins a parent at
        // depth d to a child at d+1 and goes to group d mod 2, which makes
        // each group a disjoint union of stars centered at the parents
        std::vector<int> depth(g.n(), -1);
        std::vector<int> group_edges[2], group_centers[2];
        for (int root = 0; root < g.n(); ++root) {
            if (depth[root] != -1 || adj[root].empty()) continue;
            depth[root] = 0;
            std::queue<int> q;
            q.push(root);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (auto [y, e] : adj[x])
                    if (depth[y] == -1) {
                        depth[y] = depth[x] + 1;
                        int side = depth[x] % 2;
                        group_edges[side].push_back(e);
                        group_centers[side].push_back(x);
                        q.push(y);
                    }
            }
        }
        for (int side = 0; side < 2; ++side) {
            if (group_edges[side].empty()) continue;
            auto& centers = group_centers[side];
            std::sort(centers.begin(), centers.end());
            centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
            std::sort(group_edges[side].begin(), group_edges[side].end());
            out.star_forests.push_back(std::move(group_edges[side]));
            out.centers.push_back(std::move(centers));
        }
    }
    return out;
}

LinearEmbedding union_embedding_from_star_forests(const StarForestPartition& sfp,
                                                  const Graph& g) {
    std::vector<int> assign(g.m(), -1);
    for (size_t f = 0; f < sfp.star_forests.size(); ++f)
        for (int e : sfp.star_forests[f]) {
            if (e < 0 || e >= g.m() || assign[e] != -1)
                throw std::invalid_argument("star forests do not partition the edges");
            assign[e] = static_cast<int>(f);
        }
    for (int a : assign)
        if (a < 0) throw std::invalid_argument("star forests do not partition the edges");
    return LinearEmbedding::make(g, SpineOrder::identity(g.n()),
                                 PagePartition::from_assignment(std::move(assign)));
}

StarPartition greedy_star_partition(const Graph& g) {
    const int n = g.n();
    // greedy minimum-degree elimination; rank = removal time
    std::set<std::pair<int, int>> pq;
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        pq.insert({deg[v], v});
    }
    std::vector<int> rank(n, 0);
    for (int step = 0; step < n; ++step) {
        int v = pq.begin()->second;
        pq.erase(pq.begin());
        gone[v] = 1;
        rank[v] = step;
        for (int u : g.neighbors(v))
            if (!gone[u]) {
                pq.erase({deg[u], u});
                --deg[u];
                pq.insert({deg[u], u});
            }
    }
    // edge goes to the star of its later-removed endpoint; the earlier
    // endpoint had at most (degeneracy) later neighbors when removed, so no
    // vertex is a leaf of more than that many stars
    std::vector<std::vector<int>> by_center(n);
    for (int e = 0; e < g.m(); ++e) {
        const Edge& ed = g.edge(e);
        int center = rank[ed.u] > rank[ed.v] ? ed.u : ed.v;
        by_center[center].push_back(e);
    }
    StarPartition sp;
    for (int v = 0; v < n; ++v)
        if (!by_center[v].empty()) {
            sp.stars.push_back(std::move(by_center[v]));
            sp.centers.push_back(v);
        }
    return sp;
}

LinearEmbedding local_embedding_from_stars(const Graph& g, const StarPartition& sp) {
    if (sp.stars.size() != sp.centers.size())
        throw std::invalid_argument("star list and center list differ in length");
    std::vector<int> assign(g.m(), -1);
    for (size_t i = 0; i < sp.stars.size(); ++i) {
        if (sp.stars[i].empty()) throw std::invalid_argument("empty star");
        for (int e : sp.stars[i]) {
            if (e < 0 || e >= g.m() || assign[e] != -1)
                throw std::invalid_argument("stars do not partition the edges");
            if (g.edge(e).u != sp.centers[i] && g.edge(e).v != sp.centers[i])
                throw std::invalid_argument("part is not a star around its center");
            assign[e] = static_cast<int>(i);
        }
    }
    for (int a : assign)
        if (a < 0) throw std::invalid_argument("stars do not partition the edges");
    return LinearEmbedding::make(g, SpineOrder::identity(g.n()),
                                 PagePartition::from_assignment(std::move(assign)));
}

LinearEmbedding kn_zigzag(int n) {
    if (n < 2) throw std::invalid_argument("zigzag needs n >= 2");
    const int N = n + (n & 1);  // odd n: build K_{n+1} pages, drop the extra vertex
    Graph g = gen_complete(n);
    std::vector<int> assign(g.m(), -1);
    for (int i = 0; i < N / 2; ++i) {
        std::vector<int> seq = {i};
        for (int s = 1; s < N; ++s)
            seq.push_back(s % 2 ? (i + (s + 1) / 2) % N : ((i - s / 2) % N + N) % N);
        for (int j = 0; j + 1 < N; ++j) {
            if (seq[j] >= n || seq[j + 1] >= n) continue;
            int e = g.edge_index(seq[j], seq[j + 1]);
            if (assign[e] != -1) throw std::logic_error("zigzag page overlap");
            assign[e] = i;
        }
    }
    for (int a : assign)
        if (a < 0) throw std::logic_error("zigzag left an edge unassigned");
    return LinearEmbedding::make(g, SpineOrder::identity(n),
                                 PagePartition::from_assignment(std::move(assign)));
}

namespace {

struct TemplateSearch {
    int n, s, t, cap;
    long long budget, nodes = 0;
    Graph kn;
    std::vector<char> covered;
    std::vector<std::vector<std::pair<int, int>>> tmpl;   // (start, length)
    std::vector<std::vector<int>> endpoint_uses;          // per template, per position
    bool timed_out = false;

    TemplateSearch(int n_, int cap_, int t_, int s_, long long budget_)
        : n(n_), s(s_), t(t_), cap(cap_), budget(budget_), kn(gen_complete(n_)),
          covered(kn.m(), 0), tmpl(t_), endpoint_uses(t_, std::vector<int>(n_, 0)) {}

    int chord_edge(int start, int len) const { return kn.edge_index(start, (start + len) % n); }

    bool locality_ok() const {
        for (int v = 0; v < n; ++v) {
            int cnt = 0;
            for (int j = 0; j < t; ++j)
                for (int p = 0; p < n; ++p)
                    if (endpoint_uses[j][p] > 0 && (v - p + n) % n < s) ++cnt;
            if (cnt > cap) return false;
        }
        return true;
    }

    bool chord_fits_page(int j, int start, int len) const {
        int a1 = start, a2 = (start + len) % n;
        if (a1 > a2) std::swap(a1, a2);
        for (auto [st, ln] : tmpl[j]) {
            int b1 = st, b2 = (st + ln) % n;
            if (b1 > b2) std::swap(b1, b2);
            if ((a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)) return false;
        }
        return true;
    }

    // orbit = the s shifted copies; all must be distinct uncovered edges
    bool orbit_free(int start, int len, std::vector<int>& ids) const {
        ids.clear();
        for (int r = 0; r < s; ++r) {
            int e = chord_edge((start + r) % n, len);
            if (covered[e]) return false;
            for (int prev : ids)
                if (prev == e) return false;
            ids.push_back(e);
        }
        return true;
    }

    bool place(int j, int start, int len, const std::vector<int>& ids) {
        tmpl[j].push_back({start, len});
        ++endpoint_uses[j][start];
        ++endpoint_uses[j][(start + len) % n];
        for (int e : ids) covered[e] = 1;
        if (locality_ok() && search()) return true;
        for (int e : ids) covered[e] = 0;
        --endpoint_uses[j][start];
        --endpoint_uses[j][(start + len) % n];
        tmpl[j].pop_back();
        return false;
    }

    bool search() {
        if (++nodes > budget) {
            timed_out = true;
            return false;
        }
        int target = -1;
        for (int e = 0; e < kn.m(); ++e)
            if (!covered[e]) {
                target = e;
                break;
            }
        if (target < 0) return true;
        int u = kn.edge(target).u, v = kn.edge(target).v;
        int d = (v - u + n) % n;
        int start = u;
        if (d > n - d) {
            d = n - d;
            start = v;
        }
        std::vector<int> ids;
        for (int r = 0; r < s; ++r) {
            if (timed_out) return false;
            int c = (start - r + n) % n;
            if (!orbit_free(c, d, ids)) continue;
            for (int j = 0; j < t; ++j) {
                if (!chord_fits_page(j, c, d)) continue;
                if (place(j, c, d, ids)) return true;
                if (timed_out) return false;
                if (tmpl[j].empty()) break;  // later empty templates are symmetric
            }
        }
        return false;
    }
};

}  // namespace

TemplateSearchResult template_search(int n, int locality, int num_templates, int shifts,
                                     long long node_budget) {
    if (n < 2 || locality < 1 || num_templates < 1 || shifts < 1)
        throw std::invalid_argument("template search parameters must be positive");
    TemplateSearchResult res;
    long long edges = static_cast<long long>(n) * (n - 1) / 2;
    // every length class is a cycle of n starts (n/2 starts for the diameter
    // class) tiled by intervals of length `shifts`
    bool arithmetic_ok = edges % shifts == 0 && n % shifts == 0 &&
                         (n % 2 != 0 || (n / 2) % shifts == 0);
    if (!arithmetic_ok) {
        res.status = TemplateSearchResult::Status::not_found;
        return res;
    }
    TemplateSearch ts(n, locality, num_templates, shifts, node_budget);
    // rotation symmetry: some page contains a length-1 chord; rotate it to
    // (0,1) and call its template the first
    std::vector<int> ids;
    bool found = false;
    if (ts.orbit_free(0, 1, ids) && ts.chord_fits_page(0, 0, 1)) found = ts.place(0, 0, 1, ids);
    res.nodes = ts.nodes;
    if (ts.timed_out) {
        res.status = TemplateSearchResult::Status::timeout;
        return res;
    }
    if (!found) {
        res.status = TemplateSearchResult::Status::not_found;
        return res;
    }
    res.status = TemplateSearchResult::Status::found;
    for (int j = 0; j < num_templates; ++j) {
        if (ts.tmpl[j].empty()) continue;
        CyclicTemplate ct;
        ct.n = n;
        ct.shifts = shifts;
        ct.chords = ts.tmpl[j];
        std::sort(ct.chords.begin(), ct.chords.end());
        res.templates.push_back(std::move(ct));
    }
    return res;
}

LinearEmbedding embedding_from_templates(const std::vector<CyclicTemplate>& templates) {
    if (templates.empty()) throw std::invalid_argument("no templates");
    const int n = templates[0].n, s = templates[0].shifts;
    for (const CyclicTemplate& ct : templates)
        if (ct.n != n || ct.shifts != s || ct.chords.empty())
            throw std::invalid_argument("templates disagree on n or shifts");
    Graph g = gen_complete(n);
    std::vector<int> assign(g.m(), -1);
    int page = 0;
    for (const CyclicTemplate& ct : templates)
        for (int r = 0; r < s; ++r, ++page)
            for (auto [start, len] : ct.chords) {
                int e = g.edge_index((start + r) % n, (start + len + r) % n);
                if (assign[e] != -1) throw std::invalid_argument("templates overlap");
                assign[e] = page;
            }
    for (int a : assign)
        if (a < 0) throw std::invalid_argument("templates do not tile all edges");
    return LinearEmbedding::make(g, SpineOrder::identity(n),
                                 PagePartition::from_assignment(std::move(assign)));
}

namespace {

void require_ktree(const KTree& t) {
    const Graph& g = t.graph;
    const int k = t.k, n = g.n();
    bool ok = k >= 1 && n >= k + 1 &&
              g.m() == static_cast<long long>(k) * n - static_cast<long long>(k) * (k + 1) / 2 &&
              static_cast<int>(t.attached_clique.size()) == n;
    for (int u = 0; ok && u <= k; ++u) {
        ok = t.attached_clique[u].empty();
        for (int v = u + 1; ok && v <= k; ++v) ok = g.has_edge(u, v);
    }
    for (int v = k + 1; ok && v < n; ++v) {
        const auto& c = t.attached_clique[v];
        ok = static_cast<int>(c.size()) == k;
        for (size_t i = 0; ok && i < c.size(); ++i) {
            ok = c[i] >= 0 && c[i] < v && g.has_edge(c[i], v);
            for (size_t j = i + 1; ok && j < c.size(); ++j) ok = g.has_edge(c[i], c[j]);
        }
    }
    if (!ok) throw std::invalid_argument("input is not a k-tree with construction order");
}

}  // namespace

KTreeColoring ktree_color_partition(const KTree& t) {
    require_ktree(t);
    const Graph& g = t.graph;
    const int k = t.k, n = g.n();
    KTreeColoring out;
    out.colors.assign(n, -1);
    for (int v = 0; v <= k; ++v) out.colors[v] = v;
    for (int v = k + 1; v < n; ++v) {
        std::vector<char> used(k + 1, 0);
        for (int u : t.attached_clique[v]) used[out.colors[u]] = 1;
        for (int c = 0; c <= k; ++c)
            if (!used[c]) {
                if (out.colors[v] != -1) throw std::logic_error("attachment clique misses a color");
                out.colors[v] = c;
            }
        if (out.colors[v] == -1) throw std::logic_error("no free color for new vertex");
    }
    for (const Edge& e : g.edges())
        if (out.colors[e.u] == out.colors[e.v]) throw std::logic_error("coloring not proper");
    for (int e = 0; e < g.m(); ++e) {
        int a = out.colors[g.edge(e).u], b = out.colors[g.edge(e).v];
        out.pair_trees[{std::min(a, b), std::max(a, b)}].push_back(e);
    }
    // every class must be one tree: acyclic and connected on its support
    for (const auto& [pair, edges] : out.pair_trees) {
        std::vector<int> parent(n, -1);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int verts = 0, merges = 0;
        for (int e : edges)
            for (int v : {g.edge(e).u, g.edge(e).v})
                if (parent[v] == -1) {
                    parent[v] = v;
                    ++verts;
                }
        for (int e : edges) {
            int a = find(g.edge(e).u), b = find(g.edge(e).v);
            if (a == b) throw std::logic_error("color pair class has a cycle");
            parent[a] = b;
            ++merges;
        }
        if (merges != verts - 1) throw std::logic_error("color pair class is disconnected");
    }
    return out;
}

KTree amplify_ktree(const KTree& t, int ell, int max_vertices) {
    if (ell < 1) throw std::invalid_argument("amplification needs ell >= 1");
    require_ktree(t);
    if (t.k == 1) return t;  // a single edge already suffices at k = 1
    const Graph& g = t.graph;
    const int k = t.k, n = g.n();
    // all k-cliques arise as k-subsets of the construction's (k+1)-cliques
    std::set<std::vector<int>> cliques;
    std::vector<std::vector<int>> big;
    std::vector<int> base(k + 1);
    std::iota(base.begin(), base.end(), 0);
    big.push_back(base);
    for (int v = k + 1; v < n; ++v) {
        std::vector<int> c = t.attached_clique[v];
        c.push_back(v);
        std::sort(c.begin(), c.end());
        big.push_back(std::move(c));
    }
    for (const auto& c : big)
        for (int drop = 0; drop <= k; ++drop) {
            std::vector<int> sub;
            for (int i = 0; i <= k; ++i)
                if (i != drop) sub.push_back(c[i]);
            cliques.insert(std::move(sub));
        }
    const long long per_clique = 3LL * k * k * ell;
    long long total = n + per_clique * static_cast<long long>(cliques.size());
    int cap = max_vertices > 0 ? max_vertices : max_vertices_cap();
    if (total > cap)
        throw std::invalid_argument("amplified graph would have " + std::to_string(total) +
                                    " vertices, cap " + std::to_string(cap));
    std::vector<Edge> edges = g.edges();
    KTree out;
    out.k = k;
    out.attached_clique = t.attached_clique;
    int next = n;
    for (const auto& c : cliques)
        for (long long i = 0; i < per_clique; ++i, ++next) {
            for (int u : c) edges.push_back({u, next});
            out.attached_clique.push_back(c);
        }
    out.graph = Graph::from_edges(next, std::move(edges));
    return out;
}

BoundReport make_bound_report(const Graph& g, BoundTarget target, int pn_lower_hint,
                              int max_pipeline_vertices) {
    if (pn_lower_hint < 0) throw std::invalid_argument("pn_lower_hint must be >= 0");
    BoundReport rep;
    rep.target = target;
    auto add_lower = [&](int v, const std::string& rule, const std::string& wit) {
        rep.provenance.push_back({v, rule, wit});
        rep.lower = std::max(rep.lower, v);
    };
    auto add_upper = [&](int v, const std::string& rule, const std::string& wit) {
        rep.provenance.push_back({v, rule, wit});
        rep.upper = rep.upper < 0 ? v : std::min(rep.upper, v);
    };

    bool exact_density = g.n() <= 15 || g.n() <= max_pipeline_vertices;
    DensityResult madr = max_average_degree(g);
    add_lower(static_cast<int>((madr.value * Rational(1, 4)).ceil()), "avg-degree/4",
              "mad = " + madr.value.str());
    int dens = 0;
    if (g.m() > 0 && exact_density) {
        DensityResult loc = max_subgraph_density(g, 2, 3);
        dens = static_cast<int>(loc.value.ceil());
        add_lower(dens, "subgraph-density",
                  "|E(H)|/(2|V(H)|-3) = " + loc.value.str() + " on " +
                      std::to_string(loc.witness.size()) + " vertices");
        add_lower(refined_local_lower_bound(g, std::max(pn_lower_hint, dens)), "refined-density",
                  "pn lower bound " + std::to_string(std::max(pn_lower_hint, dens)));
    } else if (pn_lower_hint > 0) {
        add_lower(refined_local_lower_bound(g, pn_lower_hint), "refined-density",
                  "pn lower bound " + std::to_string(pn_lower_hint));
    }

    if (g.m() == 0) {
        add_upper(0, "edgeless", "");
        return rep;
    }
    add_upper((g.n() + 1) / 2, "zigzag-host", "complete graph on " + std::to_string(g.n()));
    if (target == BoundTarget::pn_local) {
        LinearEmbedding emb = local_embedding_from_stars(g, greedy_star_partition(g));
        VerificationReport vr = verify(emb, 0);
        if (!vr.is_book) throw std::logic_error("star pages must be crossing-free");
        add_upper(vr.locality, "degeneracy-stars",
                  std::to_string(vr.page_count) + " stars, locality " +
                      std::to_string(vr.locality));
    }
    if (target != BoundTarget::pn_classic && g.n() <= max_pipeline_vertices) {
        StarForestPartition sfp = star_forests_from_forests(arboricity_partition(g), g);
        LinearEmbedding emb = union_embedding_from_star_forests(sfp, g);
        VerificationReport vr = verify(emb, 0);
        if (!vr.is_union) throw std::logic_error("star forest pages must satisfy the union check");
        add_upper(vr.page_count, "star-forest-pipeline",
                  std::to_string(vr.page_count) + " star forests");
    }
    return rep;
}

}  // namespace bookem
