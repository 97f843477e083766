#include "bookem/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <istream>
#include <sstream>

namespace bookem {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (Edge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") out of range for n=" +
                                        std::to_string(n));
        if (e.u == e.v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    std::sort(edges.begin(), edges.end());
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges[i].u) +
                                        "," + std::to_string(edges[i].v) + ")");
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (const Edge& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

int Graph::edge_index(int u, int v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return -1;
}

int max_vertices_cap() {
    if (const char* s = std::getenv("BOOKEM_MAX_VERTICES")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 20000;
}

namespace {

void check_cap(long long n, const char* what) {
    if (n > max_vertices_cap())
        throw std::invalid_argument(std::string(what) + ": " + std::to_string(n) +
                                    " vertices exceeds cap " + std::to_string(max_vertices_cap()));
}

}  // namespace

Graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    check_cap(n, "complete graph");
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph::from_edges(n, std::move(es));
}

Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("bipartite sides must be >= 1");
    check_cap(static_cast<long long>(a) + b, "complete bipartite graph");
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(a) * b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return Graph::from_edges(a + b, std::move(es));
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    check_cap(n, "path");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    return Graph::from_edges(n, std::move(es));
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    check_cap(n, "cycle");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    es.push_back({0, n - 1});
    return Graph::from_edges(n, std::move(es));
}

Graph gen_stacked_triangulation(int level, int max_level) {
    if (level < 0) throw std::invalid_argument("level must be >= 0");
    if (level > max_level)
        throw std::invalid_argument("level " + std::to_string(level) + " exceeds cap " +
                                    std::to_string(max_level));
    long long nv = 1;
    for (int i = 0; i < level; ++i) nv *= 3;
    nv += 2;  // 3 + sum of 2*3^l new vertices per level = 3^level + 2
    check_cap(nv, "stacked triangulation");

    std::vector<Edge> es = {{0, 1}, {0, 2}, {1, 2}};
    // Both sides of the base triangle count as faces, so the result is a
    // triangulation of the sphere with |E| = 3|V| - 6 throughout. New vertices
    // are numbered level by level, within a level by face creation order.
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
    int next = 3;
    for (int l = 0; l < level; ++l) {
        std::vector<std::array<int, 3>> nf;
        nf.reserve(faces.size() * 3);
        for (const auto& f : faces) {
            int v = next++;
            for (int x : f) es.push_back(make_edge(x, v));
            nf.push_back({f[0], f[1], v});
            nf.push_back({f[0], f[2], v});
            nf.push_back({f[1], f[2], v});
        }
        faces = std::move(nf);
    }
    return Graph::from_edges(next, std::move(es));
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Edge> es;
    long long seen = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) {
                n = -1;
                std::string junk;
                if (ls.clear(), ls >> junk)
                    throw ParseError(lineno, "expected \"n m\" header, got '" + junk + "'");
                continue;  // blank / comment-only line
            }
            if (!(ls >> m)) throw ParseError(lineno, "header is missing the edge count");
            if (n < 0 || m < 0) throw ParseError(lineno, "negative value in header");
            std::string junk;
            if (ls >> junk) throw ParseError(lineno, "trailing tokens after header");
            continue;
        }
        long long u, v;
        if (!(ls >> u)) {
            std::string junk;
            if (ls.clear(), ls >> junk)
                throw ParseError(lineno, "expected \"u v\" edge line, got '" + junk + "'");
            continue;
        }
        if (!(ls >> v)) throw ParseError(lineno, "edge line is missing the second endpoint");
        std::string junk;
        if (ls >> junk) throw ParseError(lineno, "trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "endpoint out of range [0," + std::to_string(n - 1) + "]");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        es.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
        ++seen;
    }
    if (n < 0) throw ParseError(lineno, "missing \"n m\" header");
    if (seen != m)
        throw ParseError(lineno, "header promised " + std::to_string(m) + " edges, found " +
                                     std::to_string(seen));
    try {
        return Graph::from_edges(static_cast<int>(n), std::move(es));
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

KTree gen_k_tree(int k, int n, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("k-tree needs k >= 1");
    if (n < k + 1) throw std::invalid_argument("k-tree needs n >= k+1");
    check_cap(n, "k-tree");
    Xorshift64Star rng(seed);
    std::vector<Edge> es;
    // cliques[i] is a k-subset of vertices forming a clique; new vertices
    // extend the pool by k fresh cliques each.
    std::vector<std::vector<int>> cliques;
    std::vector<int> base(k);
    for (int i = 0; i < k; ++i) base[i] = i;
    for (int u = 0; u < k + 1; ++u)
        for (int v = u + 1; v < k + 1; ++v) es.push_back({u, v});
    for (int v = 0; v <= k; ++v) {
        std::vector<int> c;
        for (int u = 0; u <= k; ++u)
            if (u != v) c.push_back(u);
        cliques.push_back(std::move(c));
    }
    KTree t;
    t.k = k;
    t.attached_clique.assign(n, {});
    for (int v = k + 1; v < n; ++v) {
        // copy: the loop below grows cliques and may reallocate
        std::vector<int> c = cliques[rng.next_below(cliques.size())];
        t.attached_clique[v] = c;
        for (int u : c) es.push_back(make_edge(u, v));
        for (int drop = 0; drop < k; ++drop) {
            std::vector<int> nc;
            for (int i = 0; i < k; ++i)
                if (i != drop) nc.push_back(c[i]);
            nc.push_back(v);
            std::sort(nc.begin(), nc.end());
            cliques.push_back(std::move(nc));
        }
    }
    t.graph = Graph::from_edges(n, std::move(es));
    return t;
}

}  // namespace bookem
