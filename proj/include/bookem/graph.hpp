#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace bookem {

struct Edge {
    int u = 0;
    int v = 0;  // normalized u < v
    bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Simple undirected graph on vertices 0..n-1. Edge list is kept sorted and
// duplicate-free; adjacency lists are derived at construction and the value
// is immutable afterwards, so sharing across threads is safe.
class Graph {
public:
    Graph() = default;

    // Validates: endpoints in range, no self-loops, no duplicates.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int idx) const { return edges_[idx]; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Index into edges() of {u,v}, or -1 if absent.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// xorshift64* generator; fixed here so that seeded corpora are reproducible
// across platforms and standard library versions.
class Xorshift64Star {
public:
    explicit Xorshift64Star(std::uint64_t seed)
        : state_(seed != 0 ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dULL;
    }

    // Uniform value in [0, bound), bound > 0.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Generator size cap; the BOOKEM_MAX_VERTICES environment variable overrides
// the default of 20000 vertices.
int max_vertices_cap();

Graph gen_complete(int n);
Graph gen_complete_bipartite(int a, int b);
Graph gen_path(int n);
Graph gen_cycle(int n);

// Stacked triangulation: level 0 is a triangle; each level places one new
// vertex inside every facial triangle. Vertices are numbered breadth-first by
// level, children ordered by the creation index of their face, so output is
// identical across runs. |V| = 3^level + 2.
Graph gen_stacked_triangulation(int level, int max_level = 9);

// A k-tree together with its construction order (a perfect elimination order
// when read backwards) and the clique each vertex was attached to.
struct KTree {
    Graph graph;
    int k = 0;
    // attached_clique[v] is the k-clique vertex v was glued to; empty for the
    // base clique vertices 0..k.
    std::vector<std::vector<int>> attached_clique;
};

// Random k-tree on n >= k+1 vertices; each new vertex picks an existing
// k-clique uniformly from the PRNG stream.
KTree gen_k_tree(int k, int n, std::uint64_t seed);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Text format: '#' comment lines, then "n m", then m lines "u v" with
// 0 <= u < v < n. serialize_graph emits edges in lexicographic order, so
// parse/serialize round-trips to a normal form.
Graph parse_graph(const std::string& text);
Graph parse_graph(std::istream& in);
std::string serialize_graph(const Graph& g);

enum class GraphFamily { complete, complete_bipartite, stacked_triangulation, k_tree, path, cycle, custom };

struct GraphFamilyTag {
    GraphFamily family = GraphFamily::custom;
    std::vector<long long> parameters;
};

}  // namespace bookem
