#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bookem/graph.hpp"

namespace bookem {

// Vertex order along the spine. order is position -> vertex, inverse is
// vertex -> position; both always agree.
struct SpineOrder {
    std::vector<int> order;
    std::vector<int> inverse;

    static SpineOrder from_order(std::vector<int> order);
    static SpineOrder identity(int n);

    int n() const { return static_cast<int>(order.size()); }
    int position_of(int v) const { return inverse[v]; }
    int vertex_at(int pos) const { return order[pos]; }
    bool operator==(const SpineOrder& o) const { return order == o.order; }
};

// Assignment of every edge (by index into Graph::edges()) to a page.
// Normal form: page ids are contiguous 0..page_count-1 and no page is empty.
struct PagePartition {
    std::vector<int> page_of_edge;
    int page_count = 0;

    // Requires ids already in normal form.
    static PagePartition from_assignment(std::vector<int> page_of_edge);
    // Compacts arbitrary non-negative ids, preserving first-use order.
    static PagePartition normalized(const std::vector<int>& raw);

    int m() const { return static_cast<int>(page_of_edge.size()); }
    bool operator==(const PagePartition& o) const { return page_of_edge == o.page_of_edge; }
};

struct LinearEmbedding {
    Graph graph;
    SpineOrder spine;
    PagePartition pages;

    // Validates spine length = n and assignment domain = edge list.
    static LinearEmbedding make(Graph graph, SpineOrder spine, PagePartition pages);
};

// True iff the endpoints strictly interleave along the spine. Edges sharing
// an endpoint never cross.
bool crosses(const Edge& a, const Edge& b, const SpineOrder& spine);

// Precomputed edge-vs-edge crossing bits; rows are 64-bit blocks so search
// code can mask whole pages at once.
class CrossingMatrix {
public:
    CrossingMatrix(const Graph& g, const SpineOrder& spine);

    int m() const { return m_; }
    int words() const { return words_; }
    bool crosses(int e1, int e2) const {
        return (row(e1)[e2 >> 6] >> (e2 & 63)) & 1u;
    }
    const std::uint64_t* row(int e) const { return bits_.data() + static_cast<size_t>(e) * words_; }
    // Number of edges crossing edge e.
    int crossing_degree(int e) const;

private:
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct Violation {
    Edge e1;
    Edge e2;
    int page = 0;
    // same_page: crossing pair on one page (book condition fails).
    // same_component: crossing pair inside one connected component of a page
    // (union condition fails).
    enum class Kind { same_page, same_component } kind = Kind::same_page;
};

struct VerificationReport {
    bool is_book = false;
    bool is_union = false;
    int page_count = 0;
    int locality = 0;
    std::vector<int> per_vertex_locality;
    std::vector<Violation> violations;
    bool violations_truncated = false;
};

inline constexpr int kDefaultWitnessCap = 32;
inline constexpr int kCrossingMatrixMaxEdges = 4096;

// Checks the book condition (no two edges of a page cross) and the union
// condition (no two edges in the same connected component of a page cross;
// crossings between distinct components of one page are fine), and computes
// the per-vertex page counts. witness_cap < 0 lifts the cap.
VerificationReport verify(const LinearEmbedding& emb, int witness_cap = kDefaultWitnessCap);

// Number of distinct pages among each vertex's incident edges.
std::vector<int> locality_profile(const LinearEmbedding& emb);

// Puts every connected component of every page onto its own page. Turns any
// union embedding into a book embedding; per-vertex page counts are
// unchanged because a vertex meets at most one component per page.
LinearEmbedding split_page_components(const LinearEmbedding& emb);

// Text format: optional '#' comments; "spine: v0 v1 ... v(n-1)"; then one
// line per page "page k: u-v u-v ..." with k contiguous from 0.
LinearEmbedding parse_embedding(const std::string& text, const Graph& graph);
std::string serialize_embedding(const LinearEmbedding& emb);

}  // namespace bookem
