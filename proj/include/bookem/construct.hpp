#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bookem/bounds.hpp"
#include "bookem/embedding.hpp"
#include "bookem/graph.hpp"

namespace bookem {

// Edge partition into star forests: every component of every part is a star.
struct StarForestPartition {
    std::vector<std::vector<int>> star_forests;  // edge ids
    std::vector<std::vector<int>> centers;       // per forest: one center per star
};

// Splits each forest in two by parent-depth parity (trees rooted at their
// smallest vertex), so at most 2x the forest count, each part a star forest.
StarForestPartition star_forests_from_forests(const ForestPartition& fp, const Graph& g);

// Identity spine, one page per star forest. Stars are crossing-free on any
// spine, so the result always passes the union check with exactly
// |star_forests| pages.
LinearEmbedding union_embedding_from_star_forests(const StarForestPartition& sfp,
                                                  const Graph& g);

// Edge partition into single stars.
struct StarPartition {
    std::vector<std::vector<int>> stars;  // edge ids, all sharing the center
    std::vector<int> centers;
};

// Each edge goes to the star of its endpoint removed later in a greedy
// minimum-degree elimination order. A vertex is a leaf in at most
// (degeneracy) other stars, so the resulting locality is at most
// degeneracy + 1.
StarPartition greedy_star_partition(const Graph& g);

// Identity spine, one page per star; always a book embedding, locality =
// max number of stars meeting a vertex. Throws if a part is not a star.
LinearEmbedding local_embedding_from_stars(const Graph& g, const StarPartition& sp);

// Book embedding of K_n on ceil(n/2) pages: page i is the zigzag Hamiltonian
// path i, i+1, i-1, i+2, i-2, ... on the cyclic order (odd n drops the last
// vertex of K_{n+1}).
LinearEmbedding kn_zigzag(int n);

// One crossing-free page pattern for K_n whose cyclic shifts tile the edge
// set. chords are (start, length) pairs with 1 <= length <= n/2; shift r
// adds r to every start mod n.
struct CyclicTemplate {
    int n = 0;
    int shifts = 0;
    std::vector<std::pair<int, int>> chords;
};

struct TemplateSearchResult {
    enum class Status { found, not_found, timeout } status = Status::not_found;
    std::vector<CyclicTemplate> templates;
    long long nodes = 0;
};

// Backtracking over chord sets: num_templates patterns, each repeated in
// `shifts` cyclic copies, must partition E(K_n), every page crossing-free,
// and the assembled embedding at most `locality`-local. Symmetry: rotation
// is quotiented out by pinning the chord (0,1) into the first template.
TemplateSearchResult template_search(int n, int locality, int num_templates, int shifts,
                                     long long node_budget = 50'000'000);

// Identity-spine embedding whose pages are the shifted template copies.
LinearEmbedding embedding_from_templates(const std::vector<CyclicTemplate>& templates);

// Proper (k+1)-coloring of a k-tree (unique up to color names) and the edge
// partition by endpoint color pairs; every pair class is a tree and every
// vertex lies in exactly k classes.
struct KTreeColoring {
    std::vector<int> colors;
    std::map<std::pair<int, int>, std::vector<int>> pair_trees;  // (i,j), i<j -> edge ids
};

KTreeColoring ktree_color_partition(const KTree& t);

// One amplification round: for every k-clique C, attach 3*k*k*ell fresh
// vertices adjacent to all of C. k = 1 needs no amplification and returns
// the input unchanged. Result is again a k-tree.
KTree amplify_ktree(const KTree& t, int ell, int max_vertices = 0);

// Aggregates the density lower bounds with construction-backed upper bounds.
// pn_lower_hint must be a valid lower bound on the classical page number
// (0 is always safe). Pipelines that need the forest partition are skipped
// above max_pipeline_vertices.
BoundReport make_bound_report(const Graph& g, BoundTarget target, int pn_lower_hint = 0,
                              int max_pipeline_vertices = 2000);

}  // namespace bookem
