#pragma once

#include <string>
#include <vector>

#include "bookem/graph.hpp"
#include "bookem/rational.hpp"

namespace bookem {

struct DensityResult {
    Rational value;
    std::vector<int> witness;  // vertex subset realizing value exactly
};

enum class DensityStrategy { automatic, brute_force, flow };

// Exact maximum of |E(H)| / (w|V(H)| - c) over nonempty vertex subsets H
// with positive denominator. Requires w >= 1 and 0 <= c < 2w, so only
// single-vertex subsets can have a nonpositive denominator. Throws if no
// valid subset exists (single-vertex graph with c >= w).
// automatic = brute force up to 15 vertices, parametric min-cut above.
DensityResult max_subgraph_density(const Graph& g, int w, int c,
                                   DensityStrategy strategy = DensityStrategy::automatic);

// max over nonempty H of 2|E(H)|/|V(H)|.
DensityResult max_average_degree(const Graph& g,
                                 DensityStrategy strategy = DensityStrategy::automatic);

struct DensityReport {
    Rational mad;
    std::vector<int> mad_witness;
    Rational local_density;  // max |E(H)| / (2|V(H)| - 3)
    std::vector<int> local_density_witness;
};

DensityReport density_report(const Graph& g,
                             DensityStrategy strategy = DensityStrategy::automatic);

// ceil of max |E(H)| / (2|V(H)| - 3): every page layout needs this many
// pages at some vertex. 0 for edgeless graphs.
int density_lower_bound(const Graph& g, DensityStrategy strategy = DensityStrategy::automatic);

// Smallest k with |E| <= 2k|V| - 3*max(pn_lower, k), valid whenever
// pn_lower is a correct lower bound on the page number.
int refined_local_lower_bound(const Graph& g, int pn_lower);

struct ForestPartition {
    std::vector<std::vector<int>> forests;  // edge ids, each set acyclic
    int arboricity = 0;                     // = forests.size()
};

// Minimum partition of E into forests (matroid-union augmenting paths).
// The count is cross-checked against ceil(max |E(H)|/(|V(H)|-1)).
ForestPartition arboricity_partition(const Graph& g);

// pn >= pnu >= pnl and pnl >= mad/4, all exact.
bool bounds_chain_holds(const Graph& g, int pnl, int pnu, int pn);

enum class BoundTarget { pn_local, pn_union, pn_classic };

struct BoundProvenance {
    int value = 0;
    std::string rule;
    std::string witness;
};

struct BoundReport {
    BoundTarget target = BoundTarget::pn_local;
    int lower = 0;
    int upper = -1;  // -1 = unknown
    std::vector<BoundProvenance> provenance;
};

}  // namespace bookem
