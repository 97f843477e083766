#pragma once

#include <optional>

#include "bookem/embedding.hpp"
#include "bookem/graph.hpp"

namespace bookem {

enum class SolveParameter { pn, pn_local, pn_union };

// 0 means unlimited.
struct SolveBudget {
    long long node_limit = 0;
    double time_limit_s = 0.0;
};

struct SolveStats {
    long long nodes = 0;
    long long spines = 0;
    double elapsed_s = 0.0;
};

// exact == true means lower == upper is the true value. Otherwise the search
// ran out of budget and [lower, upper] is the best proven interval; the
// certificate, when present, realizes upper and passes the matching verifier.
struct SolveResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::optional<LinearEmbedding> certificate;
    SolveStats stats;
};

struct SolveRequest {
    Graph graph;
    SolveParameter parameter = SolveParameter::pn;
    std::optional<SpineOrder> spine;  // set: solve for this spine only
    SolveBudget budget;
    int jobs = 1;
};

// Exact value for one fixed spine:
//   pn       — chromatic number of the edge-crossing conflict graph
//              (saturation-guided branch and bound);
//   pn_local — least k with an assignment keeping every vertex on <= k pages
//              (backtracking over edges by descending crossing degree);
//   pn_union — least page count whose pages all pass the per-component
//              crossing check (backtracking with rollback union-find).
SolveResult solve_fixed_spine(const Graph& g, const SpineOrder& spine, SolveParameter parameter,
                              const SolveBudget& budget = {});

// Minimum over all spines, enumerated canonically: vertex 0 pinned to
// position 0 (rotation invariance) and each order identified with its
// reflection — (n-1)!/2 spines. Bounds are seeded from the density lower
// bound and constructive certificates before any enumeration.
SolveResult solve(const SolveRequest& request);

// Independent oracle for graphs on at most 5 vertices: every one of the n!
// spines crossed with every edge partition, no pruning. Only for tests.
struct OracleValues {
    int pn = 0;
    int pn_local = 0;
    int pn_union = 0;
};
OracleValues oracle_all_values(const Graph& g);
int oracle_all(const Graph& g, SolveParameter parameter);

}  // namespace bookem
