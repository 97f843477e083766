// Acceptance gate: one self-contained check per shipped claim, each printed
// as a single PASS/FAIL line. Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bookem/bounds.hpp"
#include "bookem/construct.hpp"
#include "bookem/embedding.hpp"
#include "bookem/graph.hpp"
#include "bookem/solver.hpp"

using namespace bookem;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// All checks inside one criterion funnel through REQUIRE_OK so the first
// broken property is named in the output line.
struct CheckFailed {
    std::string what;
};

void require_ok(bool ok, const std::string& what) {
    if (!ok) throw CheckFailed{what};
}

SolveResult solve_exact(const Graph& g, SolveParameter p) {
    SolveRequest rq;
    rq.graph = g;
    rq.parameter = p;
    return solve(rq);
}

bool certificate_ok(const SolveResult& r, const Graph& g, SolveParameter p) {
    if (!r.certificate.has_value()) return false;
    if (!(r.certificate->graph == g)) return false;
    const VerificationReport rep = verify(*r.certificate, 0);
    switch (p) {
        case SolveParameter::pn: return rep.is_book && rep.page_count == r.upper;
        case SolveParameter::pn_local: return rep.is_book && rep.locality == r.upper;
        case SolveParameter::pn_union: return rep.is_union && rep.page_count == r.upper;
    }
    return false;
}

int checked_value(const Graph& g, SolveParameter p, const std::string& label) {
    const SolveResult r = solve_exact(g, p);
    require_ok(r.exact, label + ": solver did not finish");
    require_ok(certificate_ok(r, g, p), label + ": certificate rejected");
    return r.upper;
}

Graph seeded_graph(std::uint64_t seed, int n_min, int n_span, int pct_min, int pct_span) {
    Xorshift64Star rng(seed);
    const int n = n_min + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_span)));
    const int pct =
        pct_min + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(pct_span)));
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (static_cast<int>(rng.next_below(100)) < pct) es.push_back({u, v});
        }
    }
    return Graph::from_edges(n, std::move(es));
}

// Every isomorphism class on exactly n vertices (n <= 6), one canonical
// representative each, via the minimum adjacency bitmask over all vertex
// relabelings.
std::vector<Graph> isomorphism_classes_on(int n) {
    std::vector<std::pair<int, int>> slot;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slot.push_back({u, v});
    }
    const int bits = static_cast<int>(slot.size());
    std::vector<std::vector<int>> idx(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int b = 0; b < bits; ++b) {
        idx[static_cast<size_t>(slot[static_cast<size_t>(b)].first)]
           [static_cast<size_t>(slot[static_cast<size_t>(b)].second)] = b;
        idx[static_cast<size_t>(slot[static_cast<size_t>(b)].second)]
           [static_cast<size_t>(slot[static_cast<size_t>(b)].first)] = b;
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<unsigned> canon;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
        unsigned best = ~0u;
        for (const auto& p : perms) {
            unsigned img = 0;
            for (int b = 0; b < bits; ++b) {
                if (mask >> b & 1) {
                    img |= 1u << idx[static_cast<size_t>(p[static_cast<size_t>(
                                         slot[static_cast<size_t>(b)].first)])]
                                    [static_cast<size_t>(p[static_cast<size_t>(
                                         slot[static_cast<size_t>(b)].second)])];
                }
            }
            best = std::min(best, img);
        }
        canon.insert(best);
    }

    std::vector<Graph> out;
    out.reserve(canon.size());
    for (unsigned mask : canon) {
        std::vector<Edge> es;
        for (int b = 0; b < bits; ++b) {
            if (mask >> b & 1) {
                es.push_back({slot[static_cast<size_t>(b)].first,
                              slot[static_cast<size_t>(b)].second});
            }
        }
        out.push_back(Graph::from_edges(n, std::move(es)));
    }
    return out;
}

LinearEmbedding union_pipeline(const Graph& g) {
    return union_embedding_from_star_forests(
        star_forests_from_forests(arboricity_partition(g), g), g);
}

int nash_williams_ceiling(const Graph& g) {
    if (g.m() == 0) return 0;
    const Rational d = max_subgraph_density(g, 1, 1).value;
    return static_cast<int>((d.num + d.den - 1) / d.den);
}

// ------------------------------------------------------------ criteria 1-10

bool criterion_1(std::ostringstream& detail) {
    const Graph k5 = gen_complete(5);
    const Graph k33 = gen_complete_bipartite(3, 3);
    const int pn5 = checked_value(k5, SolveParameter::pn, "pn(K5)");
    const int pl5 = checked_value(k5, SolveParameter::pn_local, "pnl(K5)");
    const int pu5 = checked_value(k5, SolveParameter::pn_union, "pnu(K5)");
    const int pn33 = checked_value(k33, SolveParameter::pn, "pn(K33)");
    const int pl33 = checked_value(k33, SolveParameter::pn_local, "pnl(K33)");
    const int pu33 = checked_value(k33, SolveParameter::pn_union, "pnu(K33)");
    require_ok(pn5 == 3 && pl5 == 2 && pu5 == 3, "K5 values off");
    require_ok(pn33 == 3 && pl33 == 2 && pu33 == 2, "K33 values off");
    detail << "pn/pnl/pnu: K5 = 3/2/3, K33 = 3/2/2, all exact with verified certificates";
    return true;
}

bool criterion_2(std::ostringstream& detail) {
    const Graph k7 = gen_complete(7);
    require_ok(refined_local_lower_bound(k7, 4) == 3, "refined bound with hint 4 is not 3");

    const TemplateSearchResult ts = template_search(7, 3, 1, 7);
    require_ok(ts.status == TemplateSearchResult::Status::found, "no 3-local K7 template");
    const LinearEmbedding emb = embedding_from_templates(ts.templates);
    const VerificationReport rep = verify(emb, 0);
    require_ok(emb.graph == k7 && rep.is_book && rep.locality <= 3,
               "K7 template certificate rejected");

    const SolveResult r = solve_exact(k7, SolveParameter::pn_local);
    require_ok(r.exact && r.lower == 3 && r.upper == 3, "exact pnl(K7) is not 3");
    require_ok(r.stats.spines == 360, "canonical spine enumeration incomplete");
    require_ok(certificate_ok(r, k7, SolveParameter::pn_local), "pnl(K7) certificate rejected");
    detail << "lower bound 3 from the refined density rule (hint 4); verified 3-local "
              "template certificate; all 360 canonical spines searched, none 2-local";
    return true;
}

bool criterion_3(std::ostringstream& detail) {
    const auto zigzag_start = Clock::now();
    for (int n = 2; n <= 30; ++n) {
        const LinearEmbedding emb = kn_zigzag(n);
        const VerificationReport rep = verify(emb, 0);
        require_ok(emb.graph == gen_complete(n), "zigzag host mismatch");
        require_ok(rep.is_book, "zigzag page crosses at n=" + std::to_string(n));
        require_ok(rep.page_count == (n + 1) / 2, "zigzag page count at n=" + std::to_string(n));
    }
    const double zigzag_elapsed = seconds_since(zigzag_start);
    require_ok(zigzag_elapsed < 5.0, "zigzag certificates exceeded 5s");

    for (int n : {2, 4, 5, 6, 7}) {
        require_ok(checked_value(gen_complete(n), SolveParameter::pn, "pn(K_n)") == (n + 1) / 2,
                   "solver disagrees with ceil(n/2) at n=" + std::to_string(n));
    }
    require_ok(checked_value(gen_complete(3), SolveParameter::pn, "pn(K3)") == 1,
               "pn(K3) is not 1");
    detail << "zigzag gives verified ceil(n/2)-page embeddings for n = 2..30; solver "
              "confirms optimality for n in {2,4,5,6,7}; degenerate case pn(K3) = 1 < 2 "
              "(the cited closed form starts at n = 4)";
    return true;
}

bool criterion_4(std::ostringstream& detail) {
    const TemplateSearchResult t6 = template_search(6, 2, 1, 3);
    require_ok(t6.status == TemplateSearchResult::Status::found, "no K6 template");
    const LinearEmbedding e6 = embedding_from_templates(t6.templates);
    const VerificationReport r6 = verify(e6, 0);
    require_ok(e6.graph == gen_complete(6) && r6.is_book && r6.locality <= 2 &&
                   r6.page_count == 3,
               "K6 template certificate rejected");

    const TemplateSearchResult t11 = template_search(11, 4, 1, 11);
    require_ok(t11.status == TemplateSearchResult::Status::found, "no K11 template");
    const LinearEmbedding e11 = embedding_from_templates(t11.templates);
    const VerificationReport r11 = verify(e11, 0);
    require_ok(e11.graph == gen_complete(11) && r11.is_book && r11.locality <= 4 &&
                   r11.page_count == 11,
               "K11 template certificate rejected");
    detail << "K6: one template, 3 shifts, verified 2-local; K11: one template, 11 "
              "shifts, verified 4-local";
    return true;
}

bool criterion_5(std::ostringstream& detail) {
    const std::map<int, size_t> expected_counts = {{2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}};
    size_t total = 0;
    for (const auto& [n, expected] : expected_counts) {
        const std::vector<Graph> classes = isomorphism_classes_on(n);
        require_ok(classes.size() == expected,
                   "class count on " + std::to_string(n) + " vertices is off");
        total += classes.size();
        for (const Graph& g : classes) {
            const int pnl = checked_value(g, SolveParameter::pn_local, "pnl");
            const int pnu = checked_value(g, SolveParameter::pn_union, "pnu");
            const int pn = checked_value(g, SolveParameter::pn, "pn");
            require_ok(density_lower_bound(g) <= pnl, "density bound exceeds pnl");
            const Rational mad = g.m() > 0 ? max_average_degree(g).value : Rational(0);
            require_ok(mad <= Rational(4 * pnl), "mad/4 exceeds pnl");
            require_ok(pnl <= pnu && pnu <= pn, "parameter chain violated");
            require_ok(bounds_chain_holds(g, pnl, pnu, pn), "exact rational chain check failed");
        }
    }
    detail << "all " << total << " isomorphism classes on 2..6 vertices: ceil(density) <= "
              "pnl, 4*pnl >= mad, and pnl <= pnu <= pn, every value exact";
    return true;
}

bool criterion_6(std::ostringstream& detail) {
    std::vector<Graph> corpus;
    for (int i = 0; i < 100; ++i) corpus.push_back(seeded_graph(1000 + i, 5, 36, 5, 20));
    for (int level = 1; level <= 5; ++level) corpus.push_back(gen_stacked_triangulation(level));

    for (const Graph& g : corpus) {
        const ForestPartition fp = arboricity_partition(g);
        std::vector<int> owner(static_cast<size_t>(g.m()), -1);
        for (size_t f = 0; f < fp.forests.size(); ++f) {
            std::vector<int> parent(static_cast<size_t>(g.n()));
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[static_cast<size_t>(x)] != x) {
                    parent[static_cast<size_t>(x)] =
                        parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
                    x = parent[static_cast<size_t>(x)];
                }
                return x;
            };
            for (int e : fp.forests[f]) {
                require_ok(owner[static_cast<size_t>(e)] == -1, "edge in two forests");
                owner[static_cast<size_t>(e)] = static_cast<int>(f);
                const int ru = find(g.edge(e).u), rv = find(g.edge(e).v);
                require_ok(ru != rv, "cycle inside a forest");
                parent[static_cast<size_t>(ru)] = rv;
            }
        }
        for (int own : owner) require_ok(own >= 0, "edge not covered by any forest");
        require_ok(fp.arboricity == nash_williams_ceiling(g),
                   "forest count differs from the Nash-Williams ceiling");

        const LinearEmbedding emb = union_pipeline(g);
        const VerificationReport rep = verify(emb, 0);
        require_ok(rep.is_union, "pipeline output fails the union check");
        require_ok(rep.page_count <= 2 * fp.arboricity, "more than 2a pages");
        const Rational mad = g.m() > 0 ? max_average_degree(g).value : Rational(0);
        require_ok(Rational(rep.page_count) <= mad + Rational(2), "more than mad+2 pages");
    }
    detail << "100 seeded sparse graphs (n <= 40) plus the stacked triangulations "
              "T_1..T_5: optimal forest counts, verified union embeddings, page count "
              "<= min(2a, mad+2) throughout";
    return true;
}

bool criterion_7(std::ostringstream& detail) {
    for (int k = 1; k <= 4; ++k) {
        for (int n : {k + 1, k + 4, 12, 21, 30}) {
            if (n < k + 1) continue;
            const KTree kt = gen_k_tree(k, n, static_cast<std::uint64_t>(97 * k + n));
            require_ok(kt.graph.m() == k * n - k * (k + 1) / 2, "k-tree edge count");

            const KTreeColoring kc = ktree_color_partition(kt);
            require_ok(static_cast<int>(kc.pair_trees.size()) <= k * (k + 1) / 2,
                       "more than C(k+1,2) classes");
            std::vector<int> classes_at(static_cast<size_t>(n), 0);
            int covered = 0;
            for (const auto& [pair, edge_ids] : kc.pair_trees) {
                covered += static_cast<int>(edge_ids.size());
                std::vector<int> parent(static_cast<size_t>(n), -1);
                auto find = [&](int x) {
                    while (parent[static_cast<size_t>(x)] >= 0 &&
                           parent[static_cast<size_t>(x)] != x) {
                        x = parent[static_cast<size_t>(x)];
                    }
                    return x;
                };
                std::set<int> support;
                int merges = 0;
                for (int e : edge_ids) {
                    const Edge ed = kt.graph.edge(e);
                    support.insert(ed.u);
                    support.insert(ed.v);
                    if (parent[static_cast<size_t>(ed.u)] < 0) parent[static_cast<size_t>(ed.u)] = ed.u;
                    if (parent[static_cast<size_t>(ed.v)] < 0) parent[static_cast<size_t>(ed.v)] = ed.v;
                    const int ru = find(ed.u), rv = find(ed.v);
                    require_ok(ru != rv, "cycle inside a pair class");
                    parent[static_cast<size_t>(ru)] = rv;
                    ++merges;
                }
                require_ok(merges == static_cast<int>(support.size()) - 1,
                           "pair class is not connected");
                for (int v : support) ++classes_at[static_cast<size_t>(v)];
            }
            require_ok(covered == kt.graph.m(), "pair classes do not partition the edges");
            for (int v = 0; v < n; ++v) {
                require_ok(classes_at[static_cast<size_t>(v)] == k,
                           "vertex not in exactly k classes");
            }
        }
    }

    // Three triangles over one shared edge: a 2-tree that is not outerplanar,
    // so its exact local page number must reach 2.
    KTree book2;
    book2.k = 2;
    book2.graph = Graph::from_edges(
        5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
    book2.attached_clique = {{}, {}, {}, {0, 1}, {0, 1}};
    (void)ktree_color_partition(book2);  // sanity: accepted as a 2-tree
    const SolveResult r = solve_exact(book2.graph, SolveParameter::pn_local);
    require_ok(r.exact && r.upper >= 2, "2-tree with pnl < 2");
    require_ok(certificate_ok(r, book2.graph, SolveParameter::pn_local),
               "2-tree certificate rejected");
    const OracleValues ov = oracle_all_values(book2.graph);
    require_ok(ov.pn_local == r.upper, "oracle disagrees on the 2-tree");
    detail << "k in {1,2,3,4}, n up to 30: edge counts, <= C(k+1,2) acyclic connected "
              "pair classes, every vertex in exactly k; exact pnl = " << r.upper
           << " >= 2 for a non-outerplanar 2-tree (k >= 3 lower-bound families are "
              "beyond exact search and are not attempted)";
    return true;
}

bool criterion_8(std::ostringstream& detail) {
    const std::vector<Graph> classes = isomorphism_classes_on(5);
    require_ok(classes.size() == 34, "five-vertex class count is not 34");
    for (const Graph& g : classes) {
        const OracleValues ov = oracle_all_values(g);
        require_ok(checked_value(g, SolveParameter::pn, "pn") == ov.pn, "pn mismatch");
        require_ok(checked_value(g, SolveParameter::pn_local, "pnl") == ov.pn_local,
                   "pnl mismatch");
        require_ok(checked_value(g, SolveParameter::pn_union, "pnu") == ov.pn_union,
                   "pnu mismatch");
    }
    detail << "solver equals the brute-force oracle on pn, pnl, pnu for all 34 "
              "isomorphism classes on 5 vertices";
    return true;
}

bool criterion_9(std::ostringstream& detail) {
    for (int i = 0; i < 200; ++i) {
        const Graph g = seeded_graph(5000 + i, 4, 30, 10, 50);
        const LinearEmbedding emb = union_pipeline(g);
        const VerificationReport before = verify(emb, 0);
        require_ok(before.is_union, "pipeline output fails the union check");

        const LinearEmbedding split = split_page_components(emb);
        const VerificationReport after = verify(split, 0);
        require_ok(split.graph == g, "split changed the graph");
        require_ok(after.is_book, "split embedding is not a book embedding");
        require_ok(locality_profile(split) == locality_profile(emb),
                   "split changed a vertex's page count");
    }
    detail << "200 seeded union embeddings: exploding page components onto fresh pages "
              "always yields a verified book embedding with unchanged per-vertex "
              "localities";
    return true;
}

bool criterion_10(std::ostringstream& detail) {
    const Graph t2 = gen_stacked_triangulation(2);
    for (int u = 0; u < 4; ++u) {
        for (int v = u + 1; v < 4; ++v) {
            require_ok(t2.has_edge(u, v), "T_2 lacks the expected K_4 on 0..3");
        }
    }
    require_ok(density_lower_bound(t2) == 2, "density lower bound for T_2 is not 2");

    const SpineOrder witness = SpineOrder::from_order({7, 3, 6, 2, 9, 5, 10, 1, 8, 4, 0});
    const SolveResult r = solve_fixed_spine(t2, witness, SolveParameter::pn_local);
    require_ok(r.exact && r.upper == 2, "frozen spine does not give a 2-local embedding");
    require_ok(certificate_ok(r, t2, SolveParameter::pn_local), "T_2 certificate rejected");

    const Graph t9 = gen_stacked_triangulation(9);
    require_ok(t9.n() == 19685, "unexpected T_9 size");
    const LinearEmbedding emb = local_embedding_from_stars(t9, greedy_star_partition(t9));
    const VerificationReport rep = verify(emb, 0);
    require_ok(emb.graph == t9 && rep.is_book && rep.locality <= 4,
               "T_9 star pipeline exceeded 4-local");
    detail << "pnl(T_2) = 2: certified 2-local embedding on a fixed spine, lower bound 2 "
              "from the K_4 density; T_9 (19685 vertices): certified " << rep.locality
           << "-local star embedding (the tight value 3 is beyond exact search and is "
              "not claimed)";
    return true;
}

struct Criterion {
    int id;
    double budget_s;  // 0 = no stated budget
    bool (*fn)(std::ostringstream&);
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, 60.0, criterion_1},   {2, 600.0, criterion_2}, {3, 0.0, criterion_3},
        {4, 600.0, criterion_4},  {5, 1800.0, criterion_5}, {6, 0.0, criterion_6},
        {7, 0.0, criterion_7},    {8, 600.0, criterion_8}, {9, 0.0, criterion_9},
        {10, 0.0, criterion_10},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = Clock::now();
        bool ok = false;
        std::string detail;
        try {
            std::ostringstream d;
            ok = c.fn(d);
            detail = d.str();
        } catch (const CheckFailed& f) {
            detail = f.what;
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed = seconds_since(start);
        if (ok && c.budget_s > 0.0 && elapsed > c.budget_s) {
            ok = false;
            detail = "over time budget";
        }
        std::printf("criterion %2d: %s (%.2fs) %s\n", c.id, ok ? "PASS" : "FAIL", elapsed,
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    if (failures == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
    }
    return failures;
}
