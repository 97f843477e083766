#include "bookem/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <cstring>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "bookem/bounds.hpp"
#include "bookem/construct.hpp"

namespace bookem {
namespace {

using Clock = std::chrono::steady_clock;

struct BudgetStop {};

// Shared between workers; local tick counts are flushed in batches.
struct BudgetState {
    std::atomic<long long> nodes{0};
    std::atomic<bool> stop{false};
    long long node_limit = 0;
    double time_limit_s = 0.0;
    Clock::time_point start = Clock::now();

    explicit BudgetState(const SolveBudget& b)
        : node_limit(b.node_limit), time_limit_s(b.time_limit_s) {}

    double elapsed_s() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

struct Ticker {
    BudgetState* bs;
    long long local = 0;  // ticks not yet flushed into the shared counter

    explicit Ticker(BudgetState* b) : bs(b) {}
    ~Ticker() { bs->nodes.fetch_add(local, std::memory_order_relaxed); }
    void tick() {
        ++local;
        if (bs->node_limit > 0 &&
            bs->nodes.load(std::memory_order_relaxed) + local > bs->node_limit)
            bs->stop.store(true, std::memory_order_relaxed);
        if (local == 1024) {
            bs->nodes.fetch_add(1024, std::memory_order_relaxed);
            local = 0;
            if (bs->time_limit_s > 0 && bs->elapsed_s() > bs->time_limit_s)
                bs->stop.store(true, std::memory_order_relaxed);
        }
        if (bs->stop.load(std::memory_order_relaxed)) throw BudgetStop{};
    }
};

inline bool test_bit(const std::uint64_t* w, int i) { return (w[i >> 6] >> (i & 63)) & 1u; }
inline void set_bit(std::uint64_t* w, int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }

// Per-spine search context: crossing matrix, fail-first edge order
// (descending crossing degree, ties by edge index), incidence lists.
struct FixedContext {
    const Graph& g;
    CrossingMatrix cm;
    int m, words;
    std::vector<int> order;
    std::vector<std::vector<int>> incident;

    FixedContext(const Graph& gr, const SpineOrder& spine)
        : g(gr), cm(gr, spine), m(gr.m()), words(cm.words()) {
        order.resize(m);
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> cd(m);
        for (int e = 0; e < m; ++e) cd[e] = cm.crossing_degree(e);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return cd[a] != cd[b] ? cd[a] > cd[b] : a < b; });
        incident.resize(gr.n());
        for (int e = 0; e < m; ++e) {
            incident[gr.edge(e).u].push_back(e);
            incident[gr.edge(e).v].push_back(e);
        }
    }
};

// Exact chromatic number of the crossing conflict graph, saturation-first
// branch and bound. Finds the best proper coloring with fewer than `cutoff`
// colors; returns cutoff when none exists. `floor` lets the caller stop as
// soon as a known lower bound is matched.
struct ChromaticSolver {
    const FixedContext& ctx;
    Ticker& tk;
    int best;
    int floor;
    std::vector<int> color, best_color;
    std::vector<std::vector<std::uint64_t>> color_mask;  // per color: edges wearing it

    ChromaticSolver(const FixedContext& c, Ticker& t, int cutoff, int fl)
        : ctx(c), tk(t), best(cutoff), floor(fl), color(c.m, -1) {}

    int saturation(int e) const {
        int s = 0;
        for (const auto& mask : color_mask) {
            const std::uint64_t* row = ctx.cm.row(e);
            for (int w = 0; w < ctx.words; ++w)
                if (mask[w] & row[w]) {
                    ++s;
                    break;
                }
        }
        return s;
    }

    void rec(int colored, int used) {
        tk.tick();
        if (used >= best || best <= floor) return;
        if (colored == ctx.m) {
            best = used;
            best_color = color;
            return;
        }
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int e = 0; e < ctx.m; ++e) {
            if (color[e] != -1) continue;
            int s = saturation(e), d = ctx.cm.crossing_degree(e);
            if (s > pick_sat || (s == pick_sat && d > pick_deg)) {
                pick = e;
                pick_sat = s;
                pick_deg = d;
            }
        }
        const std::uint64_t* row = ctx.cm.row(pick);
        for (int c = 0; c < used; ++c) {
            bool clash = false;
            for (int w = 0; w < ctx.words && !clash; ++w) clash = color_mask[c][w] & row[w];
            if (clash) continue;
            color[pick] = c;
            set_bit(color_mask[c].data(), pick);
            rec(colored + 1, used);
            color_mask[c][pick >> 6] &= ~(std::uint64_t(1) << (pick & 63));
            color[pick] = -1;
            if (best <= floor) return;
        }
        if (used + 1 < best) {
            if (static_cast<int>(color_mask.size()) == used)
                color_mask.emplace_back(ctx.words, 0);
            color[pick] = used;
            set_bit(color_mask[used].data(), pick);
            rec(colored + 1, used + 1);
            color_mask[used][pick >> 6] &= ~(std::uint64_t(1) << (pick & 63));
            color[pick] = -1;
        }
    }

    // result < cutoff iff an improvement was found (best_color then holds it)
    int run() {
        if (ctx.m == 0) return 0;
        rec(0, 0);
        return best;
    }
};

// Decision search: can every vertex stay on at most k pages? Pages are
// created in canonical (first-use) order; a page's mask of crossing edges
// gates membership in O(words).
struct LocalSolver {
    const FixedContext& ctx;
    Ticker& tk;
    int k;
    std::vector<int> assign;
    std::vector<std::vector<std::uint64_t>> page_cross;
    std::vector<std::vector<int>> vpages;

    LocalSolver(const FixedContext& c, Ticker& t, int kk)
        : ctx(c), tk(t), k(kk), assign(c.m, -1), vpages(c.g.n()) {}

    bool vertex_has(int v, int p) const {
        return std::find(vpages[v].begin(), vpages[v].end(), p) != vpages[v].end();
    }

    // once v sits on k pages, each of its unassigned edges must still fit one
    bool saturated_ok(int v) const {
        if (static_cast<int>(vpages[v].size()) < k) return true;
        for (int e : ctx.incident[v]) {
            if (assign[e] != -1) continue;
            bool fits = false;
            for (int p : vpages[v])
                if (!test_bit(page_cross[p].data(), e)) {
                    fits = true;
                    break;
                }
            if (!fits) return false;
        }
        return true;
    }

    bool rec(size_t idx) {
        tk.tick();
        if (idx == ctx.order.size()) return true;
        int e = ctx.order[idx];
        int u = ctx.g.edge(e).u, v = ctx.g.edge(e).v;
        const std::uint64_t* row = ctx.cm.row(e);
        int np = static_cast<int>(page_cross.size());
        for (int p = 0; p < np; ++p) {
            if (test_bit(page_cross[p].data(), e)) continue;
            bool nu = !vertex_has(u, p), nv = !vertex_has(v, p);
            if (nu && static_cast<int>(vpages[u].size()) >= k) continue;
            if (nv && static_cast<int>(vpages[v].size()) >= k) continue;
            assign[e] = p;
            std::vector<std::uint64_t> saved(page_cross[p]);
            for (int w = 0; w < ctx.words; ++w) page_cross[p][w] |= row[w];
            if (nu) vpages[u].push_back(p);
            if (nv) vpages[v].push_back(p);
            if (saturated_ok(u) && saturated_ok(v) && rec(idx + 1)) return true;
            if (nu) vpages[u].pop_back();
            if (nv) vpages[v].pop_back();
            page_cross[p] = std::move(saved);
            assign[e] = -1;
        }
        if (static_cast<int>(vpages[u].size()) < k && static_cast<int>(vpages[v].size()) < k) {
            assign[e] = np;
            page_cross.emplace_back(row, row + ctx.words);
            vpages[u].push_back(np);
            vpages[v].push_back(np);
            if (saturated_ok(u) && saturated_ok(v) && rec(idx + 1)) return true;
            vpages[u].pop_back();
            vpages[v].pop_back();
            page_cross.pop_back();
            assign[e] = -1;
        }
        return false;
    }

    bool run() { return rec(0); }
};

// Decision search: do <= k pages suffice when each page only needs its
// connected components crossing-free? State per page is a union-find with a
// rollback journal plus, per component root, the sets of member edges and of
// edges crossing a member.
struct UnionSolver {
    const FixedContext& ctx;
    Ticker& tk;
    int k, n, W;
    std::vector<int> assign;
    int used = 0;
    std::vector<int> parent, compsz;
    std::vector<std::uint64_t> cedges, ccross;
    struct UndoRec {
        int page, ra, rb;  // rb == -1: no parent change
        std::vector<std::uint64_t> old_e, old_c;
    };
    std::vector<UndoRec> journal;

    UnionSolver(const FixedContext& c, Ticker& t, int kk)
        : ctx(c), tk(t), k(kk), n(c.g.n()), W(c.words), assign(c.m, -1),
          parent(static_cast<size_t>(k) * n), compsz(static_cast<size_t>(k) * n, 1),
          cedges(static_cast<size_t>(k) * n * W, 0), ccross(static_cast<size_t>(k) * n * W, 0) {
        for (int p = 0; p < k; ++p)
            for (int v = 0; v < n; ++v) parent[static_cast<size_t>(p) * n + v] = v;
    }

    int find(int p, int x) const {
        const int* par = parent.data() + static_cast<size_t>(p) * n;
        while (par[x] != x) x = par[x];
        return x;
    }
    std::uint64_t* edges_of(int p, int r) {
        return cedges.data() + (static_cast<size_t>(p) * n + r) * W;
    }
    std::uint64_t* cross_of(int p, int r) {
        return ccross.data() + (static_cast<size_t>(p) * n + r) * W;
    }

    bool try_put(int e, int p) {
        int u = ctx.g.edge(e).u, v = ctx.g.edge(e).v;
        int ru = find(p, u), rv = find(p, v);
        const std::uint64_t* row = ctx.cm.row(e);
        // crossing sets and member sets of the merged component must stay
        // disjoint once e joins
        std::uint64_t conflict = 0;
        for (int w = 0; w < W; ++w) {
            std::uint64_t members = edges_of(p, ru)[w];
            std::uint64_t crossers = cross_of(p, ru)[w] | row[w];
            if (rv != ru) {
                members |= edges_of(p, rv)[w];
                crossers |= cross_of(p, rv)[w];
            }
            if (w == (e >> 6)) members |= std::uint64_t(1) << (e & 63);
            conflict |= members & crossers;
        }
        if (conflict) return false;
        UndoRec rec;
        rec.page = p;
        int ra = ru, rb = rv;
        if (ru == rv) {
            rb = -1;
        } else if (compsz[static_cast<size_t>(p) * n + ra] <
                   compsz[static_cast<size_t>(p) * n + rb]) {
            std::swap(ra, rb);
        }
        rec.ra = ra;
        rec.rb = rb;
        rec.old_e.assign(edges_of(p, ra), edges_of(p, ra) + W);
        rec.old_c.assign(cross_of(p, ra), cross_of(p, ra) + W);
        if (rb != -1) {
            parent[static_cast<size_t>(p) * n + rb] = ra;
            compsz[static_cast<size_t>(p) * n + ra] += compsz[static_cast<size_t>(p) * n + rb];
            for (int w = 0; w < W; ++w) {
                edges_of(p, ra)[w] |= edges_of(p, rb)[w];
                cross_of(p, ra)[w] |= cross_of(p, rb)[w];
            }
        }
        set_bit(edges_of(p, ra), e);
        const std::uint64_t* r2 = ctx.cm.row(e);
        for (int w = 0; w < W; ++w) cross_of(p, ra)[w] |= r2[w];
        journal.push_back(std::move(rec));
        return true;
    }

    void undo() {
        UndoRec rec = std::move(journal.back());
        journal.pop_back();
        int p = rec.page, ra = rec.ra, rb = rec.rb;
        if (rb != -1) {
            parent[static_cast<size_t>(p) * n + rb] = rb;
            compsz[static_cast<size_t>(p) * n + ra] -= compsz[static_cast<size_t>(p) * n + rb];
        }
        std::copy(rec.old_e.begin(), rec.old_e.end(), edges_of(p, ra));
        std::copy(rec.old_c.begin(), rec.old_c.end(), cross_of(p, ra));
    }

    bool rec_search(size_t idx) {
        tk.tick();
        if (idx == ctx.order.size()) return true;
        int e = ctx.order[idx];
        int limit = std::min(used + 1, k);
        for (int p = 0; p < limit; ++p) {
            if (!try_put(e, p)) continue;
            assign[e] = p;
            bool opened = p == used;
            if (opened) ++used;
            if (rec_search(idx + 1)) return true;
            if (opened) --used;
            assign[e] = -1;
            undo();
        }
        return false;
    }

    bool run() { return rec_search(0); }
};

LinearEmbedding embedding_from_assignment(const Graph& g, const SpineOrder& spine,
                                          const std::vector<int>& assign) {
    return LinearEmbedding::make(g, spine, PagePartition::normalized(assign));
}

int metric_of(const LinearEmbedding& emb, SolveParameter p) {
    if (p == SolveParameter::pn_local) {
        std::vector<int> prof = locality_profile(emb);
        return prof.empty() ? 0 : *std::max_element(prof.begin(), prof.end());
    }
    return emb.pages.page_count;
}

// Per-spine exact search below `cutoff`. Returns the improved value with its
// assignment, or cutoff if nothing below it exists for this spine. `floor`
// is a known global lower bound; decision loops start there. On budget
// exhaustion throws BudgetStop with *proven_floor updated: every k below it
// was refuted for this spine.
int fixed_spine_value(const FixedContext& ctx, SolveParameter param, int floor, int cutoff,
                      Ticker& tk, std::vector<int>& out_assign, int* proven_floor = nullptr) {
    if (ctx.m == 0) {
        out_assign.clear();
        return 0;
    }
    if (param == SolveParameter::pn) {
        ChromaticSolver cs(ctx, tk, cutoff, floor);
        int v = cs.run();
        if (v < cutoff) out_assign = cs.best_color;
        return v;
    }
    for (int k = std::max(floor, 1); k < cutoff; ++k) {
        if (proven_floor) *proven_floor = k;
        bool sat;
        if (param == SolveParameter::pn_local) {
            LocalSolver ls(ctx, tk, k);
            sat = ls.run();
            if (sat) out_assign = ls.assign;
        } else {
            UnionSolver us(ctx, tk, k);
            sat = us.run();
            if (sat) out_assign = us.assign;
        }
        if (sat) return k;
    }
    if (proven_floor) *proven_floor = cutoff;
    return cutoff;
}

// Trivial per-spine fallback: one page per edge. Valid for every parameter;
// the pn_local value of it is the maximum degree.
std::vector<int> singleton_assignment(const Graph& g) {
    std::vector<int> a(g.m());
    std::iota(a.begin(), a.end(), 0);
    return a;
}

SolveResult empty_graph_result(const Graph& g) {
    SolveResult res;
    res.lower = res.upper = 0;
    res.exact = true;
    res.certificate =
        LinearEmbedding::make(g, SpineOrder::identity(g.n()), PagePartition::from_assignment({}));
    return res;
}

// Candidate upper-bound certificates from the constructions; every candidate
// is valid for the parameter it is offered under.
std::vector<LinearEmbedding> seed_candidates(const Graph& g, SolveParameter param) {
    std::vector<LinearEmbedding> out;
    // restriction of the zigzag host embedding: a book embedding, so valid
    // for all three parameters
    Graph host = gen_complete(g.n());
    LinearEmbedding zz = kn_zigzag(g.n());
    std::vector<int> raw(g.m());
    for (int e = 0; e < g.m(); ++e)
        raw[e] = zz.pages.page_of_edge[host.edge_index(g.edge(e).u, g.edge(e).v)];
    out.push_back(LinearEmbedding::make(g, SpineOrder::identity(g.n()),
                                        PagePartition::normalized(raw)));
    if (param == SolveParameter::pn_local)
        out.push_back(local_embedding_from_stars(g, greedy_star_partition(g)));
    if (param == SolveParameter::pn_union)
        out.push_back(
            union_embedding_from_star_forests(star_forests_from_forests(arboricity_partition(g), g), g));
    return out;
}

}  // namespace

SolveResult solve_fixed_spine(const Graph& g, const SpineOrder& spine, SolveParameter param,
                              const SolveBudget& budget) {
    if (spine.n() != g.n()) throw std::invalid_argument("spine size does not match graph");
    if (g.m() == 0) {
        SolveResult res = empty_graph_result(g);
        res.certificate = LinearEmbedding::make(g, spine, PagePartition::from_assignment({}));
        return res;
    }
    BudgetState bs(budget);
    SolveResult res;
    res.lower = density_lower_bound(g);
    res.stats.spines = 1;

    FixedContext ctx(g, spine);
    // fallback certificate on this spine: one page per edge
    LinearEmbedding fallback = embedding_from_assignment(g, spine, singleton_assignment(g));
    res.upper = metric_of(fallback, param);
    res.certificate = fallback;

    int proven = res.lower;
    {
        Ticker tk(&bs);
        try {
            std::vector<int> assign;
            int v = fixed_spine_value(ctx, param, res.lower, res.upper, tk, assign, &proven);
            if (v < res.upper) {
                res.upper = v;
                res.certificate = embedding_from_assignment(g, spine, assign);
            }
            res.lower = res.upper;  // the decision ladder refuted everything below
            res.exact = true;
        } catch (const BudgetStop&) {
            res.lower = std::max(res.lower, proven);
            res.exact = false;
        }
    }
    res.stats.nodes = bs.nodes.load();
    res.stats.elapsed_s = bs.elapsed_s();
    return res;
}

SolveResult solve(const SolveRequest& request) {
    const Graph& g = request.graph;
    SolveParameter param = request.parameter;
    if (request.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    if (request.spine) return solve_fixed_spine(g, *request.spine, param, request.budget);
    if (g.m() == 0) return empty_graph_result(g);

    BudgetState bs(request.budget);
    SolveResult res;
    res.lower = density_lower_bound(g);
    for (const LinearEmbedding& cand : seed_candidates(g, param)) {
        int v = metric_of(cand, param);
        if (!res.certificate || v < res.upper) {
            res.upper = v;
            res.certificate = cand;
        }
    }
    if (res.upper == res.lower) {
        res.exact = true;
        res.stats.elapsed_s = bs.elapsed_s();
        return res;
    }

    // canonical spines: vertex 0 pinned first, reflections identified
    const int n = g.n();
    std::vector<int> perm(std::max(0, n - 1));
    std::iota(perm.begin(), perm.end(), 1);
    std::mutex gen_mu, best_mu;
    bool gen_done = false;
    bool first_perm = true;
    auto next_spine = [&](std::vector<int>& out) {
        std::lock_guard<std::mutex> lock(gen_mu);
        while (!gen_done) {
            if (first_perm) {
                first_perm = false;
            } else if (!std::next_permutation(perm.begin(), perm.end())) {
                gen_done = true;
                break;
            }
            std::vector<int> rev(perm.rbegin(), perm.rend());
            if (perm <= rev) {
                out = perm;
                return true;
            }
        }
        return false;
    };

    std::atomic<int> shared_ub{res.upper};
    const int global_floor = res.lower;
    std::atomic<long long> spines_done{0};
    std::atomic<bool> exhausted{false};
    std::pair<int, long long> best_tag{res.upper, LLONG_MAX};  // (value, arrival order)
    std::optional<LinearEmbedding> best_cert;

    auto worker = [&]() {
        Ticker tk(&bs);
        std::vector<int> tail;
        long long order_counter = 0;
        try {
            while (next_spine(tail)) {
                if (shared_ub.load(std::memory_order_relaxed) <= global_floor) break;
                std::vector<int> full(1, 0);
                full.insert(full.end(), tail.begin(), tail.end());
                SpineOrder spine = SpineOrder::from_order(full);
                FixedContext ctx(g, spine);
                std::vector<int> assign;
                int cutoff = shared_ub.load(std::memory_order_relaxed);
                int v = fixed_spine_value(ctx, param, global_floor, cutoff, tk, assign);
                spines_done.fetch_add(1, std::memory_order_relaxed);
                ++order_counter;
                if (v < cutoff) {
                    std::lock_guard<std::mutex> lock(best_mu);
                    int cur = shared_ub.load(std::memory_order_relaxed);
                    if (v < cur) shared_ub.store(v, std::memory_order_relaxed);
                    if (v < best_tag.first) {
                        best_tag = {v, order_counter};
                        best_cert = embedding_from_assignment(g, spine, assign);
                    }
                }
            }
        } catch (const BudgetStop&) {
            exhausted.store(true);
        }
    };

    if (request.jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < request.jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    res.upper = shared_ub.load();
    if (best_cert) res.certificate = std::move(best_cert);
    if (!exhausted.load()) {
        res.lower = res.upper;  // enumeration complete: nothing below survived
        res.exact = true;
    }
    res.stats.nodes = bs.nodes.load();
    res.stats.spines = spines_done.load();
    res.stats.elapsed_s = bs.elapsed_s();
    return res;
}

namespace {

// restricted-growth strings enumerate every edge partition exactly once
bool next_rgs(std::vector<int>& a, std::vector<int>& mx) {
    int m = static_cast<int>(a.size());
    for (int i = m - 1; i >= 1; --i) {
        if (a[i] <= mx[i - 1]) {
            ++a[i];
            mx[i] = std::max(mx[i - 1], a[i]);
            for (int j = i + 1; j < m; ++j) {
                a[j] = 0;
                mx[j] = mx[j - 1];
            }
            return true;
        }
    }
    return false;
}

}  // namespace

OracleValues oracle_all_values(const Graph& g) {
    if (g.n() > 5) throw std::invalid_argument("oracle is capped at 5 vertices");
    const int n = g.n(), m = g.m();
    OracleValues best;
    if (m == 0) return best;
    best.pn = best.pn_local = best.pn_union = INT_MAX;

    std::vector<int> spine(n);
    std::iota(spine.begin(), spine.end(), 0);
    do {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[spine[i]] = i;
        // crossing pairs under this spine, from first principles
        std::vector<std::pair<int, int>> cross_pairs;
        for (int e1 = 0; e1 < m; ++e1)
            for (int e2 = e1 + 1; e2 < m; ++e2) {
                int a = pos[g.edge(e1).u], b = pos[g.edge(e1).v];
                int c = pos[g.edge(e2).u], d = pos[g.edge(e2).v];
                if (a > b) std::swap(a, b);
                if (c > d) std::swap(c, d);
                if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                    cross_pairs.push_back({e1, e2});
            }
        std::vector<int> a(m, 0), mx(m, 0);
        while (true) {
            int pages = mx[m - 1] + 1;
            bool book = true;
            for (auto [e1, e2] : cross_pairs)
                if (a[e1] == a[e2]) {
                    book = false;
                    break;
                }
            if (book) {
                best.pn = std::min(best.pn, pages);
                int loc = 0;
                for (int v = 0; v < n; ++v) {
                    unsigned seen = 0;
                    for (int e = 0; e < m; ++e)
                        if (g.edge(e).u == v || g.edge(e).v == v) seen |= 1u << a[e];
                    loc = std::max(loc, __builtin_popcount(seen));
                }
                best.pn_local = std::min(best.pn_local, loc);
                best.pn_union = std::min(best.pn_union, pages);  // book implies union
            } else {
                // union check: crossing pairs must sit in different components
                std::vector<int> par(n);
                bool uni = true;
                for (int p = 0; p < pages && uni; ++p) {
                    std::iota(par.begin(), par.end(), 0);
                    auto find = [&](int x) {
                        while (par[x] != x) x = par[x] = par[par[x]];
                        return x;
                    };
                    for (int e = 0; e < m; ++e)
                        if (a[e] == p) {
                            int ru = find(g.edge(e).u), rv = find(g.edge(e).v);
                            if (ru != rv) par[ru] = rv;
                        }
                    for (auto [e1, e2] : cross_pairs)
                        if (a[e1] == p && a[e2] == p && find(g.edge(e1).u) == find(g.edge(e2).u)) {
                            uni = false;
                            break;
                        }
                }
                if (uni) best.pn_union = std::min(best.pn_union, pages);
            }
            if (!next_rgs(a, mx)) break;
        }
    } while (std::next_permutation(spine.begin(), spine.end()));

    if (!(best.pn_local <= best.pn_union && best.pn_union <= best.pn))
        throw std::logic_error("oracle chain violated");
    return best;
}

int oracle_all(const Graph& g, SolveParameter parameter) {
    OracleValues v = oracle_all_values(g);
    switch (parameter) {
        case SolveParameter::pn: return v.pn;
        case SolveParameter::pn_local: return v.pn_local;
        case SolveParameter::pn_union: return v.pn_union;
    }
    throw std::logic_error("unknown parameter");
}

}  // namespace bookem
