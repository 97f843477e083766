#include "bookem/embedding.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>

namespace bookem {

SpineOrder SpineOrder::from_order(std::vector<int> order) {
    int n = static_cast<int>(order.size());
    std::vector<int> inverse(n, -1);
    for (int pos = 0; pos < n; ++pos) {
        int v = order[pos];
        if (v < 0 || v >= n)
            throw std::invalid_argument("spine vertex " + std::to_string(v) + " out of range");
        if (inverse[v] != -1)
            throw std::invalid_argument("spine lists vertex " + std::to_string(v) + " twice");
        inverse[v] = pos;
    }
    SpineOrder s;
    s.order = std::move(order);
    s.inverse = std::move(inverse);
    return s;
}

SpineOrder SpineOrder::identity(int n) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    SpineOrder s;
    s.inverse = order;
    s.order = std::move(order);
    return s;
}

PagePartition PagePartition::from_assignment(std::vector<int> page_of_edge) {
    int p = 0;
    for (int id : page_of_edge) {
        if (id < 0) throw std::invalid_argument("negative page id");
        p = std::max(p, id + 1);
    }
    std::vector<char> used(p, 0);
    for (int id : page_of_edge) used[id] = 1;
    for (int id = 0; id < p; ++id)
        if (!used[id]) throw std::invalid_argument("page " + std::to_string(id) + " is empty");
    PagePartition pp;
    pp.page_of_edge = std::move(page_of_edge);
    pp.page_count = p;
    return pp;
}

PagePartition PagePartition::normalized(const std::vector<int>& raw) {
    std::vector<int> remap;
    std::vector<int> out(raw.size());
    int next_fresh = 0;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0) throw std::invalid_argument("negative page id");
        int id = raw[i];
        if (id >= static_cast<int>(remap.size())) remap.resize(id + 1, -1);
        if (remap[id] < 0) remap[id] = next_fresh++;
        out[i] = remap[id];
    }
    PagePartition pp;
    pp.page_of_edge = std::move(out);
    pp.page_count = next_fresh;
    return pp;
}

LinearEmbedding LinearEmbedding::make(Graph graph, SpineOrder spine, PagePartition pages) {
    if (spine.n() != graph.n())
        throw std::invalid_argument("spine covers " + std::to_string(spine.n()) +
                                    " vertices, graph has " + std::to_string(graph.n()));
    if (pages.m() != graph.m())
        throw std::invalid_argument("page assignment covers " + std::to_string(pages.m()) +
                                    " edges, graph has " + std::to_string(graph.m()));
    return LinearEmbedding{std::move(graph), std::move(spine), std::move(pages)};
}

bool crosses(const Edge& a, const Edge& b, const SpineOrder& spine) {
    int a1 = spine.inverse[a.u], a2 = spine.inverse[a.v];
    if (a1 > a2) std::swap(a1, a2);
    int b1 = spine.inverse[b.u], b2 = spine.inverse[b.v];
    if (b1 > b2) std::swap(b1, b2);
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

CrossingMatrix::CrossingMatrix(const Graph& g, const SpineOrder& spine) {
    m_ = g.m();
    words_ = (m_ + 63) / 64;
    bits_.assign(static_cast<size_t>(m_) * words_, 0);
    std::vector<std::pair<int, int>> span(m_);
    for (int e = 0; e < m_; ++e) {
        int p = spine.inverse[g.edge(e).u], q = spine.inverse[g.edge(e).v];
        span[e] = {std::min(p, q), std::max(p, q)};
    }
    for (int e = 0; e < m_; ++e)
        for (int f = e + 1; f < m_; ++f) {
            auto [a1, a2] = span[e];
            auto [b1, b2] = span[f];
            bool x = (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
            if (x) {
                bits_[static_cast<size_t>(e) * words_ + (f >> 6)] |= 1ull << (f & 63);
                bits_[static_cast<size_t>(f) * words_ + (e >> 6)] |= 1ull << (e & 63);
            }
        }
}

int CrossingMatrix::crossing_degree(int e) const {
    const std::uint64_t* r = row(e);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(r[w]);
    return c;
}

namespace {

// True iff the given edges, drawn as arcs over the spine, are pairwise
// non-crossing: arcs must close in last-opened-first-closed order.
bool arcs_nest(const std::vector<int>& edge_ids, const Graph& g, const SpineOrder& spine) {
    struct Ev {
        int pos;
        bool close;
        int other;  // the matching endpoint's position
        int id;
    };
    std::vector<Ev> evs;
    evs.reserve(edge_ids.size() * 2);
    for (int e : edge_ids) {
        int p = spine.inverse[g.edge(e).u], q = spine.inverse[g.edge(e).v];
        if (p > q) std::swap(p, q);
        evs.push_back({p, false, q, e});
        evs.push_back({q, true, p, e});
    }
    std::sort(evs.begin(), evs.end(), [](const Ev& a, const Ev& b) {
        if (a.pos != b.pos) return a.pos < b.pos;
        if (a.close != b.close) return a.close;  // closes first: shared endpoints never cross
        // closes: pop the most recently opened first; opens: push the
        // farthest-reaching arc first.
        return a.close ? a.other > b.other : a.other > b.other;
    });
    std::vector<int> stack;
    for (const Ev& ev : evs) {
        if (!ev.close) {
            stack.push_back(ev.id);
        } else {
            if (stack.empty() || stack.back() != ev.id) return false;
            stack.pop_back();
        }
    }
    return true;
}

// Connected components of the subgraph formed by the given edges; returns
// groups of edge ids, deterministic order (by smallest member edge id).
std::vector<std::vector<int>> edge_components(const std::vector<int>& edge_ids, const Graph& g) {
    std::vector<int> verts;
    verts.reserve(edge_ids.size() * 2);
    for (int e : edge_ids) {
        verts.push_back(g.edge(e).u);
        verts.push_back(g.edge(e).v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<int> parent(verts.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e : edge_ids) {
        int a = find(local(g.edge(e).u)), b = find(local(g.edge(e).v));
        if (a != b) parent[a] = b;
    }
    std::vector<std::vector<int>> groups;
    std::vector<int> group_of(verts.size(), -1);
    for (int e : edge_ids) {
        int r = find(local(g.edge(e).u));
        if (group_of[r] < 0) {
            group_of[r] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[group_of[r]].push_back(e);
    }
    return groups;
}

}  // namespace

std::vector<int> locality_profile(const LinearEmbedding& emb) {
    const Graph& g = emb.graph;
    std::vector<std::vector<int>> pages_at(g.n());
    for (int e = 0; e < g.m(); ++e) {
        int p = emb.pages.page_of_edge[e];
        pages_at[g.edge(e).u].push_back(p);
        pages_at[g.edge(e).v].push_back(p);
    }
    std::vector<int> out(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        auto& ps = pages_at[v];
        std::sort(ps.begin(), ps.end());
        ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
        out[v] = static_cast<int>(ps.size());
    }
    return out;
}

VerificationReport verify(const LinearEmbedding& emb, int witness_cap) {
    const Graph& g = emb.graph;
    VerificationReport rep;
    rep.page_count = emb.pages.page_count;
    rep.per_vertex_locality = locality_profile(emb);
    rep.locality = 0;
    for (int l : rep.per_vertex_locality) rep.locality = std::max(rep.locality, l);
    rep.is_book = true;
    rep.is_union = true;

    std::vector<std::vector<int>> page_edges(rep.page_count);
    for (int e = 0; e < g.m(); ++e) page_edges[emb.pages.page_of_edge[e]].push_back(e);

    std::optional<CrossingMatrix> cm;
    if (g.m() <= kCrossingMatrixMaxEdges) cm.emplace(g, emb.spine);
    auto cross = [&](int a, int b) {
        return cm ? cm->crosses(a, b) : crosses(g.edge(a), g.edge(b), emb.spine);
    };
    auto add_witness = [&](int a, int b, int page, Violation::Kind kind) {
        if (witness_cap >= 0 && static_cast<int>(rep.violations.size()) >= witness_cap) {
            rep.violations_truncated = true;
            return false;
        }
        rep.violations.push_back({g.edge(a), g.edge(b), page, kind});
        return true;
    };
    // Collects same-kind witnesses from every crossing pair in a group;
    // returns false once the cap is hit so callers can stop scanning.
    auto scan_pairs = [&](const std::vector<int>& es, int page, Violation::Kind kind) {
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j)
                if (cross(es[i], es[j]))
                    if (!add_witness(es[i], es[j], page, kind)) return false;
        return true;
    };

    bool want_witnesses = true;
    for (int p = 0; p < rep.page_count; ++p) {
        const std::vector<int>& es = page_edges[p];
        if (arcs_nest(es, g, emb.spine)) continue;  // clean page satisfies both regimes
        rep.is_book = false;
        if (want_witnesses) want_witnesses = scan_pairs(es, p, Violation::Kind::same_page);
        for (const auto& comp : edge_components(es, g)) {
            if (comp.size() < 2 || arcs_nest(comp, g, emb.spine)) continue;
            rep.is_union = false;
            if (want_witnesses) want_witnesses = scan_pairs(comp, p, Violation::Kind::same_component);
            if (!want_witnesses) break;
        }
        if (!rep.is_book && !rep.is_union && !want_witnesses) break;
    }
    return rep;
}

LinearEmbedding split_page_components(const LinearEmbedding& emb) {
    const Graph& g = emb.graph;
    std::vector<std::vector<int>> page_edges(emb.pages.page_count);
    for (int e = 0; e < g.m(); ++e) page_edges[emb.pages.page_of_edge[e]].push_back(e);
    std::vector<int> raw(g.m(), 0);
    int next = 0;
    for (const auto& es : page_edges)
        for (const auto& comp : edge_components(es, g)) {
            for (int e : comp) raw[e] = next;
            ++next;
        }
    return LinearEmbedding::make(g, emb.spine, PagePartition::normalized(raw));
}

namespace {

int parse_int_token(const std::string& tok, int lineno, const char* what) {
    size_t idx = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &idx);
    } catch (const std::exception&) {
        throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (idx != tok.size())
        throw ParseError(lineno, std::string("expected ") + what + ", got '" + tok + "'");
    return v;
}

}  // namespace

LinearEmbedding parse_embedding(const std::string& text, const Graph& graph) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_spine = false;
    SpineOrder spine;
    std::vector<int> assignment(graph.m(), -1);
    int next_page = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (!have_spine) {
            if (head != "spine:")
                throw ParseError(lineno, "expected \"spine:\" line, got '" + head + "'");
            std::vector<int> order;
            std::string tok;
            while (ls >> tok) order.push_back(parse_int_token(tok, lineno, "a vertex"));
            if (static_cast<int>(order.size()) != graph.n())
                throw ParseError(lineno, "spine lists " + std::to_string(order.size()) +
                                             " vertices, graph has " + std::to_string(graph.n()));
            try {
                spine = SpineOrder::from_order(std::move(order));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
            have_spine = true;
            continue;
        }
        if (head != "page")
            throw ParseError(lineno, "expected \"page k:\" line, got '" + head + "'");
        std::string idtok;
        if (!(ls >> idtok)) throw ParseError(lineno, "page line is missing its id");
        if (idtok.empty() || idtok.back() != ':')
            throw ParseError(lineno, "page id must end with ':'");
        idtok.pop_back();
        int id = parse_int_token(idtok, lineno, "a page id");
        if (id != next_page)
            throw ParseError(lineno, "expected page " + std::to_string(next_page) + ", got page " +
                                         std::to_string(id));
        std::string tok;
        int edges_on_page = 0;
        while (ls >> tok) {
            size_t dash = tok.find('-');
            if (dash == std::string::npos || dash == 0 || dash + 1 == tok.size())
                throw ParseError(lineno, "expected edge \"u-v\", got '" + tok + "'");
            int u = parse_int_token(tok.substr(0, dash), lineno, "a vertex");
            int v = parse_int_token(tok.substr(dash + 1), lineno, "a vertex");
            int e = (u >= 0 && u < graph.n() && v >= 0 && v < graph.n()) ? graph.edge_index(u, v)
                                                                         : -1;
            if (e < 0) throw ParseError(lineno, "edge " + tok + " not in graph");
            if (assignment[e] != -1)
                throw ParseError(lineno, "edge " + tok + " assigned twice");
            assignment[e] = id;
            ++edges_on_page;
        }
        if (edges_on_page == 0) throw ParseError(lineno, "page " + std::to_string(id) + " is empty");
        ++next_page;
    }
    if (!have_spine) throw ParseError(lineno, "missing \"spine:\" line");
    for (int e = 0; e < graph.m(); ++e)
        if (assignment[e] < 0)
            throw ParseError(lineno, "edge " + std::to_string(graph.edge(e).u) + "-" +
                                         std::to_string(graph.edge(e).v) + " unassigned");
    return LinearEmbedding::make(graph, std::move(spine),
                                 PagePartition::from_assignment(std::move(assignment)));
}

std::string serialize_embedding(const LinearEmbedding& emb) {
    std::ostringstream out;
    out << "spine:";
    for (int v : emb.spine.order) out << ' ' << v;
    out << '\n';
    std::vector<std::vector<int>> page_edges(emb.pages.page_count);
    for (int e = 0; e < emb.graph.m(); ++e) page_edges[emb.pages.page_of_edge[e]].push_back(e);
    for (int p = 0; p < emb.pages.page_count; ++p) {
        out << "page " << p << ':';
        for (int e : page_edges[p])
            out << ' ' << emb.graph.edge(e).u << '-' << emb.graph.edge(e).v;
        out << '\n';
    }
    return out.str();
}

}  // namespace bookem
