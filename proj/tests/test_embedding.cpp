#include "bookem/embedding.hpp"

#include <algorithm>

#include "doctest.h"

using namespace bookem;

namespace {

LinearEmbedding emb_of(const Graph& g, std::vector<int> order, std::vector<int> pages) {
    return LinearEmbedding::make(g, SpineOrder::from_order(std::move(order)),
                                 PagePartition::normalized(pages));
}

// reference crossing check used to validate the sweep in verify()
bool naive_page_clean(const Graph& g, const SpineOrder& s, const std::vector<int>& pages,
                      int page) {
    for (int e = 0; e < g.m(); ++e)
        for (int f = e + 1; f < g.m(); ++f)
            if (pages[e] == page && pages[f] == page && crosses(g.edge(e), g.edge(f), s))
                return false;
    return true;
}

}  // namespace

TEST_CASE("spine order") {
    SpineOrder s = SpineOrder::from_order({2, 0, 1});
    CHECK(s.position_of(2) == 0);
    CHECK(s.position_of(1) == 2);
    CHECK(s.vertex_at(1) == 0);
    CHECK((SpineOrder::identity(3).order == std::vector<int>{0, 1, 2}));
    CHECK_THROWS_AS((SpineOrder::from_order({0, 0, 1})), std::invalid_argument);
    CHECK_THROWS_AS((SpineOrder::from_order({0, 3, 1})), std::invalid_argument);
}

TEST_CASE("page partition normal form") {
    CHECK_THROWS_AS((PagePartition::from_assignment({0, 2, 0})), std::invalid_argument);
    CHECK((PagePartition::from_assignment({0, 1, 0}).page_count == 2));
    PagePartition p = PagePartition::normalized({5, 2, 5, 9});
    CHECK((p.page_of_edge == std::vector<int>{0, 1, 0, 2}));
    CHECK(p.page_count == 3);
}

TEST_CASE("crossing predicate") {
    SpineOrder s = SpineOrder::identity(4);
    CHECK((crosses({0, 2}, {1, 3}, s)));
    CHECK((crosses({1, 3}, {0, 2}, s)));
    CHECK_FALSE((crosses({0, 1}, {2, 3}, s)));
    CHECK_FALSE((crosses({0, 3}, {1, 2}, s)));  // nested
    CHECK_FALSE((crosses({0, 2}, {0, 3}, s)));  // shared endpoint
    CHECK_FALSE((crosses({0, 2}, {2, 3}, s)));

    // invariance under rotation and reversal of the spine
    Graph k5 = gen_complete(5);
    SpineOrder base = SpineOrder::identity(5);
    std::vector<int> rot = {1, 2, 3, 4, 0};
    std::vector<int> rev = {4, 3, 2, 1, 0};
    SpineOrder srot = SpineOrder::from_order(rot);
    SpineOrder srev = SpineOrder::from_order(rev);
    for (int e = 0; e < k5.m(); ++e)
        for (int f = e + 1; f < k5.m(); ++f) {
            bool c = crosses(k5.edge(e), k5.edge(f), base);
            CHECK(crosses(k5.edge(e), k5.edge(f), srot) == c);
            CHECK(crosses(k5.edge(e), k5.edge(f), srev) == c);
        }
}

TEST_CASE("crossing matrix matches predicate") {
    Graph g = gen_complete(6);
    SpineOrder s = SpineOrder::from_order({3, 0, 5, 1, 4, 2});
    CrossingMatrix cm(g, s);
    for (int e = 0; e < g.m(); ++e) {
        int deg = 0;
        for (int f = 0; f < g.m(); ++f) {
            CHECK(cm.crosses(e, f) == crosses(g.edge(e), g.edge(f), s));
            deg += cm.crosses(e, f);
        }
        CHECK(cm.crossing_degree(e) == deg);
    }
}

TEST_CASE("verify book and union") {
    // K_4 on the identity spine: edge (0,2) crosses (1,3)
    Graph k4 = gen_complete(4);
    LinearEmbedding one_page = emb_of(k4, {0, 1, 2, 3}, std::vector<int>(6, 0));
    VerificationReport r = verify(one_page);
    CHECK_FALSE(r.is_book);
    CHECK_FALSE(r.is_union);  // K_4 is connected, so the crossing is intra-component
    CHECK(r.page_count == 1);
    CHECK(r.locality == 1);
    REQUIRE(!r.violations.empty());
    CHECK((r.violations[0].e1 == Edge{0, 2}));
    CHECK((r.violations[0].e2 == Edge{1, 3}));

    // moving (1,3) to its own page fixes both regimes
    std::vector<int> pg(6, 0);
    pg[k4.edge_index(1, 3)] = 1;
    r = verify(emb_of(k4, {0, 1, 2, 3}, pg));
    CHECK(r.is_book);
    CHECK(r.is_union);
    CHECK(r.page_count == 2);
    CHECK(r.locality == 2);

    // two disjoint crossing edges on one page: union yes, book no
    Graph two = Graph::from_edges(4, {{0, 2}, {1, 3}});
    r = verify(emb_of(two, {0, 1, 2, 3}, {0, 0}));
    CHECK_FALSE(r.is_book);
    CHECK(r.is_union);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == Violation::Kind::same_page);
}

TEST_CASE("verify path on one page") {
    Graph p5 = gen_path(5);
    VerificationReport r = verify(emb_of(p5, {0, 1, 2, 3, 4}, std::vector<int>(4, 0)));
    CHECK(r.is_book);
    CHECK(r.is_union);
    CHECK(r.locality == 1);
    CHECK((r.per_vertex_locality == std::vector<int>{1, 1, 1, 1, 1}));
}

TEST_CASE("locality profile") {
    Graph star = gen_complete_bipartite(1, 4);
    LinearEmbedding e = emb_of(star, {0, 1, 2, 3, 4}, std::vector<int>(4, 0));
    std::vector<int> prof = locality_profile(e);
    CHECK((prof == std::vector<int>{1, 1, 1, 1, 1}));

    Graph lonely = Graph::from_edges(3, {{0, 1}});
    prof = locality_profile(emb_of(lonely, {0, 1, 2}, {0}));
    CHECK(prof[2] == 0);
}

TEST_CASE("witness cap") {
    // K_6 all on one page has many crossings
    Graph k6 = gen_complete(6);
    LinearEmbedding e = emb_of(k6, {0, 1, 2, 3, 4, 5}, std::vector<int>(15, 0));
    VerificationReport r = verify(e, 4);
    CHECK_FALSE(r.is_book);
    CHECK_FALSE(r.is_union);
    CHECK(r.violations.size() == 4);
    CHECK(r.violations_truncated);
    VerificationReport full = verify(e, -1);
    CHECK_FALSE(full.violations_truncated);
    CHECK(full.violations.size() > 4);
}

TEST_CASE("sweep agrees with pair scan on random embeddings") {
    Xorshift64Star rng(2024);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + static_cast<int>(rng.next_below(5));
        std::vector<Edge> all;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_below(2)) all.push_back({u, v});
        if (all.empty()) continue;
        Graph g = Graph::from_edges(n, all);
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(order[i], order[rng.next_below(i + 1)]);
        int npages = 1 + static_cast<int>(rng.next_below(3));
        std::vector<int> pages(g.m());
        for (int& p : pages) p = static_cast<int>(rng.next_below(npages));
        SpineOrder s = SpineOrder::from_order(order);
        LinearEmbedding emb =
            LinearEmbedding::make(g, s, PagePartition::normalized(pages));
        VerificationReport r = verify(emb, -1);
        bool clean = true;
        for (int p = 0; p < emb.pages.page_count; ++p)
            clean = clean && naive_page_clean(g, s, emb.pages.page_of_edge, p);
        CHECK(r.is_book == clean);
        if (r.is_book) CHECK(r.is_union);
        CHECK(r.locality <= r.page_count);
        // every reported same-page witness really crosses on its page
        for (const Violation& v : r.violations) {
            CHECK(crosses(v.e1, v.e2, s));
            CHECK(emb.pages.page_of_edge[g.edge_index(v.e1.u, v.e1.v)] == v.page);
            CHECK(emb.pages.page_of_edge[g.edge_index(v.e2.u, v.e2.v)] == v.page);
        }
    }
}

TEST_CASE("split page components") {
    // crossing edges in distinct components on one page
    Graph g = Graph::from_edges(6, {{0, 2}, {1, 4}, {3, 5}, {0, 1}});
    std::vector<int> pages(4, 0);
    pages[g.edge_index(0, 1)] = 1;
    LinearEmbedding e = emb_of(g, {0, 1, 2, 3, 4, 5}, pages);
    VerificationReport before = verify(e);
    REQUIRE(before.is_union);
    REQUIRE_FALSE(before.is_book);
    LinearEmbedding split = split_page_components(e);
    VerificationReport after = verify(split);
    CHECK(after.is_book);
    CHECK(after.locality == before.locality);
    CHECK(after.per_vertex_locality == before.per_vertex_locality);
    CHECK(after.page_count >= before.page_count);
}

TEST_CASE("embedding parse and serialize") {
    Graph p3 = gen_path(3);
    LinearEmbedding e = parse_embedding("spine: 0 1 2\npage 0: 0-1 1-2\n", p3);
    CHECK(verify(e).is_book);
    CHECK(serialize_embedding(e) == "spine: 0 1 2\npage 0: 0-1 1-2\n");

    // round trip on a two-page K_4 embedding
    Graph k4 = gen_complete(4);
    std::vector<int> pg(6, 0);
    pg[k4.edge_index(1, 3)] = 1;
    LinearEmbedding k4e = emb_of(k4, {2, 0, 3, 1}, pg);
    LinearEmbedding back = parse_embedding(serialize_embedding(k4e), k4);
    CHECK(back.spine == k4e.spine);
    CHECK(back.pages == k4e.pages);

    CHECK_THROWS_AS(parse_embedding("spine: 0 1 2\npage 0: 0-1\n", p3), ParseError);  // unassigned
    CHECK_THROWS_AS(parse_embedding("spine: 0 0 2\npage 0: 0-1 1-2\n", p3), ParseError);
    CHECK_THROWS_AS(parse_embedding("spine: 0 1\npage 0: 0-1 1-2\n", p3), ParseError);
    CHECK_THROWS_AS(parse_embedding("spine: 0 1 2\npage 1: 0-1 1-2\n", p3), ParseError);
    CHECK_THROWS_AS(parse_embedding("spine: 0 1 2\npage 0: 0-1 1-2 0-2\n", p3), ParseError);
    CHECK_THROWS_AS(parse_embedding("spine: 0 1 2\npage 0: 0-1 0-1 1-2\n", p3), ParseError);
    CHECK_THROWS_AS(parse_embedding("spine: 0 1 2\npage 0:\npage 1: 0-1 1-2\n", p3), ParseError);
    try {
        parse_embedding("spine: 0 1 2\npage 0: 0-1\n", p3);
    } catch (const ParseError& err) {
        CHECK(std::string(err.what()).find("1-2 unassigned") != std::string::npos);
    }
}

TEST_CASE("verify rejects malformed embeddings at construction") {
    Graph p3 = gen_path(3);
    CHECK_THROWS_AS(
        (LinearEmbedding::make(p3, SpineOrder::identity(2), PagePartition::normalized({0, 0}))),
        std::invalid_argument);
    CHECK_THROWS_AS(
        (LinearEmbedding::make(p3, SpineOrder::identity(3), PagePartition::normalized({0}))),
        std::invalid_argument);
}
