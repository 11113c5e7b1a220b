#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "hamspec/graph.hpp"

using namespace hamspec;

TEST_CASE("basic edge bookkeeping") {
    SimpleGraph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    CHECK(g.has_edge(1, 0));
    CHECK(g.degree(1) == 2);
    CHECK(g.edge_count() == 2);
    g.remove_edge(0, 1);
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 9), std::out_of_range);
}

TEST_CASE("named constructions") {
    CHECK(SimpleGraph::complete(6).edge_count() == 15);
    CHECK(SimpleGraph::cycle(7).edge_count() == 7);
    CHECK(SimpleGraph::path(7).edge_count() == 6);
    CHECK(SimpleGraph::complete_bipartite(3, 4).edge_count() == 12);
    SimpleGraph p = SimpleGraph::petersen();
    CHECK(p.order() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(is_regular(p).value() == 3);
}

TEST_CASE("complement / join / union") {
    SimpleGraph c5 = SimpleGraph::cycle(5);
    SimpleGraph cc = complement(c5);
    CHECK(cc.edge_count() == 5);  // complement of C5 is C5
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(c5.has_edge(u, v) != cc.has_edge(u, v));

    SimpleGraph j = join(SimpleGraph::empty(3), SimpleGraph::empty(4));
    CHECK(j.edge_count() == 12);  // = K_{3,4}
    CHECK(disjoint_union(c5, c5).edge_count() == 10);

    SimpleGraph k5 = SimpleGraph::complete(5);
    VertexSet s;
    s.add(0);
    s.add(2);
    s.add(4);
    CHECK(induced(k5, s).edge_count() == 3);
}

TEST_CASE("components and connectivity") {
    SimpleGraph g = disjoint_union(SimpleGraph::cycle(4), SimpleGraph::complete(3));
    auto comps = connected_components(g);
    CHECK(comps.size() == 2);
    CHECK(comps[0].size() + comps[1].size() == 7);
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(SimpleGraph::petersen()));
    CHECK(min_degree(SimpleGraph::path(4)) == 1);
}

TEST_CASE("regularity detection") {
    CHECK(is_regular(SimpleGraph::cycle(6)).value() == 2);
    CHECK_FALSE(is_regular(SimpleGraph::path(4)).has_value());
    CHECK(is_regular(SimpleGraph::empty(3)).value() == 0);
}

TEST_CASE("semi-regular bipartite detection") {
    auto w = is_semiregular_bipartite(SimpleGraph::complete_bipartite(3, 4));
    REQUIRE(w.has_value());
    CHECK(((w->p == 4 && w->q == 3) || (w->p == 3 && w->q == 4)));
    CHECK(w->left.size() + w->right.size() == 7);
    // regular bipartite (p == q) is excluded by contract
    CHECK_FALSE(is_semiregular_bipartite(SimpleGraph::cycle(6)).has_value());
    // odd cycle is not bipartite at all
    CHECK_FALSE(is_semiregular_bipartite(SimpleGraph::cycle(5)).has_value());
    // disconnected: two copies of K_{1,3}
    SimpleGraph two = disjoint_union(SimpleGraph::complete_bipartite(1, 3),
                                     SimpleGraph::complete_bipartite(1, 3));
    auto w2 = is_semiregular_bipartite(two);
    REQUIRE(w2.has_value());
    CHECK(w2->p * w2->q == 3);
}

TEST_CASE("bipartition") {
    auto bp = bipartition(SimpleGraph::cycle(6));
    REQUIRE(bp.has_value());
    CHECK(bp->first.size() == 3);
    CHECK_FALSE(bipartition(SimpleGraph::complete(3)).has_value());
}

TEST_CASE("BipartiteGraph round trips through SimpleGraph") {
    BipartiteGraph b(3, 4);
    b.add_edge(0, 0);
    b.add_edge(2, 3);
    b.add_edge(1, 2);
    SimpleGraph s = b.as_simple();
    CHECK(s.order() == 7);
    CHECK(s.has_edge(0, 3));  // right 0 lives at index 3
    BipartiteGraph back = BipartiteGraph::from_simple(s, 3);
    CHECK(back == b);

    SimpleGraph bad = SimpleGraph::complete(4);
    CHECK_THROWS_AS(BipartiteGraph::from_simple(bad, 2), std::invalid_argument);
    CHECK(BipartiteGraph::complete(4, 4).min_degree() == 4);
    CHECK(BipartiteGraph(5, 4).almost_balanced());
}

TEST_CASE("graph6 round trip on knowns") {
    // 'Bw' is K_3 in graph6
    SimpleGraph k3 = graph6_decode("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(graph6_encode(k3) == "Bw");

    for (const SimpleGraph& g : {SimpleGraph::petersen(), SimpleGraph::cycle(9),
                                 SimpleGraph::complete_bipartite(5, 7), SimpleGraph::empty(1)}) {
        SimpleGraph rt = graph6_decode(graph6_encode(g));
        CHECK(rt == g);
    }

    CHECK_THROWS_AS(graph6_decode("\x01"), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("B"), Graph6Error);  // truncated
}

TEST_CASE("graph6 encodes all 4-vertex graphs distinctly") {
    std::set<std::string> seen;
    for (int mask = 0; mask < 64; ++mask) {
        SimpleGraph g(4);
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v);
        seen.insert(graph6_encode(g));
    }
    CHECK(seen.size() == 64);
}
