#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "hamspec/closure.hpp"
#include "hamspec/graph.hpp"

using namespace hamspec;

namespace {

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
    SimpleGraph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

}  // namespace

TEST_CASE("closure fills a dense cycle to the complete graph") {
    // C_5 plus one chord: degree sums reach 5 and cascade
    SimpleGraph g = SimpleGraph::cycle(5);
    g.add_edge(0, 2);
    auto [cl, trace] = k_closure(g, 5);
    CHECK(cl.edge_count() == 10);
    CHECK(trace.added_edges.size() == 4);
    for (const auto& a : trace.added_edges) CHECK(a.degree_sum >= 5);
}

TEST_CASE("closure is a fixpoint when no pair qualifies") {
    SimpleGraph c5 = SimpleGraph::cycle(5);
    auto [cl, trace] = k_closure(c5, 5);  // all degree sums are 4
    CHECK(cl == c5);
    CHECK(trace.added_edges.empty());
    CHECK(is_k_closed(c5, 5));
    CHECK_FALSE(is_k_closed(c5, 4));
}

TEST_CASE("closure at k=0 always completes") {
    auto [cl, trace] = k_closure(SimpleGraph::empty(4), 0);
    CHECK(cl.edge_count() == 6);
    (void)trace;
    CHECK_THROWS_AS(k_closure(SimpleGraph::empty(3), -1), std::invalid_argument);
}

TEST_CASE("closure result is idempotent and k-closed") {
    SimpleGraph g = SimpleGraph::petersen();
    for (int k : {5, 6, 7}) {
        auto cl = k_closure(g, k).first;
        CHECK(is_k_closed(cl, k));
        CHECK(k_closure(cl, k).first == cl);
    }
}

TEST_CASE("closure commutes with relabeling (order independence)") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        SimpleGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() & 1) g.add_edge(u, v);
        int k = static_cast<int>(rng() % (n + 2));
        SimpleGraph base = k_closure(g, k).first;
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int rep = 0; rep < 10; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            // closure of the relabeled graph equals the relabeled closure
            CHECK(k_closure(relabel(g, perm), k).first == relabel(base, perm));
        }
    }
}

TEST_CASE("bipartite closure respects the bipartition") {
    BipartiteGraph g(3, 3);
    // 6-cycle as bipartite graph: degree sums are 4
    g.add_edge(0, 0);
    g.add_edge(1, 0);
    g.add_edge(1, 1);
    g.add_edge(2, 1);
    g.add_edge(2, 2);
    g.add_edge(0, 2);
    auto [cl4, t4] = bipartite_closure(g, 4);
    CHECK(cl4.edge_count() == 9);  // completes to K_{3,3}
    CHECK(t4.added_edges.size() == 3);
    auto [cl5, t5] = bipartite_closure(g, 5);
    CHECK(cl5 == g);
    CHECK(t5.added_edges.empty());
    CHECK(is_bipartite_closed(g, 5));
    CHECK_FALSE(is_bipartite_closed(g, 4));
}

TEST_CASE("bipartite closure trace records qualifying degree sums") {
    BipartiteGraph g = BipartiteGraph::complete(4, 4);
    g.remove_edge(0, 0);
    g.remove_edge(1, 1);
    auto [cl, trace] = bipartite_closure(g, 6);
    CHECK(cl.edge_count() == 16);
    for (const auto& a : trace.added_edges) CHECK(a.degree_sum >= 6);
}
