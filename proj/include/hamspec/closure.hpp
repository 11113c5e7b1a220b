#pragma once

#include <utility>
#include <vector>

#include "hamspec/graph.hpp"

namespace hamspec {

/// Audit trail of a closure run: every edge added, with the degree sum that
/// qualified it at the moment of addition.
struct ClosureTrace {
    struct Added {
        int u, v;
        int degree_sum;
    };
    std::vector<Added> added_edges;
    int rounds = 0;
};

/// Bondy-Chvatal k-closure: repeatedly joins nonadjacent pairs with degree
/// sum >= k until none remain. Worklist implementation; result is order
/// independent.
std::pair<SimpleGraph, ClosureTrace> k_closure(const SimpleGraph& g, int k);

/// Bipartite closure: same rule restricted to cross-part pairs.
std::pair<BipartiteGraph, ClosureTrace> bipartite_closure(const BipartiteGraph& g, int k);

bool is_k_closed(const SimpleGraph& g, int k);
bool is_bipartite_closed(const BipartiteGraph& g, int k);

}  // namespace hamspec
