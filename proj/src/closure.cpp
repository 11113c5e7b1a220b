#include "hamspec/closure.hpp"

#include <stdexcept>

namespace hamspec {

std::pair<SimpleGraph, ClosureTrace> k_closure(const SimpleGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("closure threshold must be >= 0");
    SimpleGraph h = g;
    ClosureTrace trace;
    int n = h.order();

    std::vector<std::pair<int, int>> wave;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!h.has_edge(u, v)) wave.emplace_back(u, v);

    while (!wave.empty()) {
        ++trace.rounds;
        std::vector<int> touched;
        for (auto [u, v] : wave) {
            if (h.has_edge(u, v)) continue;
            int sum = h.degree(u) + h.degree(v);
            if (sum >= k) {
                h.add_edge(u, v);
                trace.added_edges.push_back({u, v, sum});
                touched.push_back(u);
                touched.push_back(v);
            }
        }
        wave.clear();
        for (int t : touched)
            for (int w = 0; w < n; ++w)
                if (w != t && !h.has_edge(t, w))
                    wave.emplace_back(std::min(t, w), std::max(t, w));
    }
    return {std::move(h), std::move(trace)};
}

std::pair<BipartiteGraph, ClosureTrace> bipartite_closure(const BipartiteGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("closure threshold must be >= 0");
    BipartiteGraph h = g;
    ClosureTrace trace;
    int nl = h.left_size(), nr = h.right_size();

    std::vector<std::pair<int, int>> wave;
    for (int u = 0; u < nl; ++u)
        for (int v = 0; v < nr; ++v)
            if (!h.has_edge(u, v)) wave.emplace_back(u, v);

    while (!wave.empty()) {
        ++trace.rounds;
        std::vector<std::pair<int, bool>> touched;  // (index, is_left)
        for (auto [u, v] : wave) {
            if (h.has_edge(u, v)) continue;
            int sum = h.left_degree(u) + h.right_degree(v);
            if (sum >= k) {
                h.add_edge(u, v);
                trace.added_edges.push_back({u, v, sum});
                touched.emplace_back(u, true);
                touched.emplace_back(v, false);
            }
        }
        wave.clear();
        for (auto [t, is_left] : touched) {
            if (is_left) {
                for (int v = 0; v < nr; ++v)
                    if (!h.has_edge(t, v)) wave.emplace_back(t, v);
            } else {
                for (int u = 0; u < nl; ++u)
                    if (!h.has_edge(u, t)) wave.emplace_back(u, t);
            }
        }
    }
    return {std::move(h), std::move(trace)};
}

bool is_k_closed(const SimpleGraph& g, int k) {
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) >= k) return false;
    return true;
}

bool is_bipartite_closed(const BipartiteGraph& g, int k) {
    for (int u = 0; u < g.left_size(); ++u)
        for (int v = 0; v < g.right_size(); ++v)
            if (!g.has_edge(u, v) && g.left_degree(u) + g.right_degree(v) >= k)
                return false;
    return true;
}

}  // namespace hamspec
