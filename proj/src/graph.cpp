#include "hamspec/graph.hpp"

#include <algorithm>

namespace hamspec {

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

SimpleGraph SimpleGraph::path(int n) {
    SimpleGraph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

SimpleGraph SimpleGraph::complete_bipartite(int p, int q) {
    SimpleGraph g(p + q);
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v) g.add_edge(u, p + v);
    return g;
}

SimpleGraph SimpleGraph::petersen() {
    SimpleGraph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);              // spokes
    }
    return g;
}

SimpleGraph SimpleGraph::from_edges(int n,
                                    std::initializer_list<std::pair<int, int>> edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int BipartiteGraph::min_degree() const {
    if (order() == 0) throw std::invalid_argument("min_degree of empty graph");
    int d = order();
    for (int u = 0; u < nl_; ++u) d = std::min(d, left_degree(u));
    for (int v = 0; v < nr_; ++v) d = std::min(d, right_degree(v));
    return d;
}

SimpleGraph BipartiteGraph::as_simple() const {
    SimpleGraph g(nl_ + nr_);
    for (int u = 0; u < nl_; ++u)
        for (int v = 0; v < nr_; ++v)
            if (has_edge(u, v)) g.add_edge(u, nl_ + v);
    return g;
}

BipartiteGraph BipartiteGraph::from_simple(const SimpleGraph& g, int nl) {
    int n = g.order();
    if (nl < 0 || nl > n) throw std::invalid_argument("invalid part size");
    BipartiteGraph b(nl, n - nl);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) {
                if (v < nl || u >= nl)
                    throw std::invalid_argument("edge within one part");
                b.add_edge(u, v - nl);
            }
    return b;
}

BipartiteGraph BipartiteGraph::complete(int nl, int nr) {
    BipartiteGraph b(nl, nr);
    for (int u = 0; u < nl; ++u)
        for (int v = 0; v < nr; ++v) b.add_edge(u, v);
    return b;
}

SimpleGraph complement(const SimpleGraph& g) {
    int n = g.order();
    SimpleGraph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h) {
    int ng = g.order(), nh = h.order();
    SimpleGraph j(ng + nh);
    for (int u = 0; u < ng; ++u)
        for (int v = u + 1; v < ng; ++v)
            if (g.has_edge(u, v)) j.add_edge(u, v);
    for (int u = 0; u < nh; ++u)
        for (int v = u + 1; v < nh; ++v)
            if (h.has_edge(u, v)) j.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) j.add_edge(u, ng + v);
    return j;
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
    int ng = g.order(), nh = h.order();
    SimpleGraph u(ng + nh);
    for (int a = 0; a < ng; ++a)
        for (int b = a + 1; b < ng; ++b)
            if (g.has_edge(a, b)) u.add_edge(a, b);
    for (int a = 0; a < nh; ++a)
        for (int b = a + 1; b < nh; ++b)
            if (h.has_edge(a, b)) u.add_edge(ng + a, ng + b);
    return u;
}

SimpleGraph induced(const SimpleGraph& g, VertexSet s) {
    int n = g.order();
    std::vector<int> keep;
    for (int v = 0; v < n && v < 64; ++v)
        if (s.contains(v)) keep.push_back(v);
    if (n > 64 && (s.bits >> 63) > 1)
        throw std::invalid_argument("vertex set exceeds mask range");
    SimpleGraph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

SimpleGraph delete_edge(const SimpleGraph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("delete_edge on a non-edge");
    SimpleGraph h = g;
    h.remove_edge(u, v);
    return h;
}

std::optional<int> is_regular(const SimpleGraph& g) {
    int n = g.order();
    if (n == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const SimpleGraph& g) {
    int n = g.order();
    if (n > 64) throw std::invalid_argument("bipartition requires n <= 64");
    std::vector<int> color(n, -1);
    VertexSet left, right;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        left.add(s);
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::uint64_t nb = g.neighbors_mask(u);
            while (nb) {
                int v = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    (color[v] == 0 ? left : right).add(v);
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::make_pair(left, right);
}

std::optional<SemiRegularWitness> is_semiregular_bipartite(const SimpleGraph& g) {
    auto parts = bipartition(g);
    if (!parts) return std::nullopt;
    int n = g.order();
    if (n == 0) return std::nullopt;

    // Which side of each component goes to U is a free choice, so gather the
    // per-component (color0, color1) sets with their uniform degrees and then
    // search for a consistent (p, q) orientation with p != q.
    struct CompSides {
        VertexSet a, b;
        int da = -1, db = -1;  // -1 marks an empty side (unconstrained)
    };
    std::vector<CompSides> comps;
    for (VertexSet comp : connected_components(g)) {
        CompSides cs;
        for (int v = 0; v < n; ++v) {
            if (!comp.contains(v)) continue;
            bool in_a = parts->first.contains(v);
            VertexSet& side = in_a ? cs.a : cs.b;
            int& d = in_a ? cs.da : cs.db;
            int dv = g.degree(v);
            if (d == -1) d = dv;
            else if (d != dv) return std::nullopt;  // side not uniform
            side.add(v);
        }
        comps.push_back(cs);
    }

    auto assemble = [&](int p, int q) -> std::optional<SemiRegularWitness> {
        VertexSet left, right;
        for (const auto& cs : comps) {
            bool fits_fwd = (cs.da == -1 || cs.da == p) && (cs.db == -1 || cs.db == q);
            bool fits_rev = (cs.da == -1 || cs.da == q) && (cs.db == -1 || cs.db == p);
            if (fits_fwd) {
                left.bits |= cs.a.bits;
                right.bits |= cs.b.bits;
            } else if (fits_rev) {
                left.bits |= cs.b.bits;
                right.bits |= cs.a.bits;
            } else {
                return std::nullopt;
            }
        }
        if (left.empty() || right.empty()) return std::nullopt;
        return SemiRegularWitness{p, q, left, right};
    };

    // Candidate (p, q) pairs come from the distinct degrees present.
    std::vector<int> degs;
    for (const auto& cs : comps) {
        if (cs.da != -1) degs.push_back(cs.da);
        if (cs.db != -1) degs.push_back(cs.db);
    }
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    if (degs.size() > 2) return std::nullopt;
    if (degs.size() < 2) return std::nullopt;  // p == q is excluded
    if (auto w = assemble(degs[1], degs[0])) return w;  // report larger degree as p
    return assemble(degs[0], degs[1]);
}

std::vector<VertexSet> connected_components(const SimpleGraph& g) {
    int n = g.order();
    if (n > 64) throw std::invalid_argument("components via mask need n <= 64");
    std::vector<VertexSet> comps;
    std::uint64_t seen = 0;
    for (int s = 0; s < n; ++s) {
        if ((seen >> s) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << s;
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = __builtin_ctzll(f);
                f &= f - 1;
                next |= g.neighbors_mask(v);
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        comps.emplace_back(comp);
    }
    return comps;
}

bool is_connected(const SimpleGraph& g) {
    if (g.order() == 0) return true;
    return connected_components(g).size() == 1;
}

int min_degree(const SimpleGraph& g) {
    int n = g.order();
    if (n == 0) throw std::invalid_argument("min_degree of the empty graph");
    int d = n;
    for (int v = 0; v < n; ++v) d = std::min(d, g.degree(v));
    return d;
}

// ---- graph6 ---------------------------------------------------------------

std::string graph6_encode(const SimpleGraph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for graph6");
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

SimpleGraph graph6_decode(const std::string& s) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > s.size()) throw Graph6Error("truncated graph6 string", s.size());
    };
    auto val = [&](std::size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw Graph6Error("invalid graph6 character", i);
        return c - 63;
    };
    need(1);
    long n;
    if (s[pos] == 126) {
        need(4);
        n = (static_cast<long>(val(pos + 1)) << 12) |
            (static_cast<long>(val(pos + 2)) << 6) | val(pos + 3);
        pos += 4;
    } else {
        n = val(pos);
        pos += 1;
    }
    long nbits = n * (n - 1) / 2;
    std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() != pos + nbytes)
        throw Graph6Error("graph6 length mismatch", s.size());
    SimpleGraph g(static_cast<int>(n));
    long bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = val(pos + static_cast<std::size_t>(bit / 6));
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    // Padding bits must be zero.
    for (long b = nbits; b < static_cast<long>(nbytes) * 6; ++b) {
        int byte = val(pos + static_cast<std::size_t>(b / 6));
        if ((byte >> (5 - b % 6)) & 1)
            throw Graph6Error("nonzero padding bit", pos + static_cast<std::size_t>(b / 6));
    }
    return g;
}

}  // namespace hamspec
