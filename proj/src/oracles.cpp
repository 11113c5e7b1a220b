#include "hamspec/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>

namespace hamspec {

std::string to_string(Property p) {
    switch (p) {
        case Property::HAM_CYCLE: return "ham-cycle";
        case Property::HAM_PATH: return "ham-path";
        case Property::HAM_CONNECTED: return "ham-connected";
        case Property::Q_HAM: return "q-hamiltonian";
        case Property::Q_TRACEABLE: return "q-traceable";
        case Property::Q_EDGE_HAM: return "q-edge-hamiltonian";
        case Property::Q_PATH_COVER: return "q-path-cover";
        case Property::QQ_HAM: return "qq-hamiltonian";
        case Property::QQ_TRACEABLE: return "qq-traceable";
        case Property::PQ_TRACEABLE: return "pq-traceable";
        case Property::VERTEX_CONN: return "vertex-connectivity";
        case Property::EDGE_CONN: return "edge-connectivity";
    }
    throw std::logic_error("unknown property");
}

std::optional<Property> parse_property(const std::string& s) {
    for (Property p : {Property::HAM_CYCLE, Property::HAM_PATH, Property::HAM_CONNECTED,
                       Property::Q_HAM, Property::Q_TRACEABLE, Property::Q_EDGE_HAM,
                       Property::Q_PATH_COVER, Property::QQ_HAM, Property::QQ_TRACEABLE,
                       Property::PQ_TRACEABLE, Property::VERTEX_CONN, Property::EDGE_CONN})
        if (to_string(p) == s) return p;
    return std::nullopt;
}

namespace {

void check_cap(const SimpleGraph& g, int cap, const char* who) {
    if (cap > 24) cap = 24;
    if (g.order() > cap)
        throw CapacityError(std::string(who) + ": graph exceeds the " +
                            std::to_string(cap) + "-vertex budget");
}

/// dp[S] = endpoint mask of paths covering exactly S (start fixed when
/// start >= 0, otherwise any start vertex).
std::vector<std::uint32_t> path_endpoints(const SimpleGraph& g, int start) {
    int n = g.order();
    std::vector<std::uint32_t> adj(n);
    for (int v = 0; v < n; ++v)
        adj[v] = static_cast<std::uint32_t>(g.neighbors_mask(v));
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    if (start >= 0)
        dp[std::uint32_t{1} << start] = std::uint32_t{1} << start;
    else
        for (int v = 0; v < n; ++v) dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;
    for (std::uint32_t s = 1; s < dp.size(); ++s) {
        std::uint32_t ends = dp[s];
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t next = adj[v] & ~s;
            while (next) {
                int w = std::countr_zero(next);
                next &= next - 1;
                dp[s | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
            }
        }
    }
    return dp;
}

/// Walks a dp table backwards from (full set, end) to the path's start.
/// Ties break toward the lowest vertex index.
std::vector<int> reconstruct_path(const SimpleGraph& g,
                                  const std::vector<std::uint32_t>& dp, int end) {
    int n = g.order();
    std::uint32_t s = (std::uint32_t{1} << n) - 1;
    std::vector<int> rev{end};
    int cur = end;
    while ((s & (s - 1)) != 0) {
        std::uint32_t prev_set = s & ~(std::uint32_t{1} << cur);
        std::uint32_t candidates =
            dp[prev_set] & static_cast<std::uint32_t>(g.neighbors_mask(cur));
        int prev = std::countr_zero(candidates);
        rev.push_back(prev);
        s = prev_set;
        cur = prev;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

bool is_traceable(const SimpleGraph& g, int cap) {
    if (g.order() == 0) return false;
    if (g.order() == 1) return true;
    check_cap(g, cap, "hamiltonian_path");
    auto dp = path_endpoints(g, -1);
    return dp.back() != 0;
}

bool is_hamiltonian(const SimpleGraph& g, int cap) {
    int n = g.order();
    if (n < 3) return false;
    check_cap(g, cap, "hamiltonian_cycle");
    auto dp = path_endpoints(g, 0);
    std::uint32_t closing =
        dp.back() & static_cast<std::uint32_t>(g.neighbors_mask(0));
    return closing != 0;
}

/// Backtracking Hamiltonian-cycle search where every edge in `forced` must
/// appear on the cycle. `forced` is a linear forest inside g.
bool forced_ham_cycle(const SimpleGraph& g,
                      const std::vector<std::pair<int, int>>& forced) {
    int n = g.order();
    if (n < 3) return false;
    std::vector<std::uint32_t> adj(n), fadj(n, 0);
    for (int v = 0; v < n; ++v)
        adj[v] = static_cast<std::uint32_t>(g.neighbors_mask(v));
    for (auto [a, b] : forced) {
        fadj[a] |= std::uint32_t{1} << b;
        fadj[b] |= std::uint32_t{1} << a;
    }
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::uint32_t closing_required = 0;  // forced final vertex, as a bit

    // Grows a path 0, ..., cur. A vertex's forced edges must end up as its
    // two cycle neighbors, so once an interior vertex has a pending forced
    // edge the next step is determined.
    std::function<bool(int, int, std::uint32_t)> search =
        [&](int prev, int cur, std::uint32_t visited) -> bool {
        if (visited == full) {
            if (!(adj[cur] & 1u)) return false;  // must close back to 0
            if (closing_required && !(closing_required & (std::uint32_t{1} << cur)))
                return false;
            std::uint32_t cur_nbrs = 1u | (std::uint32_t{1} << prev);
            return (fadj[cur] & ~cur_nbrs) == 0;
        }
        std::uint32_t pending = fadj[cur] & ~(std::uint32_t{1} << prev);
        std::uint32_t options = adj[cur] & ~visited;
        if (pending) {
            if (pending & (pending - 1)) return false;  // two pending forced edges
            options &= pending;
        }
        while (options) {
            int w = std::countr_zero(options);
            options &= options - 1;
            if (search(cur, w, visited | (std::uint32_t{1} << w))) return true;
        }
        return false;
    };

    // Start at 0. If 0 has forced edges, one is the first step (direction is
    // WLOG) and the other, if present, must be the closing vertex.
    std::uint32_t f0 = fadj[0];
    if (std::popcount(f0) > 2) return false;
    std::uint32_t first_options = f0 ? (adj[0] & f0) : adj[0];
    while (first_options) {
        int w = std::countr_zero(first_options);
        first_options &= first_options - 1;
        closing_required = f0 & ~(std::uint32_t{1} << w);
        if (search(0, w, 1u | (std::uint32_t{1} << w))) return true;
    }
    return false;
}

/// Dense-matrix Edmonds–Karp.
int max_flow(std::vector<std::vector<int>> cap, int s, int t) {
    int n = static_cast<int>(cap.size());
    int flow = 0;
    for (;;) {
        std::vector<int> parent(n, -1);
        parent[s] = s;
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty() && parent[t] == -1) {
            int u = bfs.front();
            bfs.pop();
            for (int v = 0; v < n; ++v)
                if (parent[v] == -1 && cap[u][v] > 0) {
                    parent[v] = u;
                    bfs.push(v);
                }
        }
        if (parent[t] == -1) return flow;
        int aug = INT32_MAX;
        for (int v = t; v != s; v = parent[v]) aug = std::min(aug, cap[parent[v]][v]);
        for (int v = t; v != s; v = parent[v]) {
            cap[parent[v]][v] -= aug;
            cap[v][parent[v]] += aug;
        }
        flow += aug;
    }
}

constexpr int kInf = 1 << 28;

}  // namespace

bool validate_certificate(const SimpleGraph& g, const Certificate& c) {
    auto distinct_and_edges = [&](const std::vector<int>& seq, bool closed) {
        std::uint64_t seen = 0;
        for (int v : seq) {
            if (v < 0 || v >= g.order()) return false;
            if (seen & (std::uint64_t{1} << v)) return false;
            seen |= std::uint64_t{1} << v;
        }
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (!g.has_edge(seq[i], seq[i + 1])) return false;
        if (closed && !g.has_edge(seq.back(), seq.front())) return false;
        return true;
    };
    switch (c.kind) {
        case Certificate::Kind::CYCLE: {
            if (c.sequences.size() != 1) return false;
            const auto& seq = c.sequences[0];
            return static_cast<int>(seq.size()) == g.order() && g.order() >= 3 &&
                   distinct_and_edges(seq, true);
        }
        case Certificate::Kind::PATH: {
            if (c.sequences.size() != 1) return false;
            const auto& seq = c.sequences[0];
            return static_cast<int>(seq.size()) == g.order() &&
                   distinct_and_edges(seq, false);
        }
        case Certificate::Kind::PATH_SYSTEM: {
            std::uint64_t covered = 0;
            for (const auto& seq : c.sequences) {
                if (seq.empty() || !distinct_and_edges(seq, false)) return false;
                for (int v : seq) {
                    if (covered & (std::uint64_t{1} << v)) return false;
                    covered |= std::uint64_t{1} << v;
                }
            }
            return std::popcount(covered) == g.order();
        }
        case Certificate::Kind::CUT:
        case Certificate::Kind::NONE:
            return true;
    }
    return false;
}

std::optional<Certificate> hamiltonian_cycle(const SimpleGraph& g, int cap) {
    int n = g.order();
    if (n < 3) return std::nullopt;
    check_cap(g, cap, "hamiltonian_cycle");
    auto dp = path_endpoints(g, 0);
    std::uint32_t closing =
        dp.back() & static_cast<std::uint32_t>(g.neighbors_mask(0));
    if (!closing) return std::nullopt;
    int end = std::countr_zero(closing);
    Certificate c;
    c.kind = Certificate::Kind::CYCLE;
    c.sequences = {reconstruct_path(g, dp, end)};
    return c;
}

std::optional<Certificate> hamiltonian_path(const SimpleGraph& g, int cap) {
    int n = g.order();
    if (n == 0) return std::nullopt;
    check_cap(g, cap, "hamiltonian_path");
    if (n == 1) {
        Certificate c;
        c.kind = Certificate::Kind::PATH;
        c.sequences = {{0}};
        return c;
    }
    auto dp = path_endpoints(g, -1);
    if (!dp.back()) return std::nullopt;
    int end = std::countr_zero(dp.back());
    Certificate c;
    c.kind = Certificate::Kind::PATH;
    c.sequences = {reconstruct_path(g, dp, end)};
    return c;
}

bool hamilton_connected(const SimpleGraph& g, int cap) {
    int n = g.order();
    if (n <= 1) return true;
    check_cap(g, cap, "hamilton_connected");
    for (int u = 0; u < n; ++u) {
        auto dp = path_endpoints(g, u);
        std::uint32_t reachable = dp.back();
        for (int v = u + 1; v < n; ++v)
            if (!((reachable >> v) & 1u)) return false;
    }
    return true;
}

bool q_property(const SimpleGraph& g, Property property, int q, int cap) {
    int n = g.order();
    if (property != Property::Q_HAM && property != Property::Q_TRACEABLE)
        throw std::invalid_argument("q_property: property must be Q_HAM or Q_TRACEABLE");
    if (q < 0) throw std::invalid_argument("q_property: q must be >= 0");
    if (property == Property::Q_HAM && q > n - 3)
        throw std::invalid_argument("q_property: Q_HAM needs q <= n-3");
    if (property == Property::Q_TRACEABLE && q > n - 1)
        throw std::invalid_argument("q_property: Q_TRACEABLE needs q <= n-1");
    check_cap(g, cap, "q_property");
    VertexSet all = VertexSet::full(n);
    for (int size = 0; size <= q; ++size) {
        // Gosper's hack over removal sets of the given size
        std::uint64_t s = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
        do {
            VertexSet keep(all.bits & ~s);
            SimpleGraph h = induced(g, keep);
            bool ok = property == Property::Q_HAM ? is_hamiltonian(h, cap)
                                                  : is_traceable(h, cap);
            if (!ok) return false;
            if (size == 0) break;
            std::uint64_t c = s & -s, r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        } while (s < (std::uint64_t{1} << n));
    }
    return true;
}

bool q_edge_hamiltonian(const SimpleGraph& g, int q, int cap) {
    int n = g.order();
    if (q < 0 || q > n) throw std::invalid_argument("q_edge_hamiltonian: need 0 <= q <= n");
    check_cap(g, cap, "q_edge_hamiltonian");

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) edges.emplace_back(u, v);

    long budget = kForestBudget;
    std::vector<std::pair<int, int>> forest;
    std::vector<int> fdeg(n, 0);
    std::vector<int> dsu(n);
    for (int i = 0; i < n; ++i) dsu[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
        return x;
    };

    // Enumerate linear forests as increasing-index edge subsets; check each.
    std::function<bool(std::size_t)> sweep = [&](std::size_t from) -> bool {
        if (--budget < 0) throw CapacityError("q_edge_hamiltonian: forest budget exceeded");
        if (!forced_ham_cycle(g, forest)) return false;
        if (static_cast<int>(forest.size()) == q) return true;
        for (std::size_t i = from; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (fdeg[u] >= 2 || fdeg[v] >= 2) continue;
            int ru = find(u), rv = find(v);
            if (ru == rv) continue;  // would close a cycle
            auto saved_dsu = dsu;
            dsu[ru] = rv;
            ++fdeg[u];
            ++fdeg[v];
            forest.emplace_back(u, v);
            bool ok = sweep(i + 1);
            forest.pop_back();
            --fdeg[u];
            --fdeg[v];
            dsu = saved_dsu;
            if (!ok) return false;
        }
        return true;
    };
    return sweep(0);
}

int min_path_cover(const SimpleGraph& g, int cap) {
    int n = g.order();
    if (n == 0) return 0;
    if (n > cap || n > 24)
        throw CapacityError("min_path_cover: graph exceeds the " +
                            std::to_string(std::min(cap, 24)) + "-vertex budget");
    auto dp = path_endpoints(g, -1);
    std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
    std::vector<int> cover(std::size_t{1} << n, n + 1);
    cover[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        int low = std::countr_zero(s);
        std::uint32_t low_bit = std::uint32_t{1} << low;
        // enumerate submasks of s containing the lowest vertex
        for (std::uint32_t t = s; t; t = (t - 1) & s) {
            if (!(t & low_bit)) continue;
            if (dp[t] == 0) continue;
            cover[s] = std::min(cover[s], 1 + cover[s & ~t]);
        }
    }
    return cover[full];
}

bool bipartite_qq(const BipartiteGraph& g, Property property, int p, int q, int cap) {
    int nl = g.left_size(), nr = g.right_size();
    if (p < 0 || q < 0) throw std::invalid_argument("bipartite_qq: negative removal count");
    if (p > nl || q > nr)
        throw std::invalid_argument("bipartite_qq: removal exceeds a part");
    bool hamiltonian;
    switch (property) {
        case Property::QQ_HAM:
            if (p != q) throw std::invalid_argument("bipartite_qq: QQ_HAM takes p = q");
            if (nl - p != nr - q)
                throw std::invalid_argument("bipartite_qq: remainder must be balanced");
            hamiltonian = true;
            break;
        case Property::QQ_TRACEABLE:
            if (p != q) throw std::invalid_argument("bipartite_qq: QQ_TRACEABLE takes p = q");
            if (std::abs((nl - p) - (nr - q)) > 1)
                throw std::invalid_argument("bipartite_qq: remainder must be near-balanced");
            hamiltonian = false;
            break;
        case Property::PQ_TRACEABLE:
            if (std::abs((nl - p) - (nr - q)) > 1)
                throw std::invalid_argument("bipartite_qq: remainder must be near-balanced");
            hamiltonian = false;
            break;
        default:
            throw std::invalid_argument("bipartite_qq: property must be a (p,q)-variant");
    }
    SimpleGraph s = g.as_simple();
    check_cap(s, cap, "bipartite_qq");
    VertexSet all = VertexSet::full(s.order());

    // enumerate p-subsets of U and q-subsets of V
    std::vector<int> upick(p), vpick(q);
    std::function<bool(int, int)> loop_v = [&](int start, int chosen) -> bool {
        if (chosen == q) {
            VertexSet keep = all;
            for (int u : upick) keep.remove(u);
            for (int v : vpick) keep.remove(v);
            SimpleGraph h = induced(s, keep);
            return hamiltonian ? is_hamiltonian(h, cap) : is_traceable(h, cap);
        }
        for (int v = start; v < nr; ++v) {
            vpick[chosen] = nl + v;
            if (!loop_v(v + 1, chosen + 1)) return false;
        }
        return true;
    };
    std::function<bool(int, int)> loop_u = [&](int start, int chosen) -> bool {
        if (chosen == p) return loop_v(0, 0);
        for (int u = start; u < nl; ++u) {
            upick[chosen] = u;
            if (!loop_u(u + 1, chosen + 1)) return false;
        }
        return true;
    };
    return loop_u(0, 0);
}

int vertex_connectivity(const SimpleGraph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    int best = n - 1;  // kappa(K_n) = n-1 by convention
    bool any_pair = false;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            any_pair = true;
            // split-vertex network: 2i = in, 2i+1 = out
            std::vector<std::vector<int>> cap(2 * n, std::vector<int>(2 * n, 0));
            for (int w = 0; w < n; ++w) cap[2 * w][2 * w + 1] = 1;
            cap[2 * u][2 * u + 1] = kInf;
            cap[2 * v][2 * v + 1] = kInf;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (a != b && g.has_edge(a, b)) cap[2 * a + 1][2 * b] = kInf;
            best = std::min(best, max_flow(std::move(cap), 2 * u + 1, 2 * v));
        }
    }
    return any_pair ? best : n - 1;
}

int edge_connectivity(const SimpleGraph& g) {
    int n = g.order();
    if (n <= 1) return 0;
    int best = kInf;
    for (int v = 1; v < n; ++v) {
        std::vector<std::vector<int>> cap(n, std::vector<int>(n, 0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && g.has_edge(a, b)) cap[a][b] = 1;
        best = std::min(best, max_flow(std::move(cap), 0, v));
    }
    return best;
}

SimpleGraph kelmans(const SimpleGraph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("kelmans: u and v must differ");
    int n = g.order();
    if (n > 64) throw std::invalid_argument("kelmans: graphs above 64 vertices unsupported");
    std::uint64_t nu = g.neighbors_mask(u), nv = g.neighbors_mask(v);
    std::uint64_t moved = nv & ~(nu | (std::uint64_t{1} << u));
    std::uint64_t other = nu & ~(nv | (std::uint64_t{1} << v));
    if (!moved || !other)
        throw std::invalid_argument("kelmans: transformation not applicable to this pair");
    SimpleGraph h = g;
    std::uint64_t m = moved;
    while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        h.remove_edge(v, w);
        h.add_edge(u, w);
    }
    return h;
}

}  // namespace hamspec
