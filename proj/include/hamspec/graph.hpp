#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamspec {

/// Set of vertex indices as a 64-bit mask. Only valid for graphs with at
/// most 64 vertices, which covers every enumeration and oracle workload.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t b) : bits(b) {}

    bool contains(int v) const { return (bits >> v) & 1u; }
    void add(int v) { bits |= (std::uint64_t{1} << v); }
    void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
    int size() const { return __builtin_popcountll(bits); }
    bool empty() const { return bits == 0; }

    static VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << n) - 1);
    }

    bool operator==(const VertexSet&) const = default;
};

/// Undirected simple graph stored as one bitset row per vertex.
/// Rows are multi-word so orders beyond 64 are legal; the fast single-word
/// accessors check that n <= 64.
class SimpleGraph {
public:
    SimpleGraph() : n_(0), words_(1) {}
    explicit SimpleGraph(int n)
        : n_(n), words_(n <= 0 ? 1 : (n + 63) / 64),
          adj_(static_cast<std::size_t>(std::max(n, 0)) * words_, 0) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[row_index(u) + v / 64] >> (v % 64)) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj_[row_index(u) + v / 64] |= std::uint64_t{1} << (v % 64);
        adj_[row_index(v) + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[row_index(u) + v / 64] &= ~(std::uint64_t{1} << (v % 64));
        adj_[row_index(v) + u / 64] &= ~(std::uint64_t{1} << (u % 64));
    }

    int degree(int u) const {
        check_vertex(u);
        int d = 0;
        for (int w = 0; w < words_; ++w)
            d += __builtin_popcountll(adj_[row_index(u) + w]);
        return d;
    }

    long edge_count() const {
        long total = 0;
        for (int u = 0; u < n_; ++u) total += degree(u);
        return total / 2;
    }

    /// Adjacency row as a single word; requires n <= 64.
    std::uint64_t neighbors_mask(int u) const {
        check_vertex(u);
        if (n_ > 64) throw std::invalid_argument("graph too large for mask access");
        return adj_[row_index(u)];
    }

    std::span<const std::uint64_t> row(int u) const {
        check_vertex(u);
        return {adj_.data() + row_index(u), static_cast<std::size_t>(words_)};
    }

    bool operator==(const SimpleGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

    // ---- named constructions -------------------------------------------
    static SimpleGraph empty(int n) { return SimpleGraph(n); }
    static SimpleGraph complete(int n);
    static SimpleGraph cycle(int n);
    static SimpleGraph path(int n);
    static SimpleGraph complete_bipartite(int p, int q);
    static SimpleGraph petersen();
    static SimpleGraph from_edges(int n,
                                  std::initializer_list<std::pair<int, int>> edges);

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }
    std::size_t row_index(int u) const {
        return static_cast<std::size_t>(u) * words_;
    }

    int n_;
    int words_;
    std::vector<std::uint64_t> adj_;
};

/// Bipartite graph with an explicit (U, V) bipartition and a biadjacency
/// bit matrix. U vertices index 0..nL-1, V vertices 0..nR-1 on their side.
class BipartiteGraph {
public:
    BipartiteGraph() : nl_(0), nr_(0), words_(1) {}
    BipartiteGraph(int nl, int nr)
        : nl_(nl), nr_(nr), words_(nr <= 0 ? 1 : (nr + 63) / 64),
          biadj_(static_cast<std::size_t>(std::max(nl, 0)) * words_, 0) {
        if (nl < 0 || nr < 0) throw std::invalid_argument("negative part size");
    }

    int left_size() const { return nl_; }
    int right_size() const { return nr_; }
    int order() const { return nl_ + nr_; }
    bool balanced() const { return nl_ == nr_; }
    bool almost_balanced() const { return nl_ - nr_ == 1 || nr_ - nl_ == 1; }

    bool has_edge(int u, int v) const {
        check(u, v);
        return (biadj_[row_index(u) + v / 64] >> (v % 64)) & 1u;
    }
    void add_edge(int u, int v) {
        check(u, v);
        biadj_[row_index(u) + v / 64] |= std::uint64_t{1} << (v % 64);
    }
    void remove_edge(int u, int v) {
        check(u, v);
        biadj_[row_index(u) + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }

    int left_degree(int u) const {
        if (u < 0 || u >= nl_) throw std::out_of_range("left vertex out of range");
        int d = 0;
        for (int w = 0; w < words_; ++w)
            d += __builtin_popcountll(biadj_[row_index(u) + w]);
        return d;
    }
    int right_degree(int v) const {
        if (v < 0 || v >= nr_) throw std::out_of_range("right vertex out of range");
        int d = 0;
        for (int u = 0; u < nl_; ++u) d += has_edge(u, v) ? 1 : 0;
        return d;
    }
    int min_degree() const;
    long edge_count() const {
        long total = 0;
        for (int u = 0; u < nl_; ++u) total += left_degree(u);
        return total;
    }

    std::uint64_t left_row_mask(int u) const {
        if (nr_ > 64) throw std::invalid_argument("right part too large for mask access");
        if (u < 0 || u >= nl_) throw std::out_of_range("left vertex out of range");
        return biadj_[row_index(u)];
    }

    SimpleGraph as_simple() const;

    /// Reinterprets a SimpleGraph whose vertices 0..nl-1 / nl.. are the two
    /// parts. Rejects graphs with within-part edges.
    static BipartiteGraph from_simple(const SimpleGraph& g, int nl);

    static BipartiteGraph complete(int nl, int nr);

    bool operator==(const BipartiteGraph& other) const {
        return nl_ == other.nl_ && nr_ == other.nr_ && biadj_ == other.biadj_;
    }

private:
    void check(int u, int v) const {
        if (u < 0 || u >= nl_) throw std::out_of_range("left vertex out of range");
        if (v < 0 || v >= nr_) throw std::out_of_range("right vertex out of range");
    }
    std::size_t row_index(int u) const {
        return static_cast<std::size_t>(u) * words_;
    }

    int nl_, nr_;
    int words_;
    std::vector<std::uint64_t> biadj_;
};

// ---- structural operations ---------------------------------------------

SimpleGraph complement(const SimpleGraph& g);
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);
SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);
SimpleGraph induced(const SimpleGraph& g, VertexSet s);
SimpleGraph delete_edge(const SimpleGraph& g, int u, int v);

std::optional<int> is_regular(const SimpleGraph& g);

struct SemiRegularWitness {
    int p = 0;  // degree on the U side
    int q = 0;  // degree on the V side, q != p
    VertexSet left;
    VertexSet right;
};

/// Detects a (p,q)-semi-regular bipartition with p != q. Regular bipartite
/// graphs (p == q) and non-bipartite graphs yield nullopt. Requires n <= 64.
std::optional<SemiRegularWitness> is_semiregular_bipartite(const SimpleGraph& g);

std::vector<VertexSet> connected_components(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);
int min_degree(const SimpleGraph& g);  // throws on n == 0

/// Bipartition of a connected-or-not bipartite graph (left = color 0 of each
/// component, lowest vertex first); nullopt if an odd cycle exists.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const SimpleGraph& g);

// ---- graph6 --------------------------------------------------------------

struct Graph6Error : std::runtime_error {
    std::size_t offset;
    Graph6Error(const std::string& what, std::size_t off)
        : std::runtime_error(what + " at byte " + std::to_string(off)),
          offset(off) {}
};

std::string graph6_encode(const SimpleGraph& g);
SimpleGraph graph6_decode(const std::string& s);

}  // namespace hamspec
